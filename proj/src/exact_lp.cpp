#include "exact_lp.hpp"

#include <cstddef>

namespace toricflex::detail {

bool exact_feasible(const RationalMatrix& a, const std::vector<mpq_class>& b) {
  const std::size_t m = a.size();
  if (m == 0) return true;
  const std::size_t n = a.front().size();
  const std::size_t width = n + m + 1;  // originals, artificials, rhs
  const std::size_t rhs = n + m;

  std::vector<std::vector<mpq_class>> t(m, std::vector<mpq_class>(width));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int s = sgn(b[i]) < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = s * a[i][j];
    t[i][n + i] = 1;
    t[i][rhs] = s * b[i];
    basis[i] = n + i;
  }
  auto cost = [&](std::size_t j) { return j >= n ? 1 : 0; };

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < rhs && enter == width; ++j) {
      mpq_class reduced = cost(j);
      for (std::size_t i = 0; i < m; ++i)
        if (cost(basis[i])) reduced -= t[i][j];
      if (sgn(reduced) < 0) enter = j;
    }
    if (enter == width) break;

    std::size_t leave = m;
    mpq_class best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      mpq_class ratio = t[i][rhs] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    // Phase one is bounded below by zero, so some row always qualifies.
    if (leave == m) break;

    const mpq_class pivot = t[leave][enter];
    for (auto& e : t[leave]) e /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      const mpq_class factor = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
  }

  mpq_class infeasibility = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (cost(basis[i])) infeasibility += t[i][rhs];
  return sgn(infeasibility) == 0;
}

}  // namespace toricflex::detail
