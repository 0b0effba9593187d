#include "toricflex/cone_geometry.hpp"

#include <algorithm>
#include <bit>

#include "exact_lp.hpp"
#include "toricflex/errors.hpp"

namespace toricflex {

namespace {

using detail::RationalMatrix;

// Inverse of a nonsingular square rational matrix by Gauss-Jordan.
RationalMatrix invert(RationalMatrix a) {
  const std::size_t n = a.size();
  RationalMatrix inv(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) throw Error(ErrorKind::NonSimplicial, "generators are linearly dependent");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const mpq_class pivot = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= pivot;
      inv[c][j] /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a[i][c]) == 0) continue;
      const mpq_class factor = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= factor * a[c][j];
        inv[i][j] -= factor * inv[c][j];
      }
    }
  }
  return inv;
}

// Clears denominators of a rational vector and returns the primitive integer
// vector pointing the same way.
IntVector primitive_direction(const std::vector<mpq_class>& v) {
  Integer lcm = 1;
  for (const auto& e : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  for (const auto& e : v) out.emplace_back(e.get_num() * (lcm / e.get_den()));
  return primitivize(out);
}

}  // namespace

std::vector<IntVector> facet_normals(std::span<const IntVector> generators) {
  const std::size_t k = generators.size();
  if (k == 0) return {};
  const std::size_t n = generators.front().size();
  // Rows of (M M^T)^{-1} M are the dual basis of the generators inside their
  // span; for square M this is the inverse transpose.
  RationalMatrix gram(k, std::vector<mpq_class>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(generators[i], generators[j]);
  const RationalMatrix gram_inv = invert(std::move(gram));

  std::vector<IntVector> normals;
  normals.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<mpq_class> row(n);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t c = 0; c < n; ++c) row[c] += gram_inv[i][j] * generators[j][c];
    normals.push_back(primitive_direction(row));
  }
  return normals;
}

std::vector<IntVector> facet_normals(const Fan& f, const Cone& c) {
  f.check_cone(c);
  return facet_normals(f.generators(c));
}

bool cone_contains(std::span<const IntVector> generators, std::span<const Integer> v) {
  if (generators.empty()) return std::all_of(v.begin(), v.end(), [](const Integer& e) { return sgn(e) == 0; });
  if (v.size() != generators.front().size())
    throw Error(ErrorKind::DimensionMismatch, "vector length " + std::to_string(v.size()) +
                                                  " in ambient rank " +
                                                  std::to_string(generators.front().size()));
  std::vector<IntVector> extended(generators.begin(), generators.end());
  extended.emplace_back(v.begin(), v.end());
  if (rank(IntMatrix::from_rows(extended)) != generators.size()) return false;
  for (const auto& normal : facet_normals(generators))
    if (sgn(dot(normal, v)) < 0) return false;
  return true;
}

bool cone_contains(const Fan& f, const Cone& c, std::span<const Integer> v) {
  f.check_cone(c);
  if (v.size() != f.ambient_rank())
    throw Error(ErrorKind::DimensionMismatch, "vector length " + std::to_string(v.size()) +
                                                  " in ambient rank " + std::to_string(f.ambient_rank()));
  return cone_contains(f.generators(c), v);
}

FaceLattice face_lattice(const Cone& c) {
  const auto& idx = c.ray_indices();
  const std::size_t d = idx.size();
  if (d >= 8 * sizeof(unsigned long long))
    throw Error(ErrorKind::BadCone, "face lattice of a " + std::to_string(d) + "-dimensional cone");
  FaceLattice lattice{c, {}};
  lattice.faces.reserve(std::size_t{1} << d);
  for (unsigned long long mask = 0; mask < (1ULL << d); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < d; ++i)
      if (mask & (1ULL << i)) subset.push_back(idx[i]);
    lattice.faces.push_back({Cone(std::move(subset)), static_cast<std::size_t>(std::popcount(mask))});
  }
  std::sort(lattice.faces.begin(), lattice.faces.end(), [](const Face& a, const Face& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.cone < b.cone;
  });
  return lattice;
}

std::size_t orbit_codim(const Cone& c) { return c.size(); }

QuotientGroup quotient_group(std::span<const IntVector> generators, std::size_t ambient_rank) {
  if (generators.size() != ambient_rank)
    throw Error(ErrorKind::NotFullDimensional, std::to_string(generators.size()) +
                                                   " generators in ambient rank " +
                                                   std::to_string(ambient_rank));
  const SnfResult s = snf(IntMatrix::from_rows(generators));
  if (s.invariant_factors.size() != ambient_rank)
    throw Error(ErrorKind::NotFullDimensional, "generators span a proper subspace");
  QuotientGroup g;
  for (const auto& d : s.invariant_factors) {
    if (d == 1) continue;
    g.invariant_factors.push_back(d);
    g.order *= d;
  }
  return g;
}

QuotientGroup quotient_group(const Fan& f, const Cone& c) {
  f.check_cone(c);
  return quotient_group(f.generators(c), f.ambient_rank());
}

bool meet_in_common_face(const Fan& f, const Cone& a, const Cone& b) {
  f.check_cone(a);
  f.check_cone(b);
  // Look for x = sum_a alpha u + sum_S c+ s = sum_b beta w + sum_S c- s with
  // alpha, beta >= 0 and sum(alpha) + sum(beta) = 1. Such an x lies in both
  // cones but outside the cone on the shared rays S.
  std::vector<std::size_t> only_a, only_b, shared;
  for (auto i : a.ray_indices()) (b.contains(i) ? shared : only_a).push_back(i);
  for (auto i : b.ray_indices())
    if (!a.contains(i)) only_b.push_back(i);
  if (only_a.empty() && only_b.empty()) return true;

  const std::size_t n = f.ambient_rank();
  const std::size_t vars = only_a.size() + only_b.size() + 2 * shared.size();
  RationalMatrix lhs(n + 1, std::vector<mpq_class>(vars));
  std::vector<mpq_class> rhs(n + 1);
  std::size_t col = 0;
  for (auto i : only_a) {
    for (std::size_t r = 0; r < n; ++r) lhs[r][col] = f.ray(i)[r];
    lhs[n][col++] = 1;
  }
  for (auto i : only_b) {
    for (std::size_t r = 0; r < n; ++r) lhs[r][col] = -f.ray(i)[r];
    lhs[n][col++] = 1;
  }
  for (auto i : shared) {
    for (std::size_t r = 0; r < n; ++r) {
      lhs[r][col] = f.ray(i)[r];
      lhs[r][col + 1] = -f.ray(i)[r];
    }
    col += 2;
  }
  rhs[n] = 1;
  return !detail::exact_feasible(lhs, rhs);
}

}  // namespace toricflex
