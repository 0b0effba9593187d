#include "toricflex/int_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "toricflex/errors.hpp"

namespace toricflex {

IntVector make_vector(std::initializer_list<long> entries) {
  IntVector v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

std::string to_string(std::span<const Integer> v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i].get_str();
  out << ')';
  return out.str();
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    for (long e : r) data_.emplace_back(e);
  }
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_)
      throw Error(ErrorKind::DimensionMismatch, "row " + std::to_string(r) + " has length " +
                                                    std::to_string(rows[r].size()) + ", expected " +
                                                    std::to_string(m.cols_));
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * m.cols_);
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorKind::DimensionMismatch, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " by " +
                                                  std::to_string(b.rows()) + "x" +
                                                  std::to_string(b.cols()));
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << (r ? "," : "") << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? "," : "") << m(r, c).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Least |entry| among nonzero entries of the submatrix starting at (t, t).
// Row-major scan with strict comparison keeps the lowest (row, col) on ties.
bool find_pivot(const IntMatrix& a, std::size_t t, Position& out) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      if (!found || mpz_cmpabs(a(i, j).get_mpz_t(), best.get_mpz_t()) < 0) {
        best = abs(a(i, j));
        out = {i, j};
        found = true;
      }
    }
  return found;
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
  if (m.empty()) throw Error(ErrorKind::EmptyMatrix, "snf of an empty matrix");
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t diag = std::min(m.rows(), m.cols());

  std::size_t t = 0;
  for (; t < diag; ++t) {
    Position p{};
    if (!find_pivot(a, t, p)) break;
    for (;;) {
      a.swap_rows(t, p.row);
      u.swap_rows(t, p.row);
      a.swap_cols(t, p.col);
      v.swap_cols(t, p.col);

      bool clean = true;
      Integer q;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (sgn(a(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        q = -q;
        a.add_row_multiple(i, t, q);
        u.add_row_multiple(i, t, q);
        if (sgn(a(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (sgn(a(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        q = -q;
        a.add_col_multiple(j, t, q);
        v.add_col_multiple(j, t, q);
        if (sgn(a(t, j)) != 0) clean = false;
      }
      if (!clean) {
        find_pivot(a, t, p);
        continue;
      }

      // Pivot must divide the rest of the active block; otherwise fold the
      // offending row in and reduce again.
      bool divides = true;
      for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            a.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
      find_pivot(a, t, p);
    }
    if (sgn(a(t, t)) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }

  SnfResult result{std::move(u), std::move(a), std::move(v), {}};
  for (std::size_t i = 0; i < t; ++i) result.invariant_factors.push_back(result.D(i, i));
  return result;
}

std::size_t rank(const IntMatrix& m) {
  if (m.empty()) throw Error(ErrorKind::EmptyMatrix, "rank of an empty matrix");
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (sgn(a(i, c)) == 0) continue;
      const Integer scale = a(r, c);
      const Integer factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = scale * a(i, j) - factor * a(r, j);
      const Integer g = content(std::span<const Integer>(&a(i, 0), a.cols()));
      if (g > 1)
        for (std::size_t j = c; j < a.cols(); ++j) mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), g.get_mpz_t());
    }
    ++r;
  }
  return r;
}

Integer det(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::NonSquare, "determinant of a " + std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()) + " matrix");
  if (m.empty()) return 1;
  IntMatrix a = m;
  const std::size_t n = a.rows();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& e : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  return g;
}

IntVector primitivize(std::span<const Integer> v) {
  const Integer g = content(v);
  if (g == 0) throw Error(ErrorKind::ZeroVector, "cannot primitivize the zero vector");
  IntVector out(v.begin(), v.end());
  for (auto& e : out) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
  return out;
}

bool extends_to_z_basis(std::span<const IntVector> vectors, std::size_t ambient_rank) {
  for (std::size_t i = 0; i < vectors.size(); ++i)
    if (vectors[i].size() != ambient_rank)
      throw Error(ErrorKind::DimensionMismatch, "vector " + std::to_string(i) + " has length " +
                                                    std::to_string(vectors[i].size()) +
                                                    " in ambient rank " + std::to_string(ambient_rank));
  if (vectors.empty()) return true;
  if (vectors.size() > ambient_rank) return false;
  const SnfResult s = snf(IntMatrix::from_rows(vectors));
  if (s.invariant_factors.size() != vectors.size()) return false;
  return std::all_of(s.invariant_factors.begin(), s.invariant_factors.end(),
                     [](const Integer& d) { return d == 1; });
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::DimensionMismatch, "dot product of lengths " + std::to_string(a.size()) +
                                                  " and " + std::to_string(b.size()));
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyMatrix: return "EmptyMatrix";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::MalformedFan: return "MalformedFan";
    case ErrorKind::NonSimplicial: return "NonSimplicial";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::BadCone: return "BadCone";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::NotSmooth: return "NotSmooth";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::InvalidFan: return "InvalidFan";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace toricflex
