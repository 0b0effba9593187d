#pragma once

// Exact integer matrices and the normal forms used by the lattice code.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace toricflex {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

IntVector make_vector(std::initializer_list<long> entries);
std::string to_string(std::span<const Integer> v);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  /// Stacks the given vectors as rows; all must share one length.
  static IntMatrix from_rows(std::span<const IntVector> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntMatrix transposed() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::string to_string(const IntMatrix& m);

struct SnfResult {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix D;  // rows x cols, diagonal
  IntMatrix V;  // cols x cols, unimodular
  std::vector<Integer> invariant_factors;
};

/// Smith normal form with U * M * V = D.
///
/// Pivoting always moves the nonzero entry of least absolute value in the
/// active submatrix to the corner, breaking ties by the lowest (row, col), so
/// the transforms are a deterministic function of M.
SnfResult snf(const IntMatrix& m);

/// Rational rank by fraction-free elimination.
std::size_t rank(const IntMatrix& m);

/// Determinant by Bareiss fraction-free elimination. Throws NonSquare.
Integer det(const IntMatrix& m);

/// Divides v by the gcd of its entries. Throws ZeroVector.
IntVector primitivize(std::span<const Integer> v);

Integer content(std::span<const Integer> v);

/// True iff the vectors are part of a Z-basis of Z^ambient_rank, i.e. they are
/// independent and every invariant factor of their matrix equals one.
bool extends_to_z_basis(std::span<const IntVector> vectors, std::size_t ambient_rank);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);

}  // namespace toricflex
