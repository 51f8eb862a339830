#pragma once

// Exact integer linear algebra over arbitrary-precision integers.
//
// Row-vector convention throughout: a lattice is the row span of a matrix and
// linear maps act by right multiplication. The exception is solve_linear,
// which solves the column system A x = b.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace specialred {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of exact integers. Empty shapes (0 x n, n x 0) are
/// legal.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows,
                             std::size_t cols = 0);
  static IntMatrix diagonal(std::span<const Integer> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Integer> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const Integer> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  IntVector row_vector(std::size_t r) const;
  IntVector column_vector(std::size_t c) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source,
                        const Integer& factor);
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source,
                        const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  IntMatrix transpose() const;
  /// Rows [row_begin, row_end) as a new matrix.
  IntMatrix row_slice(std::size_t row_begin, std::size_t row_end) const;
  IntMatrix hstack(const IntMatrix& right) const;
  IntMatrix vstack(const IntMatrix& below) const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_diagonal() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// v * A for a row vector v.
IntVector row_times(std::span<const Integer> v, const IntMatrix& a);
/// A * x for a column vector x.
IntVector times_column(const IntMatrix& a, std::span<const Integer> x);

/// gcd of all entries; 0 for an empty or zero vector.
Integer content(std::span<const Integer> v);

struct HermiteDecomposition {
  IntMatrix form;       // H
  IntMatrix transform;  // U, unimodular, U * A = H
  std::size_t rank = 0; // number of nonzero rows of H (they come first)
};

/// Row-style Hermite normal form: pivots positive, strictly increasing pivot
/// columns, entries above a pivot reduced into [0, pivot), zero rows last.
HermiteDecomposition hnf(const IntMatrix& a);

struct SmithDecomposition {
  IntMatrix left;   // U, unimodular
  IntMatrix diag;   // S = U * A * V
  IntMatrix right;  // V, unimodular
  IntVector invariant_factors;  // positive, each divides the next
};

SmithDecomposition snf(const IntMatrix& a);

/// Invariant factors only; skips the transform bookkeeping.
IntVector invariant_factors(const IntMatrix& a);

/// Rows form a basis of the (saturated) left kernel {x : x A = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

/// Some integer x with A x = b, or nullopt. Throws DimensionMismatch.
std::optional<IntVector> solve_linear(const IntMatrix& a,
                                      std::span<const Integer> b);

/// Proof that A x = b has no integer solution: u A is divisible by `modulus`
/// entrywise while u b is not. A modulus of 0 means u A = 0 and u b != 0.
struct InfeasibilityCertificate {
  IntVector multiplier;
  Integer modulus;
};

struct LinearSolveResult {
  std::optional<IntVector> solution;
  std::optional<InfeasibilityCertificate> certificate;
};

/// As solve_linear, but a failure comes with a checkable certificate.
LinearSolveResult solve_linear_certified(const IntMatrix& a,
                                         std::span<const Integer> b);

bool verify_certificate(const IntMatrix& a, std::span<const Integer> b,
                        const InfeasibilityCertificate& cert);

/// Coefficients y with y * basis = v, if v lies in the row lattice of basis.
/// `basis` need not have independent rows.
std::optional<IntVector> solve_row_combination(const IntMatrix& basis,
                                               std::span<const Integer> v);

/// Rank over Q (fraction-free elimination).
std::size_t rank(const IntMatrix& a);

Integer determinant(const IntMatrix& a);

bool is_unimodular(const IntMatrix& a);

/// True iff the row lattice is saturated in Z^cols. Throws RankDeficient when
/// the rows are dependent.
bool is_saturated(const IntMatrix& rows);

}  // namespace specialred
