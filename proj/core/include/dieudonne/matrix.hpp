#pragma once

#include <random>
#include <vector>

#include "dieudonne/padic_ring.hpp"

namespace dieudonne {

/// Dense matrix over W(F_{p^m}) / p^N.
///
/// Besides the entries, a matrix records its absolute precision: the entries
/// are meaningful modulo p^prec (prec <= N). Exact inputs have prec = N;
/// division by p lowers it and multiplication by p raises it again (capped at
/// N). Lattice code uses this to decide whether a span is determined by the
/// stored representatives.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Ring ring, int rows, int cols);

  static Matrix identity(Ring ring, int n);
  static Matrix scalar(Ring ring, int n, const RingElement& value);
  static Matrix random(Ring ring, int rows, int cols, std::mt19937_64& rng);

  const Ring& ring() const noexcept { return ring_; }
  const RingContext& ctx() const { return *ring_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  int prec() const noexcept { return prec_; }
  void set_prec(int prec);

  RingElement& at(int r, int c);
  const RingElement& at(int r, int c) const;

  Matrix column(int c) const;
  Matrix block(int r0, int c0, int nrows, int ncols) const;
  void set_block(int r0, int c0, const Matrix& src);

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  /// row[target] += factor * row[source].
  void add_row_multiple(int target, int source, const RingElement& factor);
  /// col[target] += factor * col[source].
  void add_col_multiple(int target, int source, const RingElement& factor);
  void scale_row(int r, const RingElement& factor);
  void scale_col(int c, const RingElement& factor);

  bool is_zero() const;
  /// Minimal entry valuation; the precision N for the zero matrix.
  int min_valuation() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Ring ring_;
  int rows_ = 0;
  int cols_ = 0;
  int prec_ = 0;
  std::vector<RingElement> entries_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix scalar_mul(const RingElement& c, const Matrix& a);

Matrix transpose(const Matrix& a);
/// Entrywise sigma^twist.
Matrix frobenius(const Matrix& a, int twist);
/// p^k * a with precision raised by k (capped at N).
Matrix scale_p(const Matrix& a, int k);
/// a / p^k; every entry must be divisible by p^k. Precision drops by k.
Matrix divide_p(const Matrix& a, int k);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const Matrix& a, const Matrix& b);
/// Entries reduced mod p^k.
Matrix truncate(const Matrix& a, int k);
bool congruent(const Matrix& a, const Matrix& b, int k);

/// R * A * Q = [diag(p^d_0, ..., p^d_{r-1}) 0; 0 0] with R, Q invertible.
///
/// Pivots are chosen by minimal valuation in the remaining submatrix, ties
/// broken by lowest row then lowest column. Each pivot is normalised to exactly
/// p^d. Elimination stops once the remaining entries all have valuation at
/// least the matrix precision; the number of pivots found is the rank.
struct SmithForm {
  std::vector<int> divisors;
  Matrix left;
  Matrix right;
  int rank = 0;
};

SmithForm elementary_divisors(const Matrix& a);

/// Column-style Hermite normal form: A * U = [0 | H] with U invertible and H
/// square upper triangular, diagonal entries exactly p^{h_i}, and every entry
/// above the diagonal in row i reduced modulo p^{h_i} coefficientwise.
///
/// Rows are processed bottom to top; in each row the pivot is the active column
/// of minimal valuation, lowest index on ties. Requires full row rank at the
/// matrix precision; throws PrecisionExhausted if a row has no certifiable
/// pivot or if the span is not determined modulo p^prec (largest elementary
/// divisor not below prec).
struct HermiteForm {
  Matrix form;
  Matrix transform;
  std::vector<int> diagonal;
  std::vector<int> divisors;
};

HermiteForm column_hnf(const Matrix& a);

/// A^{-1} = p^{-exponent} * integral for a square matrix nonsingular at its
/// precision. The integral part carries precision prec(A) - exponent.
struct ScaledMatrix {
  Matrix integral;
  int exponent = 0;
};

ScaledMatrix scaled_inverse(const Matrix& a);

/// Determinant by fraction-free expansion (Berkowitz), exact modulo p^N.
RingElement determinant(const Matrix& a);

/// Coefficients c_0..c_n of det(t*I - A), monic, via Berkowitz.
std::vector<RingElement> characteristic_polynomial(const Matrix& a);

}  // namespace dieudonne
