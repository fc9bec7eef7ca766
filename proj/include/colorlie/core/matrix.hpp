#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "colorlie/core/field.hpp"

namespace colorlie {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over a finite field. The field travels separately.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar{1};
    return m;
  }
  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t nrows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  Scalar operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  const Scalar* row(std::size_t i) const { return a_.data() + i * c_; }
  Scalar* row(std::size_t i) { return a_.data() + i * c_; }
  Vec row_vec(std::size_t i) const { return Vec(row(i), row(i) + c_); }
  Vec col_vec(std::size_t j) const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

struct Echelon {
  Matrix reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots; // pivot column per nonzero row
};

namespace linalg {

Matrix multiply(const Field& F, const Matrix& A, const Matrix& B);
Matrix add(const Field& F, const Matrix& A, const Matrix& B);
Matrix sub(const Field& F, const Matrix& A, const Matrix& B);
Matrix scale(const Field& F, Scalar s, const Matrix& A);
Matrix transpose(const Matrix& A);
Matrix power(const Field& F, const Matrix& A, long long e);
Vec apply(const Field& F, const Matrix& A, const Vec& x);
/// Row vector times matrix.
Vec apply_left(const Field& F, const Vec& x, const Matrix& A);
Scalar trace(const Field& F, const Matrix& A);

Vec vadd(const Field& F, const Vec& a, const Vec& b);
Vec vsub(const Field& F, const Vec& a, const Vec& b);
Vec vscale(const Field& F, Scalar s, const Vec& a);
/// a += s * b
void axpy(const Field& F, Vec& a, Scalar s, const Vec& b);
bool is_zero(const Vec& a);
Scalar dot(const Field& F, const Vec& a, const Vec& b);

Echelon rref(const Field& F, Matrix A);
std::size_t rank(const Field& F, const Matrix& A);
/// Basis of {x : A x = 0}, one vector per free column, in RREF order.
std::vector<Vec> kernel(const Field& F, const Matrix& A);
/// Some x with A x = b, or nothing.
std::optional<Vec> solve(const Field& F, const Matrix& A, const Vec& b);
std::optional<Matrix> inverse(const Field& F, const Matrix& A);
/// If A = c * I returns c.
std::optional<Scalar> scalar_value(const Matrix& A);
Matrix commutator(const Field& F, const Matrix& A, const Matrix& B, Scalar sign);

}  // namespace linalg

/// Incrementally maintained echelon basis of a subspace.
class SpanBuilder {
 public:
  explicit SpanBuilder(const Field& F, std::size_t n) : F_(&F), n_(n) {}
  /// Reduces v against the current basis; returns true if it enlarged the span.
  bool add(const Vec& v);
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return linalg::is_zero(reduce(v)); }
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  /// Basis vectors in echelon form (not the originals).
  const std::vector<Vec>& basis() const { return rows_; }

 private:
  const Field* F_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> piv_;
};

}  // namespace colorlie
