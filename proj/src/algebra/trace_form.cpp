#include "colorlie/algebra/trace_form.hpp"

#include "colorlie/core/error.hpp"

namespace colorlie {

namespace {

const Realization& need_realization(const ColorAlgebra& A) {
  if (!A.realization()) throw Error(Errc::NoMatrixRealization, "trace form needs a matrix realization");
  return *A.realization();
}

Scalar basis_form(const ColorAlgebra& A, int i, int j) {
  const Realization& R = need_realization(A);
  const Field& F = A.field();
  Scalar t = linalg::trace(F, linalg::multiply(F, R.mats[i], R.mats[j]));
  return F.mul(A.grading().sign(A.degree(i), A.degree(j)), t);
}

}  // namespace

Matrix trace_gram(const ColorAlgebra& A) {
  const std::size_t n = A.dim();
  Matrix G(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) G(i, j) = basis_form(A, static_cast<int>(i), static_cast<int>(j));
  return G;
}

Scalar trace_form(const ColorAlgebra& A, const Vec& x, const Vec& y) {
  const Field& F = A.field();
  Scalar s = F.zero();
  for (std::size_t i = 0; i < A.dim(); ++i) {
    if (x[i].v == 0) continue;
    for (std::size_t j = 0; j < A.dim(); ++j) {
      if (y[j].v == 0) continue;
      s = F.add(s, F.mul(F.mul(x[i], y[j]), basis_form(A, static_cast<int>(i), static_cast<int>(j))));
    }
  }
  return s;
}

Scalar supertrace_form(const ColorAlgebra& A, const Vec& x, const Vec& y) {
  const Realization& R = need_realization(A);
  const Field& F = A.field();
  Matrix M = linalg::multiply(F, A.to_matrix(x), A.to_matrix(y));
  Scalar s = F.zero();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    int d = R.row_degrees[i];
    s = F.add(s, F.mul(A.grading().sign(d, d), M(i, i)));
  }
  return s;
}

Vec theta(const ColorAlgebra& A, const Vec& x) {
  const std::size_t n = A.dim();
  Vec out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = trace_form(A, x, A.basis_vec(static_cast<int>(j)));
  return out;
}

Vec theta_inv(const ColorAlgebra& A, const Vec& chi) {
  // theta(x)_j = sum_i x_i G(i,j), so G^T x = chi.
  Matrix GT = linalg::transpose(trace_gram(A));
  auto x = linalg::solve(A.field(), GT, chi);
  if (!x) throw Error(Errc::InvalidInput, "functional is not in the image of theta");
  return *x;
}

}  // namespace colorlie
