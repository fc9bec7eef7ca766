#include "colorlie/core/matrix.hpp"

#include "colorlie/core/error.hpp"

namespace colorlie {

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t nrows) {
  Matrix m(nrows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < nrows; ++i) m(i, j) = cols[j][i];
  return m;
}

Vec Matrix::col_vec(std::size_t j) const {
  Vec v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool Matrix::is_zero() const {
  for (auto s : a_)
    if (s.v != 0) return false;
  return true;
}

namespace linalg {

Matrix multiply(const Field& F, const Matrix& A, const Matrix& B) {
  if (A.cols() != B.rows()) throw Error(Errc::DimensionMismatch, "matrix product shape mismatch");
  Matrix C(A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Scalar* ci = C.row(i);
    const Scalar* ai = A.row(i);
    for (std::size_t k = 0; k < A.cols(); ++k) {
      Scalar a = ai[k];
      if (a.v == 0) continue;
      const Scalar* bk = B.row(k);
      for (std::size_t j = 0; j < B.cols(); ++j) {
        if (bk[j].v == 0) continue;
        ci[j] = F.add(ci[j], F.mul(a, bk[j]));
      }
    }
  }
  return C;
}

Matrix add(const Field& F, const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw Error(Errc::DimensionMismatch, "matrix sum shape mismatch");
  Matrix C(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = F.add(A(i, j), B(i, j));
  return C;
}

Matrix sub(const Field& F, const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw Error(Errc::DimensionMismatch, "matrix difference shape mismatch");
  Matrix C(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = F.sub(A(i, j), B(i, j));
  return C;
}

Matrix scale(const Field& F, Scalar s, const Matrix& A) {
  Matrix C(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = F.mul(s, A(i, j));
  return C;
}

Matrix transpose(const Matrix& A) {
  Matrix T(A.cols(), A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) T(j, i) = A(i, j);
  return T;
}

Matrix power(const Field& F, const Matrix& A, long long e) {
  Matrix r = Matrix::identity(A.rows()), b = A;
  while (e > 0) {
    if (e & 1) r = multiply(F, r, b);
    e >>= 1;
    if (e) b = multiply(F, b, b);
  }
  return r;
}

Vec apply(const Field& F, const Matrix& A, const Vec& x) {
  Vec y(A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    const Scalar* ai = A.row(i);
    Scalar s{0};
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (ai[j].v && x[j].v) s = F.add(s, F.mul(ai[j], x[j]));
    y[i] = s;
  }
  return y;
}

Vec apply_left(const Field& F, const Vec& x, const Matrix& A) {
  Vec y(A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    if (x[i].v == 0) continue;
    const Scalar* ai = A.row(i);
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (ai[j].v) y[j] = F.add(y[j], F.mul(x[i], ai[j]));
  }
  return y;
}

Scalar trace(const Field& F, const Matrix& A) {
  Scalar s{0};
  for (std::size_t i = 0; i < std::min(A.rows(), A.cols()); ++i) s = F.add(s, A(i, i));
  return s;
}

Vec vadd(const Field& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
  return r;
}

Vec vsub(const Field& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
  return r;
}

Vec vscale(const Field& F, Scalar s, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(s, a[i]);
  return r;
}

void axpy(const Field& F, Vec& a, Scalar s, const Vec& b) {
  if (s.v == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i].v) a[i] = F.add(a[i], F.mul(s, b[i]));
}

bool is_zero(const Vec& a) {
  for (auto s : a)
    if (s.v) return false;
  return true;
}

Scalar dot(const Field& F, const Vec& a, const Vec& b) {
  Scalar s{0};
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].v && b[i].v) s = F.add(s, F.mul(a[i], b[i]));
  return s;
}

Echelon rref(const Field& F, Matrix A) {
  Echelon out;
  std::size_t r = 0;
  const std::size_t R = A.rows(), C = A.cols();
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = R;
    for (std::size_t i = r; i < R; ++i)
      if (A(i, c).v) {
        piv = i;
        break;
      }
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(A(piv, j), A(r, j));
    Scalar inv = F.inv(A(r, c));
    Scalar* rr = A.row(r);
    for (std::size_t j = c; j < C; ++j) rr[j] = F.mul(rr[j], inv);
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r) continue;
      Scalar f = A(i, c);
      if (f.v == 0) continue;
      Scalar nf = F.neg(f);
      Scalar* ri = A.row(i);
      for (std::size_t j = c; j < C; ++j)
        if (rr[j].v) ri[j] = F.add(ri[j], F.mul(nf, rr[j]));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(A);
  return out;
}

std::size_t rank(const Field& F, const Matrix& A) { return rref(F, A).pivots.size(); }

std::vector<Vec> kernel(const Field& F, const Matrix& A) {
  Echelon e = rref(F, A);
  const std::size_t C = A.cols();
  std::vector<bool> is_piv(C, false);
  for (auto c : e.pivots) is_piv[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_piv[f]) continue;
    Vec v(C);
    v[f] = Scalar{1};
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = F.neg(e.reduced(i, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Field& F, const Matrix& A, const Vec& b) {
  Matrix aug(A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
    aug(i, A.cols()) = b[i];
  }
  Echelon e = rref(F, aug);
  if (!e.pivots.empty() && e.pivots.back() == A.cols()) return std::nullopt;
  Vec x(A.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, A.cols());
  return x;
}

std::optional<Matrix> inverse(const Field& F, const Matrix& A) {
  const std::size_t n = A.rows();
  if (n != A.cols()) return std::nullopt;
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
    aug(i, n + i) = Scalar{1};
  }
  Echelon e = rref(F, aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::optional<Scalar> scalar_value(const Matrix& A) {
  if (A.rows() != A.cols()) return std::nullopt;
  Scalar c = A.rows() ? A(0, 0) : Scalar{0};
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) {
      Scalar want = (i == j) ? c : Scalar{0};
      if (A(i, j) != want) return std::nullopt;
    }
  return c;
}

Matrix commutator(const Field& F, const Matrix& A, const Matrix& B, Scalar sign) {
  return sub(F, multiply(F, A, B), scale(F, sign, multiply(F, B, A)));
}

}  // namespace linalg

Vec SpanBuilder::reduce(Vec v) const {
  const Field& F = *F_;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Scalar c = v[piv_[r]];
    if (c.v == 0) continue;
    linalg::axpy(F, v, F.neg(c), rows_[r]);
  }
  return v;
}

bool SpanBuilder::add(const Vec& v) {
  if (rows_.size() == n_) return false;
  Vec w = reduce(v);
  std::size_t p = 0;
  while (p < w.size() && w[p].v == 0) ++p;
  if (p == w.size()) return false;
  w = linalg::vscale(*F_, F_->inv(w[p]), w);
  rows_.push_back(std::move(w));
  piv_.push_back(p);
  return true;
}

}  // namespace colorlie
