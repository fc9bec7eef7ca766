#include "colorlie/algebra/standard_form.hpp"

#include <algorithm>
#include <map>

#include "colorlie/algebra/trace_form.hpp"
#include "colorlie/core/error.hpp"
#include "colorlie/core/poly.hpp"

namespace colorlie {

namespace {

// Roots of cp with multiplicity; throws NeedsExtension if cp does not split.
std::vector<Scalar> split_roots(const Field& F, const Poly& cp) {
  std::vector<Scalar> out;
  Poly rest = cp;
  for (Scalar r : poly::roots(F, cp)) {
    Poly lin = {F.neg(r), F.one()};
    while (true) {
      auto [q, rem] = poly::divmod(F, rest, lin);
      if (!rem.empty()) break;
      rest = q;
      out.push_back(r);
    }
  }
  if (poly::degree(rest) > 0) {
    int d = poly::splitting_degree(F, cp);
    throw Error(Errc::NeedsExtension,
                "characteristic polynomial splits only over an extension of degree " + std::to_string(d), d);
  }
  return out;
}

Matrix shifted(const Field& F, const Matrix& X, Scalar r) {
  Matrix N = X;
  for (std::size_t i = 0; i < N.rows(); ++i) N(i, i) = F.sub(N(i, i), r);
  return N;
}

std::size_t first_nonzero(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].v) return i;
  return v.size();
}

// Columns: a basis in which X = D + U with D diagonal and U strictly upper
// triangular, U nonzero only between equal diagonal entries.
Matrix triangularizing_basis(const Field& F, const Matrix& X) {
  const std::size_t n = X.rows();
  std::vector<Scalar> rts = split_roots(F, poly::charpoly(F, X));
  std::vector<Scalar> distinct = rts;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::pair<std::size_t, std::vector<Vec>>> groups;
  for (Scalar r : distinct) {
    std::size_t mult = std::count(rts.begin(), rts.end(), r);
    Matrix N = shifted(F, X, r);
    SpanBuilder span(F, n);
    std::vector<Vec> ordered;
    Matrix Nt = N;
    while (span.dim() < mult) {
      for (const Vec& v : linalg::kernel(F, Nt))
        if (span.add(v)) ordered.push_back(v);
      Nt = linalg::multiply(F, Nt, N);
    }
    std::size_t key = n;
    for (const Vec& v : ordered) key = std::min(key, first_nonzero(v));
    groups.emplace_back(key, std::move(ordered));
  }
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Vec> cols;
  for (auto& g : groups)
    for (auto& v : g.second) cols.push_back(std::move(v));
  return Matrix::from_columns(cols, n);
}

bool already_standard(const Matrix& X) {
  for (std::size_t i = 0; i < X.rows(); ++i)
    for (std::size_t j = 0; j < X.cols(); ++j) {
      if (i == j || X(i, j).v == 0) continue;
      if (i > j) return false;
      if (X(i, i) != X(j, j)) return false;
    }
  return true;
}

}  // namespace

JordanParts jordan_decompose(const ColorAlgebra& A, const Vec& x) {
  const Field& F = A.field();
  int deg = A.degree_of(x);
  if (deg > 0) throw Error(Errc::NotZeroDegree, "Jordan decomposition needs a degree-zero element");
  Matrix X = A.to_matrix(x);
  const std::size_t n = X.rows();
  std::vector<Scalar> rts = split_roots(F, poly::charpoly(F, X));
  std::vector<Scalar> distinct = rts;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<Vec> cols;
  std::vector<Scalar> diag;
  for (Scalar r : distinct) {
    Matrix Nn = linalg::power(F, shifted(F, X, r), static_cast<long long>(n));
    for (Vec& v : linalg::kernel(F, Nn)) {
      cols.push_back(std::move(v));
      diag.push_back(r);
    }
  }
  Matrix S = Matrix::from_columns(cols, n);
  Matrix D(n, n);
  for (std::size_t i = 0; i < n; ++i) D(i, i) = diag[i];
  auto Sinv = linalg::inverse(F, S);
  if (!Sinv) throw Error(Errc::InvalidInput, "generalized eigenvectors do not span");
  Matrix Xs = linalg::multiply(F, linalg::multiply(F, S, D), *Sinv);
  Matrix Xn = linalg::sub(F, X, Xs);
  auto xs = A.coords_of(Xs);
  auto xn = A.coords_of(Xn);
  if (!xs || !xn) throw Error(Errc::InvalidInput, "Jordan parts leave the algebra");
  return {*xs, *xn};
}

Scalar apply_functional(const Field& F, const Vec& chi, const Vec& x) { return linalg::dot(F, chi, x); }

Vec coadjoint(const ColorAlgebra& A, const Matrix& g, const Matrix& g_inv, const Vec& chi) {
  const Field& F = A.field();
  const std::size_t n = A.dim();
  Vec out(n);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix Y = linalg::multiply(F, linalg::multiply(F, g_inv, A.realization()->mats[j]), g);
    auto c = A.coords_of(Y);
    if (!c) throw Error(Errc::InvalidInput, "conjugation leaves the algebra");
    out[j] = apply_functional(F, chi, *c);
  }
  return out;
}

CharacterStd standardize_character(const ColorAlgebra& A, const Vec& chi) {
  const Field& F = A.field();
  if (!A.realization()) throw Error(Errc::NoMatrixRealization, "standard form needs a matrix realization");
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (chi[i].v && A.degree(static_cast<int>(i)) != 0)
      throw Error(Errc::NotZeroDegree, "character is nonzero on " + A.name(static_cast<int>(i)));
  const Realization& R = *A.realization();
  const std::size_t m = R.row_degrees.size();
  Matrix X = A.to_matrix(theta_inv(A, chi));

  std::map<int, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < m; ++i) blocks[R.row_degrees[i]].push_back(i);
  Matrix S(m, m);
  for (const auto& [deg, rows] : blocks) {
    const std::size_t b = rows.size();
    Matrix XB(b, b);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j) XB(i, j) = X(rows[i], rows[j]);
    Matrix SB = already_standard(XB) ? Matrix::identity(b) : triangularizing_basis(F, XB);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j) S(rows[i], rows[j]) = SB(i, j);
  }
  auto Sinv = linalg::inverse(F, S);
  if (!Sinv) throw Error(Errc::InvalidInput, "conjugator is singular");
  CharacterStd out;
  out.g = *Sinv;
  out.g_inv = S;
  Matrix Y = linalg::multiply(F, linalg::multiply(F, out.g, X), out.g_inv);
  Matrix D(m, m), U = Y;
  for (std::size_t i = 0; i < m; ++i) {
    D(i, i) = Y(i, i);
    U(i, i) = F.zero();
  }
  auto y = A.coords_of(Y), d = A.coords_of(D), u = A.coords_of(U);
  if (!y || !d || !u) throw Error(Errc::InvalidInput, "conjugated element leaves the algebra");
  out.chi = theta(A, *y);
  out.chi_s = theta(A, *d);
  out.chi_n = theta(A, *u);
  return out;
}

std::vector<std::string> check_standard(const ColorAlgebra& A, const Vec& chi_s, const Vec& chi_n) {
  std::vector<std::string> bad;
  if (!A.triangular()) {
    bad.push_back("algebra has no triangular decomposition");
    return bad;
  }
  const Field& F = A.field();
  const TriangularData& T = *A.triangular();
  for (int b : T.neg)
    if (chi_s[b].v) bad.push_back("chi_s is nonzero on " + A.name(b));
  for (int b : T.pos) {
    if (chi_s[b].v) bad.push_back("chi_s is nonzero on " + A.name(b));
    if (chi_n[b].v) bad.push_back("chi_n is nonzero on " + A.name(b));
  }
  for (int b : T.cartan)
    if (chi_n[b].v) bad.push_back("chi_n is nonzero on " + A.name(b));
  Vec chi = linalg::vadd(F, chi_s, chi_n);
  for (const auto& t : T.triples) {
    if (apply_functional(F, chi_s, t.H).v == 0) continue;
    if (chi[t.e].v || chi[t.f].v)
      bad.push_back("chi_s(H) != 0 but chi is nonzero on the root pair of " + A.name(t.e));
  }
  return bad;
}

LeviData levi_data(const ColorAlgebra& A, const Vec& chi_s, const Vec& chi_n) {
  auto bad = check_standard(A, chi_s, chi_n);
  if (!bad.empty()) throw Error(Errc::NotStandard, "character is not in standard form: " + bad.front());
  const Field& F = A.field();
  const TriangularData& T = *A.triangular();
  const std::size_t n = A.dim();
  Vec chi = linalg::vadd(F, chi_s, chi_n);
  auto triple_of = [&](int b) -> const TriangularData::Triple& {
    int slot = T.pos_slot(b);
    if (slot < 0) {
      std::vector<int> neg = T.eps[b];
      for (int& c : neg) c = -c;
      slot = T.pos_slot(T.find_root(neg));
    }
    return T.triples[slot];
  };
  LeviData L;
  std::vector<bool> in_z(n, false), in_p(n, false), in_np(n, false);
  for (int b : T.cartan) in_z[b] = true;
  for (int b : T.neg)
    if (apply_functional(F, chi, triple_of(b).H).v == 0) in_z[b] = true;
  for (int b : T.pos) {
    if (apply_functional(F, chi, triple_of(b).H).v == 0)
      in_z[b] = true;
    else
      in_np[b] = true;
  }
  for (std::size_t b = 0; b < n; ++b) {
    in_p[b] = in_z[b] || in_np[b];
    if (in_z[b]) L.z.push_back(static_cast<int>(b));
    if (in_p[b]) L.p0.push_back(static_cast<int>(b));
    if (in_np[b]) L.nplus.push_back(static_cast<int>(b));
  }
  auto inside = [&](const Vec& v, const std::vector<bool>& mask) {
    for (std::size_t k = 0; k < n; ++k)
      if (v[k].v && !mask[k]) return false;
    return true;
  };
  for (int a : L.p0)
    for (int b : L.p0) {
      Vec br = to_dense(A.bracket_basis(a, b), n);
      if (!inside(br, in_p)) throw Error(Errc::NotStandard, "P is not closed under the bracket");
      if (in_np[b] && !inside(br, in_np))
        throw Error(Errc::NotStandard, "the nilradical candidate is not an ideal of P");
    }
  // Lower central series of the nilradical must reach zero.
  std::vector<Vec> layer;
  for (int b : L.nplus) layer.push_back(A.basis_vec(b));
  for (std::size_t step = 0; step <= n && !layer.empty(); ++step) {
    SpanBuilder next(F, n);
    std::vector<Vec> nl;
    for (int a : L.nplus)
      for (const Vec& v : layer) {
        Vec w = A.bracket(A.basis_vec(a), v);
        if (next.add(w)) nl.push_back(w);
      }
    layer = std::move(nl);
  }
  if (!layer.empty()) throw Error(Errc::NotStandard, "the nilradical candidate is not nilpotent");
  return L;
}

}  // namespace colorlie
