#include "colorlie/repmod/unipotent.hpp"

#include <random>

#include "colorlie/algebra/validate.hpp"
#include "colorlie/core/error.hpp"
#include "colorlie/envelope/ops.hpp"

namespace colorlie {

bool is_unipotent(const ColorAlgebra& A) {
  for (std::size_t i = 0; i < A.dim(); ++i) {
    if (A.is_odd(static_cast<int>(i))) continue;
    if (!A.pmap_basis(static_cast<int>(i))) return false;
    Vec x = A.basis_vec(static_cast<int>(i));
    // A p-nilpotent element has nilpotency index at most dim g.
    std::size_t r = 0;
    while (!linalg::is_zero(x) && r <= A.dim()) {
      x = pmap_eval(A, x);
      ++r;
    }
    if (!linalg::is_zero(x)) return false;
  }
  return true;
}

RegularModule regular_module(const Envelope& E) {
  const Field& F = E.field();
  RegularModule R;
  R.basis = uchi_basis(E);
  const std::size_t N = R.basis.size(), n = E.dim();
  std::map<Monomial, std::size_t> pos;
  for (std::size_t i = 0; i < N; ++i) pos[R.basis[i]] = i;
  R.left.assign(n, Matrix(N, N));
  R.right.assign(n, Matrix(N, N));
  for (std::size_t j = 0; j < N; ++j) {
    NormalElement b = E.term(R.basis[j], F.one());
    for (std::size_t x = 0; x < n; ++x) {
      NormalElement g = E.generator(static_cast<int>(x));
      for (const auto& [m, c] : E.product(g, b).terms) R.left[x](pos.at(m), j) = c;
      for (const auto& [m, c] : E.product(b, g).terms) R.right[x](pos.at(m), j) = c;
    }
  }
  return R;
}

namespace {

std::vector<Vec> joint_kernel(const Field& F, const std::vector<Matrix>& ops, std::size_t N) {
  Matrix stacked(ops.size() * N, N);
  for (std::size_t k = 0; k < ops.size(); ++k)
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) stacked(k * N + i, j) = ops[k](i, j);
  return linalg::kernel(F, stacked);
}

}  // namespace

SocleReport unipotent_socle(AlgebraPtr A) {
  if (!is_unipotent(*A)) throw Error(Errc::NotUnipotent, "some even basis element is not p-nilpotent");
  const Field& F = A->field();
  Envelope E = Envelope::reduced(make_reduced_spec(A, PCharacter{}));
  SocleReport S;
  S.regular = regular_module(E);
  const std::size_t N = S.regular.basis.size();
  auto L = joint_kernel(F, S.regular.left, N);
  auto R = joint_kernel(F, S.regular.right, N);
  S.left_dim = L.size();
  S.right_dim = R.size();
  if (L.size() == 1 && R.size() == 1) {
    S.left = L[0];
    S.right = R[0];
    for (std::size_t i = 0; i < N; ++i)
      if (S.right[i].v) {
        S.c = F.div(S.left[i], S.right[i]);
        break;
      }
    S.proportional = S.c.v && linalg::vscale(F, S.c, S.right) == S.left;
  }
  return S;
}

SimpleQuotient random_simple_quotient(const Field& F, const std::vector<Matrix>& action, unsigned seed) {
  const std::size_t N = action.empty() ? 0 : action[0].rows();
  SpanBuilder rad(F, N);
  for (const Matrix& X : action)
    for (std::size_t j = 0; j < N; ++j) {
      Vec col(N);
      for (std::size_t i = 0; i < N; ++i) col[i] = X(i, j);
      rad.add(col);
    }
  if (rad.dim() >= N) throw Error(Errc::InvalidInput, "module equals its radical candidate");
  // Functionals vanishing on the radical: kernel of the transposed span.
  Matrix Rm(rad.dim(), N);
  for (std::size_t r = 0; r < rad.dim(); ++r)
    for (std::size_t j = 0; j < N; ++j) Rm(r, j) = rad.basis()[r][j];
  std::vector<Vec> annih = rad.dim() ? linalg::kernel(F, Rm) : std::vector<Vec>{};
  if (!rad.dim())
    for (std::size_t j = 0; j < N; ++j) {
      Vec e(N);
      e[j] = F.one();
      annih.push_back(e);
    }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, F.size() - 1);
  SimpleQuotient Q;
  do {
    Q.phi.assign(N, F.zero());
    for (const Vec& a : annih) Q.phi = linalg::vadd(F, Q.phi, linalg::vscale(F, Scalar{pick(rng)}, a));
  } while (linalg::is_zero(Q.phi));
  // ker phi is a submodule iff phi(X v) is a multiple of phi(v) for every X.
  std::size_t w = 0;
  while (Q.phi[w].v == 0) ++w;
  for (const Matrix& X : action) {
    Vec row(N);
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t i = 0; i < N; ++i) row[j] = F.add(row[j], F.mul(Q.phi[i], X(i, j)));
    Scalar q = F.div(row[w], Q.phi[w]);
    if (linalg::vscale(F, q, Q.phi) != row) throw Error(Errc::InvalidInput, "hyperplane is not a submodule");
    Q.action.push_back(q);
  }
  return Q;
}

std::optional<Scalar> quotient_intertwiner(const Field& F, const SimpleQuotient& a, const SimpleQuotient& b) {
  if (a.action.size() != b.action.size()) throw Error(Errc::DimensionMismatch, "quotients of different algebras");
  // T a_x - b_x T = 0 for all x, one unknown.
  Matrix sys(a.action.size(), 1);
  for (std::size_t x = 0; x < a.action.size(); ++x) sys(x, 0) = F.sub(a.action[x], b.action[x]);
  auto ker = linalg::kernel(F, sys);
  if (ker.empty()) return std::nullopt;
  return ker[0][0];
}

}  // namespace colorlie
