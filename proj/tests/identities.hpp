#pragma once

#include <string>
#include <vector>

#include "colorlie/envelope/envelope.hpp"
#include "colorlie/envelope/ops.hpp"
#include "colorlie/repmod/module.hpp"
#include "colorlie/repmod/roots.hpp"

namespace identities {

using namespace colorlie;

inline int pbar(const ColorAlgebra& A, const TriangularData::Triple& t) { return t.odd ? 2 : A.field().p(); }

/// f_{delta_i} times f_1^{pbar-1}...f_m^{pbar-1} vanishes on both sides in u(g).
inline std::vector<std::string> top_annihilation(AlgebraPtr A, const FPTriple& t) {
  std::vector<std::string> bad;
  const TriangularData& T = root_datum(*A);
  Envelope E = Envelope::reduced(make_reduced_spec(A, PCharacter{}));
  NormalElement top = E.one();
  for (int s : t.deltas) top = E.product(top, E.power(E.generator(T.triples[s].f), pbar(*A, T.triples[s]) - 1));
  if (top.is_zero()) bad.push_back("top f-monomial is zero");
  for (int s : t.deltas) {
    NormalElement f = E.generator(T.triples[s].f);
    if (!E.product(f, top).is_zero()) bad.push_back("left annihilation fails at " + root_name(T, s));
    if (!E.product(top, f).is_zero()) bad.push_back("right annihilation fails at " + root_name(T, s));
  }
  return bad;
}

/// M_k = f_k^{pbar-1}...f_1^{pbar-1} v is killed by f_1..f_k and e_{k+1}..e_m.
inline std::vector<std::string> layer_annihilation(const ColorAlgebra& A, const FPTriple& t, const GradedModule& Z) {
  std::vector<std::string> bad;
  const Field& F = A.field();
  const TriangularData& T = root_datum(A);
  Vec v(Z.dim);
  v[0] = F.one();
  const std::size_t m = t.deltas.size();
  for (std::size_t k = 0; k <= m; ++k) {
    if (k > 0) {
      const auto& tr = T.triples[t.deltas[k - 1]];
      for (int r = 0; r < pbar(A, tr) - 1; ++r) v = linalg::apply(F, Z.action[tr.f], v);
    }
    if (linalg::is_zero(v)) {
      bad.push_back("M_" + std::to_string(k) + " is zero");
      break;
    }
    for (std::size_t i = 0; i < m; ++i) {
      const auto& tr = T.triples[t.deltas[i]];
      int x = i < k ? tr.f : tr.e;
      if (!linalg::is_zero(linalg::apply(F, Z.action[x], v)))
        bad.push_back("M_" + std::to_string(k) + " is not killed by " + A.name(x));
    }
  }
  return bad;
}

/// On every singular vector and every positive root: efv = (fe+h)v for odd
/// pairs, e^l f^l v = l! prod_{i<l} (lambda(h)-i) v for even pairs and l < p,
/// and e^{pbar-1} f^{pbar-1} v = (pbar-1)! [(lambda(h)+1)^{pbar-1} - 1] v.
inline std::vector<std::string> root_pair_identities(const ColorAlgebra& A, const GradedModule& Z) {
  std::vector<std::string> bad;
  const Field& F = A.field();
  const TriangularData& T = root_datum(A);
  auto fact = [&](int l) {
    Scalar r = F.one();
    for (int i = 2; i <= l; ++i) r = F.mul(r, F.from_int(i));
    return r;
  };
  for (const SingularBucket& b : singular_vectors(A, Z))
    for (const Vec& v : b.basis)
      for (std::size_t s = 0; s < T.triples.size(); ++s) {
        const auto& tr = T.triples[s];
        Scalar lam{0};
        for (std::size_t k = 0; k < T.cartan.size(); ++k) lam = F.add(lam, F.mul(tr.H[T.cartan[k]], b.weight[k]));
        const Matrix& e = Z.action[tr.e];
        const Matrix& f = Z.action[tr.f];
        const std::string where = " at " + root_name(T, static_cast<int>(s));
        if (tr.odd) {
          Vec lhs = linalg::apply(F, e, linalg::apply(F, f, v));
          Matrix h(Z.dim, Z.dim);
          for (int c : T.cartan) h = linalg::add(F, h, linalg::scale(F, tr.H[c], Z.action[c]));
          Vec rhs = linalg::vadd(F, linalg::apply(F, f, linalg::apply(F, e, v)), linalg::apply(F, h, v));
          if (lhs != rhs) bad.push_back("efv != (fe+h)v" + where);
        } else {
          Vec fl = v;
          Scalar prod = F.one();
          for (int l = 1; l < F.p(); ++l) {
            fl = linalg::apply(F, f, fl);
            prod = F.mul(prod, F.sub(lam, F.from_int(l - 1)));
            Vec lhs = fl;
            for (int r = 0; r < l; ++r) lhs = linalg::apply(F, e, lhs);
            if (lhs != linalg::vscale(F, F.mul(fact(l), prod), v))
              bad.push_back("e^" + std::to_string(l) + " f^" + std::to_string(l) + " v" + where);
          }
        }
        const int q = pbar(A, tr) - 1;
        Vec lhs = v;
        for (int r = 0; r < q; ++r) lhs = linalg::apply(F, f, lhs);
        for (int r = 0; r < q; ++r) lhs = linalg::apply(F, e, lhs);
        Scalar want = F.mul(fact(q), F.sub(F.pow(F.add(lam, F.one()), q), F.one()));
        if (lhs != linalg::vscale(F, want, v)) bad.push_back("top e f identity" + where);
      }
  return bad;
}

}  // namespace identities
