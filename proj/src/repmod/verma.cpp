#include "colorlie/repmod/verma.hpp"

#include <algorithm>

#include "colorlie/algebra/gl.hpp"
#include "colorlie/core/error.hpp"
#include "colorlie/envelope/ops.hpp"

namespace colorlie {

namespace {

void check_no_doubled(const TriangularData& T, const FPTriple& t) {
  for (int a : t.deltas) {
    std::vector<int> two = T.eps[T.pos[a]];
    for (int& x : two) x *= 2;
    for (int b : t.deltas)
      if (T.eps[T.pos[b]] == two) throw Error(Errc::DoubledRoot, "2*delta occurs among the FP roots");
  }
}

std::string base_label(std::size_t i, std::size_t dim) { return dim == 1 ? "v" : "v" + std::to_string(i); }

}  // namespace

VermaBuilder::VermaBuilder(ReducedSpecPtr spec, FPTriple triple) : spec_(std::move(spec)), triple_(std::move(triple)) {
  const ColorAlgebra& A = *spec_->algebra;
  const TriangularData& T = root_datum(A);
  const Field& F = A.field();
  const std::size_t n = A.dim();
  const PCharacter& chi = spec_->chi;
  if (!chi.fclasses.empty()) throw Error(Errc::BadCharacter, "induced modules need a linear character");
  for (int s : triple_.deltas) {
    const auto& tr = T.triples[s];
    if (chi.value(tr.e).v || chi.value(tr.f).v)
      throw Error(Errc::ChiOnDelta, "character is nonzero on the root pair of " + A.name(tr.e));
    lower_.push_back(tr.f);
    pbar_.push_back(tr.odd ? 2 : F.p());
  }
  const std::size_t m = lower_.size();
  std::vector<int> order = lower_;
  for (std::size_t b = 0; b < n; ++b)
    if (std::find(lower_.begin(), lower_.end(), static_cast<int>(b)) == lower_.end()) {
      order.push_back(static_cast<int>(b));
      p0_.push_back(static_cast<int>(b));
    }
  std::vector<int> local(n);
  for (std::size_t t = 0; t < n; ++t) local[order[t]] = static_cast<int>(t);

  AlgebraPtr B = permute_algebra(A, order);
  PCharacter chiB;
  for (auto [i, c] : chi.linear) chiB.linear[local[i]] = c;
  Envelope E = Envelope::reduced(make_reduced_spec(B, chiB));

  std::vector<int> a(m, 0);
  while (true) {
    fexps_.push_back(a);
    std::size_t i = 0;
    while (i < m && ++a[i] == pbar_[i]) a[i++] = 0;
    if (i == m) break;
  }
  auto index_of = [&](const std::vector<int>& e) {
    std::size_t idx = 0, mul = 1;
    for (std::size_t i = 0; i < m; ++i) {
      idx += e[i] * mul;
      mul *= pbar_[i];
    }
    return static_cast<std::uint32_t>(idx);
  };
  std::map<Monomial, std::uint32_t> word_ids;
  skel_.assign(n, std::vector<std::vector<Entry>>(fexps_.size()));
  for (std::size_t s = 0; s < fexps_.size(); ++s) {
    std::vector<int> full(n, 0);
    for (std::size_t i = 0; i < m; ++i) full[i] = fexps_[s][i];
    NormalElement fa = E.term(make_monomial(full), F.one());
    for (std::size_t x = 0; x < n; ++x) {
      NormalElement r = E.product(E.generator(local[x]), fa);
      for (const auto& [mono, c] : r.terms) {
        std::vector<int> ex = exponents(mono);
        std::vector<int> fpart(ex.begin(), ex.begin() + m);
        Monomial q = mono.substr(m);
        auto [it, fresh] = word_ids.try_emplace(q, static_cast<std::uint32_t>(words_.size()));
        if (fresh) {
          std::vector<int> w;
          for (std::size_t t = m; t < n; ++t)
            for (int r2 = 0; r2 < ex[t]; ++r2) w.push_back(order[t]);
          words_.push_back(std::move(w));
        }
        skel_[x][s].push_back({index_of(fpart), it->second, c});
      }
    }
  }
}

BaseModule VermaBuilder::one_dimensional(const Vec& lambda) const {
  const ColorAlgebra& A = *spec_->algebra;
  BaseModule M;
  M.dim = 1;
  M.degrees = {0};
  for (int h : root_datum(A).cartan) {
    Matrix m(1, 1);
    m(0, 0) = lambda[h];
    M.action[h] = m;
  }
  const TriangularData& T = root_datum(A);
  const Field& F = A.field();
  for (std::size_t s = 0; s < T.triples.size(); ++s) {
    if (std::find(triple_.deltas.begin(), triple_.deltas.end(), static_cast<int>(s)) != triple_.deltas.end()) continue;
    Scalar v{0};
    for (int h : T.cartan) v = F.add(v, F.mul(T.triples[s].H[h], lambda[h]));
    if (v.v) throw Error(Errc::BadWeight, "lambda(H) != 0 on the Levi root " + root_name(T, static_cast<int>(s)));
  }
  check_base(M);
  return M;
}

void VermaBuilder::check_base(const BaseModule& M) const {
  const ColorAlgebra& A = *spec_->algebra;
  const Field& F = A.field();
  const Grading& Gr = A.grading();
  const TriangularData& T = root_datum(A);
  const std::size_t d = M.dim;
  auto bad = [](const std::string& s) { throw Error(Errc::BadWeight, s); };
  auto rho = [&](int x) {
    auto it = M.action.find(x);
    if (it == M.action.end()) return Matrix(d, d);
    if (it->second.rows() != d || it->second.cols() != d) throw Error(Errc::DimensionMismatch, "base module matrix size");
    return it->second;
  };
  for (const auto& [x, mat] : M.action)
    if (std::find(p0_.begin(), p0_.end(), x) == p0_.end()) bad("base module acts by " + A.name(x) + " outside P_0");
  std::vector<bool> in_p0(A.dim(), false);
  for (int x : p0_) in_p0[x] = true;
  for (int x : p0_)
    for (int y : p0_) {
      Matrix lhs(d, d);
      for (auto [k, c] : A.bracket_basis(x, y)) {
        if (!in_p0[k]) throw Error(Errc::InvalidInput, "P_0 is not closed under the bracket");
        lhs = linalg::add(F, lhs, linalg::scale(F, c, rho(k)));
      }
      Matrix rhs = linalg::sub(F, linalg::multiply(F, rho(x), rho(y)),
                               linalg::scale(F, Gr.sign(A.degree(x), A.degree(y)), linalg::multiply(F, rho(y), rho(x))));
      if (lhs != rhs) bad("base module fails the bracket relation at (" + A.name(x) + "," + A.name(y) + ")");
    }
  for (int s : triple_.deltas)
    if (!rho(T.triples[s].e).is_zero()) bad("N^+_0 does not annihilate the base module");
  for (int h : T.cartan) {
    Matrix m = rho(h);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (i != j && m(i, j).v) bad("Cartan does not act diagonally on the base module");
  }
  const int p = F.p();
  for (int x : p0_) {
    if (A.is_odd(x)) continue;
    Matrix lhs = linalg::power(F, rho(x), p);
    for (auto [k, c] : *A.pmap_basis(x)) lhs = linalg::sub(F, lhs, linalg::scale(F, c, rho(k)));
    if (lhs != linalg::scale(F, F.pow(spec_->chi.value(x), p), Matrix::identity(d)))
      bad("weight is not compatible with chi at " + A.name(x));
  }
}

GradedModule VermaBuilder::build(const BaseModule& M) const {
  check_base(M);
  const ColorAlgebra& A = *spec_->algebra;
  const Field& F = A.field();
  const TriangularData& T = root_datum(A);
  const std::size_t n = A.dim(), d = M.dim, N = fexps_.size() * d;
  std::vector<Matrix> wordmat;
  wordmat.reserve(words_.size());
  for (const auto& w : words_) {
    Matrix r = Matrix::identity(d);
    for (int x : w) {
      auto it = M.action.find(x);
      if (it == M.action.end()) {
        r = Matrix(d, d);
        break;
      }
      r = linalg::multiply(F, r, it->second);
    }
    wordmat.push_back(std::move(r));
  }
  GradedModule Z;
  Z.dim = N;
  Z.action.assign(n, Matrix(N, N));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t s = 0; s < fexps_.size(); ++s)
      for (const Entry& e : skel_[x][s]) {
        const Matrix& W = wordmat[e.word];
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) {
            Scalar w = W(j, i);
            if (w.v == 0) continue;
            Scalar& dst = Z.action[x](e.target * d + j, s * d + i);
            dst = F.add(dst, F.mul(e.c, w));
          }
      }
  const Grading& Gr = A.grading();
  for (std::size_t s = 0; s < fexps_.size(); ++s)
    for (std::size_t i = 0; i < d; ++i) {
      int deg = M.degrees.size() == d ? M.degrees[i] : 0, ht = 0;
      std::string label;
      for (std::size_t k = 0; k < lower_.size(); ++k) {
        int a = fexps_[s][k];
        if (!a) continue;
        deg = Gr.add(deg, Gr.group().mul(a, A.degree(lower_[k])));
        ht += a * T.height[T.triples[triple_.deltas[k]].e];
        label += A.name(lower_[k]) + (a > 1 ? "^" + std::to_string(a) : "") + "*";
      }
      Z.labels.push_back(label + base_label(i, d));
      Z.degrees.push_back(deg);
      Z.heights.push_back(ht);
      Z.exps.push_back(fexps_[s]);
      Z.factor.push_back(static_cast<int>(i));
    }
  fill_weights(A, Z);
  return Z;
}

std::vector<Scalar> artin_schreier_roots(const Field& F, Scalar c) {
  std::vector<Scalar> out;
  Scalar target = F.pow(c, F.p());
  for (Scalar t : F.elements())
    if (F.sub(F.pow(t, F.p()), t) == target) out.push_back(t);
  return out;
}

std::vector<Vec> admissible_weights(const ReducedAlgebraSpec& spec) {
  const ColorAlgebra& A = *spec.algebra;
  const Field& F = A.field();
  const TriangularData& T = root_datum(A);
  std::vector<std::vector<Scalar>> choices;
  for (int h : T.cartan) {
    const SparseVec* pm = A.pmap_basis(h);
    if (!pm || pm->size() != 1 || (*pm)[0].first != h || (*pm)[0].second != F.one())
      throw Error(Errc::InvalidInput, "Cartan element " + A.name(h) + " is not toral");
    choices.push_back(artin_schreier_roots(F, spec.chi.value(h)));
  }
  std::vector<Vec> out;
  std::vector<std::size_t> idx(choices.size(), 0);
  for (const auto& c : choices)
    if (c.empty()) return out;
  while (true) {
    Vec lam(A.dim());
    for (std::size_t k = 0; k < choices.size(); ++k) lam[T.cartan[k]] = choices[k][idx[k]];
    out.push_back(std::move(lam));
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

Scalar f_closed(const ColorAlgebra& A, const FPTriple& t, const Vec& lambda) {
  const TriangularData& T = root_datum(A);
  const Field& F = A.field();
  check_no_doubled(T, t);
  // Work with values on the Cartan basis.
  Vec lam(T.cartan.size());
  for (std::size_t k = 0; k < T.cartan.size(); ++k) lam[k] = lambda[T.cartan[k]];
  Scalar prod = F.one();
  for (int s : t.deltas) {
    const auto& tr = T.triples[s];
    const int pbar = tr.odd ? 2 : F.p();
    Scalar v{0};
    for (std::size_t k = 0; k < T.cartan.size(); ++k) v = F.add(v, F.mul(tr.H[T.cartan[k]], lam[k]));
    prod = F.mul(prod, F.sub(F.pow(F.add(v, F.one()), pbar - 1), F.one()));
    const Vec& root = T.on_cartan[tr.e];
    for (std::size_t k = 0; k < lam.size(); ++k) lam[k] = F.sub(lam[k], F.mul(F.from_int(pbar - 1), root[k]));
  }
  return prod;
}

HcPolynomial hc_polynomial(const Envelope& E, const FPTriple& t) {
  const ColorAlgebra& A = E.algebra();
  const TriangularData& T = root_datum(A);
  const Field& F = A.field();
  NormalElement ep = E.one(), fp = E.one(), fr = E.one();
  for (int s : t.deltas) {
    const auto& tr = T.triples[s];
    const int k = (tr.odd ? 2 : F.p()) - 1;
    ep = E.product(ep, E.power(E.generator(tr.e), k));
    fp = E.product(fp, E.power(E.generator(tr.f), k));
    fr = E.product(E.power(E.generator(tr.f), k), fr);
  }
  HcPolynomial out;
  auto hc = harish_chandra(E, E.product(ep, fp));
  out.gamma = hc.gamma;
  out.discarded_in_L = hc.discarded_in_L;
  if (!fp.is_zero()) {
    Scalar k = F.div(fr.coeff(fp.terms.front().first), fp.terms.front().second);
    if (E.scale(k, fp) == fr && k.v) {
      out.k = k;
      out.k_defined = true;
    }
  }
  return out;
}

Scalar f_via_hc(const Envelope& E, const HcPolynomial& h, const Vec& lambda) {
  return evaluate_on_cartan(E, h.gamma, lambda);
}

}  // namespace colorlie
