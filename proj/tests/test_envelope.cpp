#include <map>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"

#include "colorlie/core/qbinomial.hpp"
#include "colorlie/envelope/envelope.hpp"
#include "colorlie/envelope/ops.hpp"

using namespace colorlie;
using fixtures::error_code;

namespace {

Monomial mono(const ColorAlgebra& A, std::initializer_list<std::pair<const char*, int>> e) {
  std::vector<int> ex(A.dim(), 0);
  for (auto [n, k] : e) ex[A.index_of(n)] = k;
  return make_monomial(ex);
}

/// Sum of c * (product of the word's matrices) over the terms of u.
Matrix represent(const Envelope& E, const NormalElement& u, const std::vector<Matrix>& mats) {
  const Field& F = E.field();
  const std::size_t d = mats.front().rows();
  Matrix out(d, d);
  for (const auto& [m, c] : u.terms) {
    Matrix t = Matrix::identity(d);
    for (int g : E.word(m)) t = linalg::multiply(F, t, mats[g]);
    out = linalg::add(F, out, linalg::scale(F, c, t));
  }
  return out;
}

struct Word {
  std::vector<int> letters;
};

Word random_word(std::mt19937& rng, std::size_t n, int max_len) {
  Word w;
  int len = static_cast<int>(rng() % (max_len + 1));
  for (int i = 0; i < len; ++i) w.letters.push_back(static_cast<int>(rng() % n));
  return w;
}

NormalElement nf_word(const Envelope& E, const Word& w) {
  NormalElement u = E.one();
  for (int g : w.letters) u = E.times_generator(u, g);
  return u;
}

Matrix word_matrix(const Field& F, const Word& w, const std::vector<Matrix>& mats) {
  Matrix t = Matrix::identity(mats.front().rows());
  for (int g : w.letters) t = linalg::multiply(F, t, mats[g]);
  return t;
}

/// Random homogeneous element: a combination of up to three words sharing a degree.
NormalElement random_homogeneous(const Envelope& E, std::mt19937& rng, int max_len) {
  Word w = random_word(rng, E.dim(), max_len);
  NormalElement u = nf_word(E, w);
  const Field& F = E.field();
  int deg = 0;
  for (int g : w.letters) deg = E.algebra().grading().add(deg, E.algebra().degree(g));
  for (int t = 0; t < 2; ++t) {
    Word v = random_word(rng, E.dim(), max_len);
    int dv = 0;
    for (int g : v.letters) dv = E.algebra().grading().add(dv, E.algebra().degree(g));
    if (dv != deg) continue;
    u = E.add(u, E.scale(Scalar{static_cast<std::uint32_t>(1 + rng() % (F.size() - 1))}, nf_word(E, v)));
  }
  return u;
}

/// Natural representation shifted by c times the supertrace; a u_chi module
/// with chi(e_kk)^p = (s c)^p - s c, s the parity sign of row k.
std::vector<Matrix> shifted_natural(const ColorAlgebra& A, Scalar c) {
  const Field& F = A.field();
  const Realization& R = *A.realization();
  std::vector<Matrix> mats = R.mats;
  const std::size_t d = R.row_degrees.size();
  for (std::size_t k = 0; k < d; ++k) {
    int b = A.index_of("e" + std::to_string(k + 1) + std::to_string(k + 1));
    Scalar s = A.grading().is_odd(R.row_degrees[k]) ? F.neg(c) : c;
    for (std::size_t r = 0; r < d; ++r) mats[b](r, r) = F.add(mats[b](r, r), s);
  }
  return mats;
}

PCharacter shifted_character(const ColorAlgebra& A, Scalar c) {
  const Field& F = A.field();
  const Realization& R = *A.realization();
  PCharacter chi;
  for (std::size_t k = 0; k < R.row_degrees.size(); ++k) {
    Scalar s = A.grading().is_odd(R.row_degrees[k]) ? F.neg(c) : c;
    chi.linear[A.index_of("e" + std::to_string(k + 1) + std::to_string(k + 1))] =
        F.pth_root(F.sub(F.pow(s, F.p()), s));
  }
  return chi;
}

std::vector<AlgebraPtr> sample_algebras(FieldPtr F) {
  return {fixtures::gl_trivial(F, 2), fixtures::gl_trivial(F, 3), fixtures::gl_super(F, 1, 1),
          fixtures::gl_super(F, 2, 1), make_gl(fixtures::klein(F), {{0, 1}, {1, 1}, {2, 1}})};
}

}  // namespace

TEST_CASE("PBW rewriting examples") {
  auto F = Field::make(5);
  SUBCASE("gl(2)") {
    auto A = fixtures::gl_trivial(F, 2);
    auto U = Envelope::universal(A);
    NormalElement r = U.product(U.generator(A->index_of("e12")), U.generator(A->index_of("e21")));
    NormalElement want = U.add(U.term(mono(*A, {{"e21", 1}, {"e12", 1}}), F->one()),
                               U.sub(U.generator(A->index_of("e11")), U.generator(A->index_of("e22"))));
    CHECK(r == want);
  }
  SUBCASE("gl(1|1)") {
    auto A = fixtures::gl_super(F, 1, 1);
    auto U = Envelope::universal(A);
    NormalElement e = U.generator(A->index_of("e12")), f = U.generator(A->index_of("e21"));
    NormalElement want = U.add(U.term(mono(*A, {{"e21", 1}, {"e12", 1}}), F->neg(F->one())),
                               U.add(U.generator(A->index_of("e11")), U.generator(A->index_of("e22"))));
    CHECK(U.product(e, f) == want);
    CHECK(U.product(f, f).is_zero());
    CHECK(U.product(e, e).is_zero());
  }
}

TEST_CASE("normal forms agree with the natural representation") {
  for (int p : {5, 7}) {
    auto F = Field::make(p);
    std::mt19937 rng(11 + p);
    for (const auto& A : sample_algebras(F)) {
      const auto& mats = A->realization()->mats;
      auto U = Envelope::universal(A);
      auto R = Envelope::reduced(make_reduced_spec(A, {}));
      for (int t = 0; t < 40; ++t) {
        Word w = random_word(rng, A->dim(), 7);
        Matrix want = word_matrix(*F, w, mats);
        CHECK(represent(U, nf_word(U, w), mats) == want);
        CHECK(represent(R, nf_word(R, w), mats) == want);
      }
    }
  }
}

TEST_CASE("reduced normal forms with nonzero character agree with a shifted representation") {
  auto F = Field::make(5, 2);
  Scalar c = F->generator();
  REQUIRE(F->pow(c, 5) != c);
  std::mt19937 rng(3);
  for (const auto& A : {fixtures::gl_trivial(F, 2), fixtures::gl_super(F, 1, 1), fixtures::gl_super(F, 2, 1)}) {
    auto mats = shifted_natural(*A, c);
    auto R = Envelope::reduced(make_reduced_spec(A, shifted_character(*A, c)));
    for (int t = 0; t < 40; ++t) {
      Word w = random_word(rng, A->dim(), 12);
      CHECK(represent(R, nf_word(R, w), mats) == word_matrix(*F, w, mats));
    }
  }
}

TEST_CASE("products are associative in both modes") {
  auto F = Field::make(5);
  std::mt19937 rng(5);
  for (const auto& A : sample_algebras(F)) {
    auto U = Envelope::universal(A);
    auto R = Envelope::reduced(make_reduced_spec(A, {}));
    for (const Envelope* E : {&U, &R})
      for (int t = 0; t < 10; ++t) {
        NormalElement a = random_homogeneous(*E, rng, 3), b = random_homogeneous(*E, rng, 3),
                      c = random_homogeneous(*E, rng, 3);
        CHECK(E->product(E->product(a, b), c) == E->product(a, E->product(b, c)));
      }
  }
}

TEST_CASE("low-degree PBW monomials are independent") {
  auto F = Field::make(5);
  for (const auto& A : {fixtures::gl_trivial(F, 2), fixtures::gl_super(F, 1, 1), fixtures::gl_super(F, 2, 1)}) {
    auto U = Envelope::universal(A);
    const int n = static_cast<int>(A->dim());
    // Every word of length <= 3; the span of their normal forms has the
    // dimension of the ordered multiset count.
    std::vector<NormalElement> elems;
    std::vector<Word> words{{}};
    for (int len = 1; len <= 3; ++len) {
      std::vector<Word> next;
      for (const Word& w : words)
        if (static_cast<int>(w.letters.size()) == len - 1)
          for (int g = 0; g < n; ++g) {
            Word v = w;
            v.letters.push_back(g);
            next.push_back(v);
          }
      words.insert(words.end(), next.begin(), next.end());
    }
    std::map<Monomial, std::size_t> index;
    for (const Word& w : words) {
      elems.push_back(nf_word(U, w));
      for (const auto& [m, c] : elems.back().terms) index.emplace(m, index.size());
    }
    SpanBuilder span(*F, index.size());
    for (const auto& u : elems) {
      Vec v(index.size());
      for (const auto& [m, c] : u.terms) v[index[m]] = c;
      span.add(v);
    }
    std::size_t expected = 0;
    std::vector<int> e(n, 0);
    std::function<void(int, int)> count = [&](int i, int left) {
      if (i == n) {
        ++expected;
        return;
      }
      int top = A->is_odd(i) ? std::min(1, left) : left;
      for (int k = 0; k <= top; ++k) count(i + 1, left - k);
    };
    count(0, 3);
    CHECK(span.dim() == expected);
  }
}

TEST_CASE("ad-power expansion holds for k up to 4") {
  auto F = Field::make(7);
  for (const auto& A : {fixtures::gl_trivial(F, 2), fixtures::gl_super(F, 1, 1),
                        make_gl(fixtures::klein(F), {{0, 1}, {1, 1}, {3, 1}})}) {
    auto U = Envelope::universal(A);
    const Grading& Gr = A->grading();
    for (int x = 0; x < static_cast<int>(A->dim()); ++x)
      for (int y = 0; y < static_cast<int>(A->dim()); ++y) {
        int a = A->degree(x), b = A->degree(y);
        Scalar c = Gr.sign(a, b), q = Gr.sign(a, a);
        NormalElement X = U.generator(x), Y = U.generator(y);
        Vec adk = A->basis_vec(y);
        for (int k = 1; k <= 4; ++k) {
          adk = linalg::apply(*F, A->ad(A->basis_vec(x)), adk);
          // Gaussian binomial expansion of prod_{t<k} (L - c q^t R); for
          // even x (q = 1) this is the ordinary binomial formula.
          NormalElement rhs = U.zero();
          for (int i = 0; i <= k; ++i) {
            Scalar coef = F->mul(F->pow(F->neg(c), i), F->pow(q, i * (i - 1) / 2));
            coef = F->mul(coef, quantum_binomial(*F, k, i, q));
            NormalElement t = U.product(U.product(U.power(X, k - i), Y), U.power(X, i));
            rhs = U.add(rhs, U.scale(coef, t));
          }
          CHECK(U.from_vec(adk) == rhs);
        }
      }
  }
}

TEST_CASE("x^p - x^[p] is central") {
  auto F = Field::make(5);
  SUBCASE("gl(2) examples") {
    auto A = fixtures::gl_trivial(F, 2);
    auto U = Envelope::universal(A);
    int e = A->index_of("e12"), h = A->index_of("e11");
    auto ce = central_check(U, e);
    CHECK(ce.report.empty());
    CHECK(ce.z == U.term(mono(*A, {{"e12", 5}}), F->one()));
    auto ch = central_check(U, h);
    CHECK(ch.report.empty());
    CHECK(ch.z == U.sub(U.term(mono(*A, {{"e11", 5}}), F->one()), U.generator(h)));
  }
  SUBCASE("every even basis element of several algebras") {
    for (const auto& A : sample_algebras(F)) {
      auto U = Envelope::universal(A);
      for (int x = 0; x < static_cast<int>(A->dim()); ++x)
        if (!A->is_odd(x)) CHECK(central_check(U, x).report.empty());
    }
  }
  SUBCASE("a corrupted p-map is caught") {
    auto A = fixtures::gl_trivial(F, 2);
    ColorAlgebra::Data d = A->data();
    int h = A->index_of("e11");
    (*d.pmap)[h] = {{h, F->from_int(2)}};
    auto B = ColorAlgebra::make(d);
    auto U = Envelope::universal(B);
    auto r = central_check(U, h);
    CHECK_FALSE(r.report.empty());
    CHECK(central_check(U, A->index_of("e12")).report.empty());
  }
}

TEST_CASE("binomial formula for a central summand") {
  auto F = Field::make(5);
  auto A = make_gl(fixtures::klein(F), {{0, 1}, {1, 1}});
  auto U = Envelope::universal(A);
  const Grading& Gr = A->grading();
  const int p = F->p();
  for (int x = 0; x < static_cast<int>(A->dim()); ++x) {
    if (A->is_odd(x)) continue;
    NormalElement a = central_check(U, x).z;
    int alpha = Gr.group().mul(p, A->degree(x));
    for (int y = 0; y < static_cast<int>(A->dim()); ++y) {
      NormalElement b = U.generator(y);
      Scalar q = Gr.sign(A->degree(y), alpha);
      NormalElement sum = U.add(a, b);
      for (int n = 1; n <= 4; ++n) {
        NormalElement rhs = U.zero();
        for (int i = 0; i <= n; ++i)
          rhs = U.add(rhs, U.scale(quantum_binomial(*F, n, i, q), U.product(U.power(a, i), U.power(b, n - i))));
        CHECK(U.power(sum, n) == rhs);
      }
    }
  }
}

TEST_CASE("u_chi basis counts") {
  auto F = Field::make(5);
  SUBCASE("gl(2)") {
    auto spec = make_reduced_spec(fixtures::gl_trivial(F, 2), {});
    CHECK(uchi_count(*spec) == 625);
    CHECK(uchi_basis(Envelope::reduced(spec)).size() == 625);
  }
  SUBCASE("gl(1|1) with a linear character") {
    auto A = fixtures::gl_super(F, 1, 1);
    PCharacter chi;
    chi.linear[A->index_of("e11")] = F->from_int(2);
    auto spec = make_reduced_spec(A, chi);
    CHECK(uchi_count(*spec) == 100);
    auto R = Envelope::reduced(spec);
    auto basis = uchi_basis(R);
    CHECK(basis.size() == 100);
    CHECK(basis_closure_violations(R, basis, 10000, 1).empty());
  }
  SUBCASE("F-class on Z/25") {
    auto G = Grading::make(F, GradedGroup({25}), {{F->one()}});
    auto A = fixtures::abelian(G, {1});
    PCharacter chi;
    chi.fclasses.push_back({1, 0, {F->one()}, 0});
    auto spec = make_reduced_spec(A, chi);
    CHECK(spec->s_of.at(0) == 5);
    CHECK(uchi_count(*spec) == 25);
    auto R = Envelope::reduced(spec);
    auto basis = uchi_basis(R);
    CHECK(basis.size() == 25);
    CHECK(basis_closure_violations(R, basis, 1000, 1).empty());
    NormalElement x = R.generator(0);
    CHECK(R.power(x, 25) == R.one());
    for (int i = 0; i < 25; i += 3)
      for (int j = 0; j < 25; j += 4)
        CHECK(R.product(R.power(x, i), R.power(x, j)) == R.term(make_monomial({(i + j) % 25}), F->one()));
  }
  SUBCASE("klein-graded gl with a mixed cap profile") {
    auto A = make_gl(fixtures::klein(F), {{0, 1}, {1, 1}, {2, 1}});
    auto spec = make_reduced_spec(A, {});
    int odd = 0;
    for (int i = 0; i < static_cast<int>(A->dim()); ++i) odd += A->is_odd(i);
    std::uint64_t want = 1;
    for (int i = 0; i < static_cast<int>(A->dim()) - odd; ++i) want *= 5;
    for (int i = 0; i < odd; ++i) want *= 2;
    CHECK(uchi_count(*spec) == want);
  }
}

TEST_CASE("F-class relations do not depend on the representative") {
  auto F = Field::make(5);
  auto G = Grading::make(F, GradedGroup({25}), {{F->one()}});
  auto A = fixtures::abelian(G, {1, 1});
  // (x1, c) ~ (x2, b) with c = b = x1* + x2*, so c(x2) = b(x1) = 1.
  Vec c{F->one(), F->one()};
  PCharacter c1, c2;
  c1.fclasses.push_back({1, 0, c, 0});
  c2.fclasses.push_back({1, 1, c, 0});
  auto R1 = Envelope::reduced(make_reduced_spec(A, c1));
  auto R2 = Envelope::reduced(make_reduced_spec(A, c2));
  CHECK(uchi_count(*R1.spec()) == 125);
  CHECK(uchi_count(*R2.spec()) == 125);
  // The defining relations of one quotient vanish in the other.
  for (const Envelope* E : {&R1, &R2}) {
    NormalElement x1p = E->power(E->generator(0), 5), x2p = E->power(E->generator(1), 5);
    CHECK(E->sub(x1p, x2p).is_zero());
    CHECK(E->power(x1p, 5) == E->one());
    CHECK(E->power(x2p, 5) == E->one());
  }
}

TEST_CASE("reduced spec validation") {
  auto F = Field::make(5);
  auto G = Grading::make(F, GradedGroup({25}), {{F->one()}});
  auto A = fixtures::abelian(G, {1});
  PCharacter lin;
  lin.linear[0] = F->one();
  CHECK(error_code([&] { make_reduced_spec(A, lin); }) == Errc::BadCharacter);
  PCharacter badc;
  badc.fclasses.push_back({1, 0, {F->from_int(2)}, 0});
  CHECK(error_code([&] { make_reduced_spec(A, badc); }) == Errc::BadCharacter);
  ColorAlgebra::Data d = fixtures::gl_trivial(F, 2)->data();
  d.pmap->erase(0);
  auto B = ColorAlgebra::make(d);
  CHECK(error_code([&] { make_reduced_spec(B, {}); }) == Errc::NotRestricted);
}

TEST_CASE("products across envelopes are rejected") {
  auto F = Field::make(5);
  auto A = fixtures::gl_trivial(F, 2);
  auto U = Envelope::universal(A);
  auto R = Envelope::reduced(make_reduced_spec(A, {}));
  CHECK(error_code([&] { U.product(U.generator(0), R.generator(1)); }) == Errc::MixedSpecs);
}

TEST_CASE("Frobenius form") {
  auto F = Field::make(5);
  SUBCASE("one-dimensional abelian") {
    auto A = fixtures::abelian(Grading::trivial(F), {0});
    auto R = Envelope::reduced(make_reduced_spec(A, {}));
    auto G = frobenius_gram(R);
    REQUIRE(G.basis.size() == 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) {
        int a = exponents(G.basis[i])[0], b = exponents(G.basis[j])[0];
        CHECK(G.gram(i, j) == (a + b == 4 ? F->one() : F->zero()));
      }
    CHECK(G.nondegenerate);
    CHECK(G.symmetric);
  }
  SUBCASE("positive nilradical of gl(3)") {
    auto gl3 = fixtures::gl_trivial(F, 3);
    auto N = restrict_algebra(*gl3, {gl3->index_of("e12"), gl3->index_of("e23"), gl3->index_of("e13")});
    auto G = frobenius_gram(Envelope::reduced(make_reduced_spec(N, {})));
    CHECK(G.rank == 125);
    CHECK(G.symmetric);
  }
  SUBCASE("full rank on gl(2) and gl(1|1)") {
    CHECK(frobenius_gram(Envelope::reduced(make_reduced_spec(fixtures::gl_trivial(F, 2), {}))).nondegenerate);
    auto A = fixtures::gl_super(F, 1, 1);
    PCharacter chi;
    chi.linear[A->index_of("e22")] = F->from_int(3);
    CHECK(frobenius_gram(Envelope::reduced(make_reduced_spec(A, chi))).nondegenerate);
  }
  SUBCASE("cutoff") {
    auto R = Envelope::reduced(make_reduced_spec(fixtures::gl_trivial(F, 2), {}));
    CHECK(error_code([&] { frobenius_gram(R, 100); }) == Errc::TooLarge);
  }
}

TEST_CASE("Harish-Chandra projection") {
  auto F = Field::make(5);
  auto A = fixtures::gl_trivial(F, 2);
  int e = A->index_of("e12"), f = A->index_of("e21"), h1 = A->index_of("e11"), h2 = A->index_of("e22");
  auto U = Envelope::universal(A);
  auto R = Envelope::reduced(make_reduced_spec(A, {}));
  for (const Envelope* E : {&U, &R}) {
    NormalElement E1 = E->generator(e), F1 = E->generator(f);
    auto g1 = harish_chandra(*E, E->product(E1, F1));
    CHECK(g1.gamma == E->sub(E->generator(h1), E->generator(h2)));
    CHECK(g1.discarded_in_L);
    auto g2 = harish_chandra(*E, E->product(E->power(E1, 2), E->power(F1, 2)));
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) {
        Vec lam(A->dim());
        lam[h1] = F->from_int(a);
        lam[h2] = F->from_int(b);
        int t = a - b;
        CHECK(evaluate_on_cartan(*E, g2.gamma, lam) == F->from_int(2 * t * t - 2 * t));
      }
    CHECK(harish_chandra(*E, E->one()).gamma == E->one());
    CHECK(error_code([&] { harish_chandra(*E, E1); }) == Errc::NotWeightZero);
  }
}

TEST_CASE("Harish-Chandra projection is multiplicative on weight zero") {
  auto F = Field::make(5);
  for (const auto& A : {fixtures::gl_trivial(F, 3), fixtures::gl_super(F, 2, 1)}) {
    auto R = Envelope::reduced(make_reduced_spec(A, {}));
    const TriangularData& T = *A->triangular();
    std::mt19937 rng(9);
    auto weight_zero = [&]() {
      // A root vector, its opposite and a Cartan factor in a random order.
      const auto& t = T.triples[rng() % T.triples.size()];
      std::vector<int> w{t.e, t.f, T.cartan[rng() % T.cartan.size()]};
      std::shuffle(w.begin(), w.end(), rng);
      Word word{w};
      return nf_word(R, word);
    };
    for (int k = 0; k < 15; ++k) {
      NormalElement u = weight_zero(), v = weight_zero();
      auto gu = harish_chandra(R, u), gv = harish_chandra(R, v), guv = harish_chandra(R, R.product(u, v));
      CHECK(guv.gamma == R.product(gu.gamma, gv.gamma));
      CHECK(guv.discarded_in_L);
    }
  }
}
