#include <random>

#include "doctest.h"

#include "colorlie/core/error.hpp"
#include "colorlie/core/field.hpp"
#include "colorlie/core/grading.hpp"
#include "colorlie/core/matrix.hpp"
#include "colorlie/core/poly.hpp"
#include "colorlie/core/qbinomial.hpp"

using namespace colorlie;

namespace {

// Schoolbook product of coefficient vectors reduced by a monic modulus.
std::vector<int> oracle_mul(const std::vector<int>& a, const std::vector<int>& b,
                            const std::vector<int>& m, int p) {
  int k = static_cast<int>(a.size());
  std::vector<long long> r(2 * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) r[i + j] = (r[i + j] + 1LL * a[i] * b[j]) % p;
  for (int d = 2 * k - 1; d >= k; --d)
    for (int i = 0; i <= k; ++i) r[d - k + i] = ((r[d - k + i] - r[d] * m[i]) % p + p) % p;
  return std::vector<int>(r.begin(), r.begin() + k);
}

Scalar det(const Field& F, Matrix A) {
  const std::size_t n = A.rows();
  Scalar d = F.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (A(i, c).v) {
        piv = i;
        break;
      }
    if (piv == n) return F.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(A(piv, j), A(c, j));
      d = F.neg(d);
    }
    d = F.mul(d, A(c, c));
    Scalar inv = F.inv(A(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      Scalar f = F.mul(A(i, c), inv);
      for (std::size_t j = c; j < n; ++j) A(i, j) = F.sub(A(i, j), F.mul(f, A(c, j)));
    }
  }
  return d;
}

Matrix random_matrix(const Field& F, std::mt19937& rng, std::size_t r, std::size_t c,
                     int zero_bias = 0) {
  Matrix M(r, c);
  std::uniform_int_distribution<std::uint32_t> d(0, F.size() - 1);
  std::uniform_int_distribution<int> z(0, 9);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) M(i, j) = z(rng) < zero_bias ? Scalar{0} : Scalar{d(rng)};
  return M;
}

}  // namespace

TEST_CASE("prime field has modulus x") {
  auto F = Field::make(5);
  CHECK(F->size() == 5);
  CHECK(F->modulus() == std::vector<int>{0, 1});
}

TEST_CASE("default quadratic modulus is the first irreducible in scan order") {
  // Oracle: a monic quadratic over F_5 is irreducible iff it has no root.
  std::vector<int> expected;
  for (int n = 0; n < 25 && expected.empty(); ++n) {
    int c0 = n % 5, c1 = n / 5;
    bool has_root = false;
    for (int x = 0; x < 5; ++x)
      if ((x * x + c1 * x + c0) % 5 == 0) has_root = true;
    if (!has_root) expected = {c0, c1, 1};
  }
  auto F = Field::make(5, 2);
  CHECK(F->modulus() == expected);
  CHECK(F->modulus() == std::vector<int>{2, 0, 1});
}

TEST_CASE("field construction errors") {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidInput;
  };
  CHECK(code([] { Field::make(4); }) == Errc::NonPrime);
  CHECK(code([] { Field::make(3); }) == Errc::BadCharacteristic);
  CHECK(code([] { Field::make(5, 2, std::vector<int>{1, 0, 1}); }) == Errc::ReducibleModulus);
  CHECK(code([] { Field::make(5, 2, std::vector<int>{2, 1}); }) == Errc::ReducibleModulus);
  CHECK_NOTHROW(Field::make(7, 3));
}

TEST_CASE("extension field arithmetic matches polynomial multiplication") {
  for (auto [p, k] : {std::pair{5, 2}, std::pair{7, 2}, std::pair{5, 3}}) {
    auto F = Field::make(p, k);
    for (Scalar a : F->elements()) {
      for (Scalar b : F->elements()) {
        auto ca = F->coeffs(a), cb = F->coeffs(b);
        CHECK_EQ(F->coeffs(F->mul(a, b)), oracle_mul(ca, cb, F->modulus(), p));
        auto sum = F->coeffs(F->add(a, b));
        for (int i = 0; i < k; ++i) CHECK_EQ(sum[i], (ca[i] + cb[i]) % p);
      }
      if (a.v) {
        CHECK(F->mul(a, F->inv(a)) == F->one());
        CHECK(F->pow(F->pth_root(a), p) == a);
      }
      CHECK(F->add(a, F->neg(a)) == F->zero());
    }
  }
}

TEST_CASE("bicharacter validation") {
  auto F = Field::make(5);
  Scalar m1 = F->neg(F->one());
  SUBCASE("super sign") {
    auto rep = bichar_validate(*F, GradedGroup({2}), {{m1}});
    CHECK(rep.ok());
    CHECK(rep.even == std::vector<int>{0});
    CHECK(rep.odd == std::vector<int>{1});
  }
  SUBCASE("eps(1,1) = 2 is not skew") {
    auto rep = bichar_validate(*F, GradedGroup({2}), {{F->from_int(2)}});
    CHECK_FALSE(rep.ok());
  }
  SUBCASE("trivial group") {
    auto rep = bichar_validate(*F, GradedGroup(std::vector<int>{}), {});
    CHECK(rep.ok());
    CHECK(rep.odd.empty());
    auto rep1 = bichar_validate(*F, GradedGroup({1}), {{F->one()}});
    CHECK(rep1.ok());
  }
  SUBCASE("zero entry") {
    CHECK_THROWS_AS(bichar_validate(*F, GradedGroup({2}), {{F->zero()}}), Error);
  }
  SUBCASE("Klein four with mixed signs") {
    BicharTable t = {{F->one(), m1}, {m1, F->one()}};
    auto rep = bichar_validate(*F, GradedGroup({2, 2}), t);
    CHECK(rep.ok());
    CHECK(rep.odd.empty());
  }
}

TEST_CASE("color sign extends biadditively") {
  auto F = Field::make(5);
  GradedGroup G({4});
  BicharTable t = {{F->from_int(2)}};
  CHECK(color_sign(*F, G, t, {2}, {3}) == F->from_int(4));
  CHECK(color_sign(*F, G, t, {3}, {0}) == F->one());

  // Z/2 x Z/3 over F_7 with the super sign on the first factor.
  auto F7 = Field::make(7);
  BicharTable t2 = {{F7->neg(F7->one()), F7->one()}, {F7->one(), F7->one()}};
  auto g = Grading::make(F7, GradedGroup({2, 3}), t2);
  const auto& Gr = g->group();
  for (int a = 0; a < Gr.size(); ++a) {
    CHECK(F7->mul(g->sign(a, a), g->sign(a, a)) == F7->one());
    for (int b = 0; b < Gr.size(); ++b) {
      CHECK(F7->mul(g->sign(a, b), g->sign(b, a)) == F7->one());
      for (int c = 0; c < Gr.size(); ++c) {
        CHECK(g->sign(a, Gr.add(b, c)) == F7->mul(g->sign(a, b), g->sign(a, c)));
        CHECK(g->sign(Gr.add(a, b), c) == F7->mul(g->sign(a, c), g->sign(b, c)));
      }
    }
  }
}

TEST_CASE("quantum binomial") {
  auto F = Field::make(5);
  CHECK(quantum_binomial(*F, 4, 2, F->one()) == F->one());
  auto F25 = Field::make(5, 2);
  for (Scalar q : F25->elements()) {
    CHECK(quantum_binomial(*F25, 2, 1, q) == F25->add(F25->one(), q));
    for (int n = 0; n <= 9; ++n) CHECK(quantum_binomial(*F25, n, 0, q) == F25->one());
  }
}

TEST_CASE("quantum binomial agrees with q-Pascal recursion at every q") {
  // Oracle: Gaussian polynomials built by the q-Pascal rule over Z, then
  // reduced mod p and evaluated.
  const int N = 12;
  std::vector<std::vector<std::vector<long long>>> G(N + 1);
  for (int n = 0; n <= N; ++n) {
    G[n].resize(n + 1);
    G[n][0] = {1};
    G[n][n] = {1};
    for (int i = 1; i < n; ++i) {
      auto a = G[n - 1][i];
      auto b = G[n - 1][i - 1];
      std::vector<long long> r(std::max(a.size(), b.size() + (n - i)), 0);
      for (std::size_t t = 0; t < a.size(); ++t) r[t] += a[t];
      for (std::size_t t = 0; t < b.size(); ++t) r[t + n - i] += b[t];
      G[n][i] = r;
    }
  }
  for (auto [p, k] : {std::pair{5, 1}, std::pair{5, 2}, std::pair{7, 1}}) {
    auto F = Field::make(p, k);
    for (Scalar q : F->elements()) {
      for (int n = 0; n <= N; ++n) {
        for (int i = 0; i <= n; ++i) {
          Scalar want = F->zero(), qp = F->one();
          for (long long c : G[n][i]) {
            want = F->add(want, F->mul(F->from_int(c), qp));
            qp = F->mul(qp, q);
          }
          CHECK(quantum_binomial(*F, n, i, q) == want);
        }
      }
    }
  }
}

TEST_CASE("rank-nullity, kernels, solve, inverse") {
  std::mt19937 rng(17);
  for (auto [p, k] : {std::pair{5, 1}, std::pair{7, 1}, std::pair{5, 2}}) {
    auto F = Field::make(p, k);
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
      Matrix A = random_matrix(*F, rng, r, c, trial % 8);
      auto ker = linalg::kernel(*F, A);
      CHECK(linalg::rank(*F, A) + ker.size() == c);
      for (const auto& v : ker) CHECK(linalg::is_zero(linalg::apply(*F, A, v)));
      Vec x(c);
      for (auto& s : x) s = Scalar{static_cast<std::uint32_t>(rng() % F->size())};
      Vec b = linalg::apply(*F, A, x);
      auto sol = linalg::solve(*F, A, b);
      REQUIRE(sol);
      CHECK(linalg::apply(*F, A, *sol) == b);
      if (r == c) {
        auto inv = linalg::inverse(*F, A);
        CHECK(inv.has_value() == (det(*F, A).v != 0));
        if (inv) CHECK(linalg::multiply(*F, A, *inv) == Matrix::identity(r));
      }
    }
  }
}

TEST_CASE("span builder tracks dimension") {
  auto F = Field::make(5);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix A = random_matrix(*F, rng, 6, 5, trial % 7);
    SpanBuilder S(*F, 5);
    for (std::size_t i = 0; i < A.rows(); ++i) S.add(A.row_vec(i));
    CHECK(S.dim() == linalg::rank(*F, A));
    for (std::size_t i = 0; i < A.rows(); ++i) CHECK(S.contains(A.row_vec(i)));
  }
}

TEST_CASE("characteristic polynomial matches det(tI - A)") {
  std::mt19937 rng(5);
  auto F = Field::make(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng() % 6;
    Matrix A = random_matrix(*F, rng, n, n, trial % 6);
    Poly cp = poly::charpoly(*F, A);
    CHECK(poly::degree(cp) == static_cast<int>(n));
    for (Scalar t : F->elements()) {
      Matrix M = linalg::scale(*F, F->neg(F->one()), A);
      for (std::size_t i = 0; i < n; ++i) M(i, i) = F->add(M(i, i), t);
      CHECK(poly::eval(*F, cp, t) == det(*F, M));
    }
  }
}

TEST_CASE("splitting degree of products of irreducibles") {
  auto F = Field::make(5);
  Poly quad = {F->from_int(2), F->zero(), F->one()};                   // x^2 + 2
  Poly cubic = {F->from_int(1), F->from_int(1), F->zero(), F->one()};  // x^3 + x + 1
  REQUIRE(poly::roots(*F, cubic).empty());
  CHECK(poly::splitting_degree(*F, quad) == 2);
  CHECK(poly::splitting_degree(*F, cubic) == 3);
  CHECK(poly::splitting_degree(*F, poly::mul(*F, quad, cubic)) == 6);
  CHECK(poly::splitting_degree(*F, poly::mul(*F, quad, quad)) == 2);
  Poly lin = {F->from_int(3), F->one()};
  CHECK(poly::splitting_degree(*F, poly::mul(*F, lin, lin)) == 1);
}

TEST_CASE("interpolation recovers polynomial coefficients") {
  auto F = Field::make(7);
  Poly f = {F->from_int(3), F->from_int(0), F->from_int(5), F->from_int(1)};
  std::vector<Scalar> xs, ys;
  for (int t = 0; t < 4; ++t) {
    xs.push_back(F->from_int(t));
    ys.push_back(poly::eval(*F, f, xs.back()));
  }
  CHECK(poly::interpolate(*F, xs, ys) == f);
}
