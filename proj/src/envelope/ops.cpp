#include "colorlie/envelope/ops.hpp"

#include <random>
#include <unordered_map>

#include "colorlie/core/error.hpp"

namespace colorlie {

CentralCheck central_check(const Envelope& U, int x) {
  const ColorAlgebra& A = U.algebra();
  const Field& F = A.field();
  const int p = F.p();
  if (A.is_odd(x)) throw Error(Errc::OddElement, A.name(x) + " is odd");
  const SparseVec* pm = A.pmap_basis(x);
  if (!pm) throw Error(Errc::NotRestricted, "no p-map value for " + A.name(x));
  CentralCheck out;
  NormalElement xp = U.power(U.generator(x), p);
  out.z = U.sub(xp, U.from_vec(to_dense(*pm, A.dim())));
  const int pd = A.grading().group().mul(p, A.degree(x));
  for (std::size_t y = 0; y < A.dim(); ++y) {
    NormalElement yv = U.generator(static_cast<int>(y));
    NormalElement lhs = U.product(out.z, yv);
    NormalElement rhs = U.scale(A.grading().sign(pd, A.degree(static_cast<int>(y))), U.product(yv, out.z));
    if (!(lhs == rhs))
      out.report.push_back("x^p - x^[p] does not color-commute with " + A.name(static_cast<int>(y)) +
                           " for x = " + A.name(x));
  }
  return out;
}

std::uint64_t uchi_count(const ReducedAlgebraSpec& spec) {
  std::uint64_t c = 1;
  for (int cap : spec.caps()) {
    if (c > UINT64_MAX / static_cast<std::uint64_t>(cap)) throw Error(Errc::TooLarge, "basis count overflows");
    c *= static_cast<std::uint64_t>(cap);
  }
  return c;
}

std::vector<Monomial> uchi_basis(const Envelope& E, std::uint64_t limit) {
  const std::vector<int>& caps = E.caps();
  std::uint64_t count = 1;
  for (int c : caps) {
    if (c == 0) throw Error(Errc::InvalidInput, "basis enumeration needs a reduced envelope");
    count *= static_cast<std::uint64_t>(c);
    if (count > limit) throw Error(Errc::TooLarge, "u_chi basis exceeds the enumeration limit");
  }
  const std::size_t n = caps.size();
  std::vector<Monomial> out;
  out.reserve(count);
  std::vector<int> e(n, 0);
  while (true) {
    out.push_back(make_monomial(e));
    int i = static_cast<int>(n) - 1;
    while (i >= 0 && ++e[i] == caps[i]) e[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

std::vector<std::string> basis_closure_violations(const Envelope& E, const std::vector<Monomial>& basis,
                                                  std::uint64_t budget, unsigned seed) {
  std::vector<std::string> bad;
  const Field& F = E.field();
  const std::vector<int>& caps = E.caps();
  auto check = [&](std::size_t a, std::size_t b) {
    NormalElement r = E.product(E.term(basis[a], F.one()), E.term(basis[b], F.one()));
    for (const auto& [m, c] : r.terms) {
      std::vector<int> ex = exponents(m);
      for (std::size_t k = 0; k < ex.size(); ++k)
        if (caps[k] && ex[k] >= caps[k]) {
          bad.push_back("product of basis monomials " + std::to_string(a) + " and " + std::to_string(b) +
                        " leaves the caps");
          return;
        }
    }
  };
  const std::uint64_t N = basis.size();
  if (N * N <= budget) {
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) check(a, b);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, N - 1);
    for (std::uint64_t t = 0; t < budget; ++t) check(pick(rng), pick(rng));
  }
  return bad;
}

FrobeniusGram frobenius_gram(const Envelope& E, std::size_t cutoff) {
  if (!E.is_reduced()) throw Error(Errc::InvalidInput, "Frobenius form needs a reduced envelope");
  std::uint64_t N = uchi_count(*E.spec());
  if (N > cutoff)
    throw Error(Errc::TooLarge, "u_chi has dimension " + std::to_string(N) + " above the Gram cutoff " +
                                    std::to_string(cutoff));
  const Field& F = E.field();
  const std::size_t n = E.dim();
  FrobeniusGram out;
  out.basis = uchi_basis(E, N);
  std::unordered_map<Monomial, std::size_t> pos;
  for (std::size_t i = 0; i < N; ++i) pos.emplace(out.basis[i], i);

  // right[j][u]: sparse normal form of basis_u * x_j.
  std::vector<std::vector<std::vector<std::pair<std::size_t, Scalar>>>> right(
      n, std::vector<std::vector<std::pair<std::size_t, Scalar>>>(N));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t u = 0; u < N; ++u) {
      NormalElement r = E.times_generator(E.term(out.basis[u], F.one()), static_cast<int>(j));
      for (const auto& [m, c] : r.terms) right[j][u].emplace_back(pos.at(m), c);
    }

  std::vector<int> top(n);
  for (std::size_t i = 0; i < n; ++i) top[i] = E.caps()[i] - 1;
  const std::size_t tau = pos.at(make_monomial(top));

  // psi_v(u) = top coefficient of u v. With v = x_j v'' (first letter
  // removed), psi_v(u) = psi_{v''}(u x_j).
  std::vector<std::size_t> order(N);
  for (std::size_t i = 0; i < N; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return total_degree(out.basis[a]) < total_degree(out.basis[b]);
  });
  out.gram = Matrix(N, N);
  std::vector<Vec> psi(N);
  for (std::size_t v : order) {
    const Monomial& m = out.basis[v];
    Vec col(N);
    int first = -1;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) {
        first = static_cast<int>(i);
        break;
      }
    if (first < 0) {
      col[tau] = F.one();
    } else {
      Monomial rest = m;
      rest[first] = static_cast<char>(static_cast<unsigned char>(rest[first]) - 1);
      const Vec& prev = psi[pos.at(rest)];
      for (std::size_t u = 0; u < N; ++u) {
        Scalar s{0};
        for (auto [w, c] : right[first][u]) s = F.add(s, F.mul(prev[w], c));
        col[u] = s;
      }
    }
    for (std::size_t u = 0; u < N; ++u) out.gram(u, v) = col[u];
    psi[v] = std::move(col);
  }
  out.rank = linalg::rank(F, out.gram);
  out.nondegenerate = out.rank == N;
  out.symmetric = true;
  const Grading& Gr = E.algebra().grading();
  std::vector<int> deg(N);
  for (std::size_t i = 0; i < N; ++i) deg[i] = E.degree(out.basis[i]);
  for (std::size_t a = 0; a < N && out.symmetric; ++a)
    for (std::size_t b = a; b < N; ++b)
      if (out.gram(a, b) != F.mul(Gr.sign(deg[a], deg[b]), out.gram(b, a))) {
        out.symmetric = false;
        break;
      }
  return out;
}

std::vector<int> monomial_weight(const TriangularData& T, const Monomial& m) {
  std::vector<int> w(T.rank, 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    int e = static_cast<unsigned char>(m[i]);
    if (!e) continue;
    for (int r = 0; r < T.rank; ++r) w[r] += e * T.eps[i][r];
  }
  return w;
}

HarishChandra harish_chandra(const Envelope& E, const NormalElement& u) {
  const ColorAlgebra& A = E.algebra();
  if (!A.triangular()) throw Error(Errc::NoMatrixRealization, "Harish-Chandra projection needs root data");
  const TriangularData& T = *A.triangular();
  if (E.is_reduced()) {
    const PCharacter& chi = E.spec()->chi;
    if (!chi.fclasses.empty()) throw Error(Errc::NotStandard, "character has F-classes");
    for (auto [i, c] : chi.linear)
      if (c.v && std::find(T.cartan.begin(), T.cartan.end(), i) == T.cartan.end())
        throw Error(Errc::NotStandard, "character is nonzero on root vector " + A.name(i));
  }
  std::vector<bool> is_cartan(A.dim(), false), is_pos(A.dim(), false), is_neg(A.dim(), false);
  for (int b : T.cartan) is_cartan[b] = true;
  for (int b : T.pos) is_pos[b] = true;
  for (int b : T.neg) is_neg[b] = true;
  HarishChandra out;
  TermAccumulator acc(E.field());
  for (const auto& [m, c] : u.terms) {
    for (int w : monomial_weight(T, m))
      if (w != 0) throw Error(Errc::NotWeightZero, "element has a term of nonzero weight");
    bool cartan_only = true, has_pos = false, has_neg = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!is_cartan[i]) cartan_only = false;
      has_pos = has_pos || is_pos[i];
      has_neg = has_neg || is_neg[i];
    }
    if (cartan_only)
      acc.add(m, c);
    else if (!(has_pos && has_neg))
      out.discarded_in_L = false;
  }
  out.gamma = acc.finish(E.id());
  return out;
}

Scalar evaluate_on_cartan(const Envelope& E, const NormalElement& gamma, const Vec& lambda) {
  const Field& F = E.field();
  Scalar total{0};
  for (const auto& [m, c] : gamma.terms) {
    Scalar t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t = F.mul(t, F.pow(lambda[i], static_cast<unsigned char>(m[i])));
    total = F.add(total, t);
  }
  return total;
}

}  // namespace colorlie
