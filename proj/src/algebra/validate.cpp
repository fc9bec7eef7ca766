#include "colorlie/algebra/validate.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "colorlie/core/error.hpp"
#include "colorlie/core/poly.hpp"

namespace colorlie {

bool AlgebraReport::has(const std::string& kind) const {
  for (const auto& v : violations)
    if (v.kind == kind) return true;
  return false;
}

std::vector<Vec> jacobson_terms(const ColorAlgebra& A, const Vec& x, const Vec& y) {
  const Field& F = A.field();
  const int p = F.p();
  const std::size_t n = A.dim();
  std::vector<Scalar> ts;
  std::vector<Vec> vals;
  for (int t = 0; t < p; ++t) {
    Scalar ts_ = F.from_int(t);
    Vec z = linalg::vadd(F, linalg::vscale(F, ts_, x), y);
    Matrix adz = A.ad(z);
    Vec v = x;
    for (int r = 0; r < p - 1; ++r) v = linalg::apply(F, adz, v);
    ts.push_back(ts_);
    vals.push_back(std::move(v));
  }
  // coeff[d][k]: coefficient of t^d in coordinate k.
  std::vector<Vec> coeff(p, Vec(n));
  std::vector<Scalar> ys(p);
  for (std::size_t k = 0; k < n; ++k) {
    bool any = false;
    for (int t = 0; t < p; ++t) {
      ys[t] = vals[t][k];
      any = any || ys[t].v;
    }
    if (!any) continue;
    Poly c = poly::interpolate(F, ts, ys);
    for (int d = 0; d < p; ++d) coeff[d][k] = c[d];
  }
  std::vector<Vec> s(p - 1);
  for (int i = 1; i <= p - 1; ++i)
    s[i - 1] = linalg::vscale(F, F.inv(F.from_int(i)), coeff[i - 1]);
  return s;
}

Vec pmap_eval(const ColorAlgebra& A, const Vec& x) {
  const Field& F = A.field();
  const std::size_t n = A.dim();
  int deg = A.degree_of(x);
  Vec result(n);
  if (deg < 0) {
    if (linalg::is_zero(x)) return result;
    throw Error(Errc::InvalidInput, "p-map needs a homogeneous element");
  }
  if (A.grading().is_odd(deg)) throw Error(Errc::OddElement, "p-map is defined on even elements only");
  Vec acc(n);
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].v == 0) continue;
    const SparseVec* pm = A.pmap_basis(static_cast<int>(i));
    if (!pm) throw Error(Errc::NotRestricted, "no p-map value for " + A.name(static_cast<int>(i)));
    Scalar cp = F.pow(x[i], F.p());
    for (auto [k, c] : *pm) result[k] = F.add(result[k], F.mul(cp, c));
    Vec y(n);
    y[i] = x[i];
    if (!first) {
      for (const Vec& s : jacobson_terms(A, acc, y)) result = linalg::vadd(F, result, s);
    }
    acc[i] = x[i];
    first = false;
  }
  return result;
}

namespace {

std::string tuple_name(const ColorAlgebra& A, std::initializer_list<int> idx) {
  std::string s = "(";
  bool first = true;
  for (int i : idx) {
    if (!first) s += ",";
    s += A.name(i);
    first = false;
  }
  return s + ")";
}

}  // namespace

AlgebraReport validate_algebra(const ColorAlgebra& A, unsigned seed, int samples) {
  AlgebraReport rep;
  const Field& F = A.field();
  const Grading& Gr = A.grading();
  const int n = static_cast<int>(A.dim());
  const int p = F.p();
  auto add = [&](std::string kind, std::vector<int> idx, std::string msg) {
    rep.violations.push_back({std::move(kind), std::move(idx), std::move(msg)});
  };
  auto bvec = [&](int i) { return A.basis_vec(i); };
  auto br = [&](int i, int j) { return to_dense(A.bracket_basis(i, j), n); };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int want = Gr.add(A.degree(i), A.degree(j));
      for (auto [k, c] : A.bracket_basis(i, j))
        if (A.degree(k) != want) {
          add("degree", {i, j}, "[" + A.name(i) + "," + A.name(j) + "] has a component outside the sum degree");
          break;
        }
      // [y,x] = -eps(beta,alpha)[x,y]
      Vec lhs = br(j, i);
      Vec rhs = linalg::vscale(F, F.neg(Gr.sign(A.degree(j), A.degree(i))), br(i, j));
      if (j >= i && lhs != rhs) add("skew", {i, j}, "color skew-symmetry fails at " + tuple_name(A, {i, j}));
    }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        int a = A.degree(i), b = A.degree(j), c = A.degree(k);
        Vec t1 = A.bracket(bvec(i), br(j, k));
        Vec t2 = A.bracket(bvec(j), br(k, i));
        Vec t3 = A.bracket(bvec(k), br(i, j));
        Vec sum = linalg::vscale(F, Gr.sign(c, a), t1);
        linalg::axpy(F, sum, Gr.sign(a, b), t2);
        linalg::axpy(F, sum, Gr.sign(b, c), t3);
        if (!linalg::is_zero(sum))
          add("jacobi", {i, j, k}, "color Jacobi identity fails at " + tuple_name(A, {i, j, k}));
      }

  // Identities forced on even squares and odd elements.
  Scalar two = F.from_int(2);
  for (int i = 0; i < n; ++i) {
    if (!A.is_odd(i)) {
      if (!A.bracket_basis(i, i).empty())
        add("even-square", {i}, "[x,x] != 0 for even " + A.name(i));
      continue;
    }
    Vec yy = br(i, i);
    if (!linalg::is_zero(A.bracket(yy, bvec(i))))
      add("odd-cube", {i}, "[[y,y],y] != 0 for odd " + A.name(i));
    for (int k = 0; k < n; ++k) {
      Vec lhs = A.bracket(yy, bvec(k));
      Vec rhs = linalg::vscale(F, two, A.bracket(bvec(i), br(i, k)));
      if (lhs != rhs)
        add("odd-square", {i, k}, "[[y,y],z] != 2[y,[y,z]] at " + tuple_name(A, {i, k}));
    }
  }

  if (const auto& R = A.realization()) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Matrix c = linalg::commutator(F, R->mats[i], R->mats[j], Gr.sign(A.degree(i), A.degree(j)));
        if (A.to_matrix(br(i, j)) != c)
          add("realization-bracket", {i, j}, "structure constants differ from matrices at " + tuple_name(A, {i, j}));
      }
  }

  if (!A.has_pmap()) return rep;

  for (const auto& [i, val] : *A.data().pmap)
    if (A.is_odd(i)) add("pmap-odd", {i}, "p-map given on odd " + A.name(i));
  bool complete = true;
  for (int i = 0; i < n; ++i) {
    if (A.is_odd(i)) continue;
    const SparseVec* pm = A.pmap_basis(i);
    if (!pm) {
      add("pmap-missing", {i}, "no p-map value for even " + A.name(i));
      complete = false;
      continue;
    }
    int want = Gr.group().mul(p, A.degree(i));
    for (auto [k, c] : *pm)
      if (A.degree(k) != want) {
        add("pmap-degree", {i}, "p-map of " + A.name(i) + " leaves degree p*deg");
        break;
      }
    Matrix lhs = A.ad(to_dense(*pm, n));
    Matrix rhs = linalg::power(F, A.ad_basis(i), p);
    if (lhs != rhs) add("restricted", {i}, "ad(x^[p]) != (ad x)^p at " + A.name(i));
    if (const auto& R = A.realization()) {
      if (A.to_matrix(to_dense(*pm, n)) != linalg::power(F, R->mats[i], p))
        add("realization-pmap", {i}, "p-map differs from matrix p-th power at " + A.name(i));
    }
  }
  if (!complete) return rep;

  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(1, F.size() - 1);
  // Semilinearity on sampled scalars.
  for (int i = 0; i < n; ++i) {
    if (A.is_odd(i)) continue;
    for (int t = 0; t < 2; ++t) {
      Scalar r{pick(rng)};
      Vec rx = linalg::vscale(F, r, bvec(i));
      Vec lhs = linalg::vscale(F, F.pow(r, p), to_dense(*A.pmap_basis(i), n));
      if (A.ad(lhs) != linalg::power(F, A.ad(rx), p))
        add("semilinear", {i}, "(rx)^[p] != r^p x^[p] at " + A.name(i));
    }
  }
  // Jacobson additivity on pairs of same-degree even basis elements and on
  // random combinations inside each even degree.
  auto check_sum = [&](const Vec& x, std::vector<int> idx, const std::string& label) {
    Vec z = pmap_eval(A, x);
    if (A.ad(z) != linalg::power(F, A.ad(x), p)) {
      add("additivity", idx, "ad of Jacobson p-map differs from (ad x)^p at " + label);
      return;
    }
    if (A.realization()) {
      if (A.to_matrix(z) != linalg::power(F, A.to_matrix(x), p))
        add("additivity", idx, "Jacobson p-map differs from matrix p-th power at " + label);
    }
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (A.is_odd(i) || A.degree(i) != A.degree(j)) continue;
      Vec x = linalg::vadd(F, bvec(i), bvec(j));
      check_sum(x, {i, j}, A.name(i) + "+" + A.name(j));
    }
  std::vector<int> degs;
  for (int i = 0; i < n; ++i)
    if (!A.is_odd(i) && std::find(degs.begin(), degs.end(), A.degree(i)) == degs.end())
      degs.push_back(A.degree(i));
  for (int g : degs) {
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if (A.degree(i) == g) members.push_back(i);
    if (members.size() < 3) continue;
    for (int s = 0; s < samples; ++s) {
      Vec x(n);
      for (int i : members) x[i] = Scalar{static_cast<std::uint32_t>(rng() % F.size())};
      check_sum(x, members, "a random combination in degree " + std::to_string(g));
    }
  }
  return rep;
}

std::string format_report(const ColorAlgebra& A, const AlgebraReport& r) {
  std::ostringstream os;
  (void)A;
  for (const auto& v : r.violations) os << v.kind << ": " << v.message << '\n';
  return os.str();
}

}  // namespace colorlie
