#include "colorlie/core/poly.hpp"

#include <numeric>

#include "colorlie/core/error.hpp"

namespace colorlie::poly {

void trim(Poly& a) {
  while (!a.empty() && a.back().v == 0) a.pop_back();
}

int degree(const Poly& a) {
  Poly b = a;
  trim(b);
  return static_cast<int>(b.size()) - 1;
}

Poly add(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    Scalar x = i < a.size() ? a[i] : Scalar{0};
    Scalar y = i < b.size() ? b[i] : Scalar{0};
    r[i] = F.add(x, y);
  }
  trim(r);
  return r;
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    Scalar x = i < a.size() ? a[i] : Scalar{0};
    Scalar y = i < b.size() ? b[i] : Scalar{0};
    r[i] = F.sub(x, y);
  }
  trim(r);
  return r;
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].v == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& a0, const Poly& b0) {
  Poly a = a0, b = b0;
  trim(a);
  trim(b);
  if (b.empty()) throw Error(Errc::InvalidInput, "polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1);
  Scalar li = F.inv(b.back());
  for (std::size_t d = a.size(); d-- >= b.size();) {
    Scalar c = F.mul(a[d], li);
    std::size_t shift = d - (b.size() - 1);
    q[shift] = c;
    if (c.v)
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    if (d == 0) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

Poly mod(const Field& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

Poly monic(const Field& F, const Poly& a0) {
  Poly a = a0;
  trim(a);
  if (a.empty()) return a;
  Scalar li = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, li);
  return a;
}

Poly gcd(const Field& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

Scalar eval(const Field& F, const Poly& a, Scalar x) {
  Scalar r{0};
  for (std::size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
  return r;
}

Poly derivative(const Field& F, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(F.from_int(static_cast<long long>(i)), a[i]);
  trim(r);
  return r;
}

Poly charpoly(const Field& F, const Matrix& A0) {
  const std::size_t n = A0.rows();
  Matrix H = A0;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t c = 0; c + 2 < n + 1 && c + 1 < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c + 1; i < n; ++i)
      if (H(i, c).v) {
        piv = i;
        break;
      }
    if (piv == n) continue;
    if (piv != c + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(H(piv, j), H(c + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(H(i, piv), H(i, c + 1));
    }
    Scalar inv = F.inv(H(c + 1, c));
    for (std::size_t i = c + 2; i < n; ++i) {
      Scalar f = F.mul(H(i, c), inv);
      if (f.v == 0) continue;
      for (std::size_t j = 0; j < n; ++j) H(i, j) = F.sub(H(i, j), F.mul(f, H(c + 1, j)));
      for (std::size_t r = 0; r < n; ++r) H(r, c + 1) = F.add(H(r, c + 1), F.mul(f, H(r, i)));
    }
  }
  std::vector<Poly> P(n + 1);
  P[0] = {Scalar{1}};
  for (std::size_t m = 1; m <= n; ++m) {
    Poly lin = {F.neg(H(m - 1, m - 1)), Scalar{1}};
    Poly cur = mul(F, lin, P[m - 1]);
    Scalar prod{1};
    for (std::size_t i = 1; i < m; ++i) {
      prod = F.mul(prod, H(m - i, m - i - 1));
      Scalar coef = F.mul(H(m - i - 1, m - 1), prod);
      if (coef.v == 0) continue;
      Poly term = P[m - i - 1];
      for (auto& t : term) t = F.mul(t, coef);
      cur = sub(F, cur, term);
    }
    P[m] = cur;
  }
  return P[n];
}

std::vector<Scalar> roots(const Field& F, const Poly& a) {
  std::vector<Scalar> out;
  for (Scalar x : F.elements())
    if (eval(F, a, x).v == 0) out.push_back(x);
  return out;
}

namespace {

Poly powmod(const Field& F, Poly base, unsigned long long e, const Poly& m) {
  Poly r = {Scalar{1}};
  base = mod(F, base, m);
  while (e > 0) {
    if (e & 1) r = mod(F, mul(F, r, base), m);
    e >>= 1;
    if (e) base = mod(F, mul(F, base, base), m);
  }
  return r;
}

}  // namespace

int splitting_degree(const Field& F, const Poly& a) {
  Poly h = monic(F, a);
  if (degree(h) <= 0) return 1;
  int result = 1;
  Poly x = {Scalar{0}, Scalar{1}};
  Poly frob = x;  // x^(q^i) mod h, recomputed when h shrinks
  for (int i = 1; degree(h) > 0; ++i) {
    frob = powmod(F, mod(F, frob, h), F.size(), h);
    Poly g = gcd(F, h, sub(F, frob, x));
    if (degree(g) > 0) {
      result = std::lcm(result, i);
      Poly c = g;
      while (degree(c) > 0) {
        h = divmod(F, h, c).first;
        c = gcd(F, h, c);
      }
    }
  }
  return result;
}

Poly interpolate(const Field& F, const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
  Poly result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly basis = {Scalar{1}};
    Scalar denom{1};
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = mul(F, basis, Poly{F.neg(xs[j]), Scalar{1}});
      denom = F.mul(denom, F.sub(xs[i], xs[j]));
    }
    Scalar c = F.div(ys[i], denom);
    for (auto& t : basis) t = F.mul(t, c);
    result = add(F, result, basis);
  }
  result.resize(xs.size());
  return result;
}

}  // namespace colorlie::poly
