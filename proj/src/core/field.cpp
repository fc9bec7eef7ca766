#include "colorlie/core/field.hpp"

#include <numeric>
#include <sstream>

#include "colorlie/core/error.hpp"

namespace colorlie {

namespace {

using IPoly = std::vector<long long>;

void trim(IPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long long inv_mod(long long a, long long p) {
  long long r = 1, e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

IPoly pmod(IPoly a, const IPoly& m, long long p) {
  trim(a);
  long long lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    long long c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

IPoly pmul(const IPoly& a, const IPoly& b, long long p) {
  if (a.empty() || b.empty()) return {};
  IPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

IPoly pgcd(IPoly a, IPoly b, long long p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    IPoly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^e) mod m by repeated p-th powering.
IPoly frob_power(const IPoly& m, long long p, int e) {
  IPoly x = pmod({0, 1}, m, p);
  for (int t = 0; t < e; ++t) {
    IPoly base = x, r = {1};
    long long n = p;
    while (n > 0) {
      if (n & 1) r = pmod(pmul(r, base, p), m, p);
      base = pmod(pmul(base, base, p), m, p);
      n >>= 1;
    }
    x = r;
  }
  return x;
}

std::vector<int> prime_factors(long long n) {
  std::vector<int> f;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      f.push_back(static_cast<int>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) f.push_back(static_cast<int>(n));
  return f;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible_mod_p(const std::vector<int>& poly, int p) {
  IPoly f(poly.begin(), poly.end());
  for (auto& c : f) c = ((c % p) + p) % p;
  trim(f);
  int n = static_cast<int>(f.size()) - 1;
  if (n < 1) return false;
  if (n == 1) return true;
  // Rabin: x^(p^n) = x mod f and gcd(x^(p^(n/r)) - x, f) = 1 for primes r | n.
  IPoly xn = frob_power(f, p, n);
  IPoly xx = pmod({0, 1}, f, p);
  if (xn != xx) return false;
  for (int r : prime_factors(n)) {
    IPoly h = frob_power(f, p, n / r);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = ((h[1] - 1) % p + p) % p;
    trim(h);
    IPoly g = pgcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

FieldPtr Field::make(int p, int k, std::optional<std::vector<int>> modulus) {
  if (!is_prime(p)) throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
  if (p <= 3)
    throw Error(Errc::BadCharacteristic, "characteristic must exceed 3, got " + std::to_string(p));
  if (k < 1) throw Error(Errc::InvalidInput, "extension degree must be at least 1");
  long double qd = 1;
  for (int i = 0; i < k; ++i) qd *= p;
  if (qd > kMaxSize)
    throw Error(Errc::FieldTooLarge, "field of order " + std::to_string(p) + "^" +
                                         std::to_string(k) + " exceeds the table limit");

  std::shared_ptr<Field> F(new Field());
  F->p_ = p;
  F->k_ = k;
  F->q_ = 1;
  for (int i = 0; i < k; ++i) F->q_ *= static_cast<std::uint32_t>(p);

  if (modulus) {
    std::vector<int> m = *modulus;
    for (auto& c : m) c = ((c % p) + p) % p;
    while (!m.empty() && m.back() == 0) m.pop_back();
    if (static_cast<int>(m.size()) != k + 1)
      throw Error(Errc::ReducibleModulus, "modulus must have degree exactly " + std::to_string(k));
    if (!is_irreducible_mod_p(m, p))
      throw Error(Errc::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
    long long li = inv_mod(m.back(), p);
    for (auto& c : m) c = static_cast<int>(c * li % p);
    F->modulus_ = m;
  } else {
    for (std::uint32_t n = 0; n < F->q_; ++n) {
      std::vector<int> m(k + 1, 0);
      std::uint32_t t = n;
      for (int i = 0; i < k; ++i) {
        m[i] = static_cast<int>(t % p);
        t /= p;
      }
      m[k] = 1;
      if (is_irreducible_mod_p(m, p)) {
        F->modulus_ = m;
        break;
      }
    }
  }

  const std::uint32_t q = F->q_;
  F->neg_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    std::uint32_t r = 0, mult = 1, t = a;
    for (int i = 0; i < k; ++i) {
      std::uint32_t d = t % p;
      t /= p;
      r += ((p - d) % p) * mult;
      mult *= p;
    }
    F->neg_[a] = r;
  }
  if (k > 1 && q <= 1024) {
    F->add_.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) F->add_[a * q + b] = F->add_slow({a}, {b}).v;
  }

  // Primitive element: order exactly q-1.
  auto qf = prime_factors(q - 1);
  auto slow_pow = [&](Scalar a, std::uint64_t e) {
    Scalar r{1};
    while (e > 0) {
      if (e & 1) r = F->mul_poly(r, a);
      a = F->mul_poly(a, a);
      e >>= 1;
    }
    return r;
  };
  Scalar g{0};
  for (std::uint32_t c = 1; c < q; ++c) {
    if (q == 2) {
      g = {1};
      break;
    }
    bool ok = true;
    for (int r : qf) {
      if (slow_pow({c}, (q - 1) / r) == Scalar{1}) {
        ok = false;
        break;
      }
    }
    if (ok) {
      g = {c};
      break;
    }
  }
  F->exp_.resize(q - 1);
  F->log_.assign(q, 0);
  Scalar cur{1};
  for (std::uint32_t i = 0; i + 1 < q; ++i) {
    F->exp_[i] = cur.v;
    F->log_[cur.v] = i;
    cur = F->mul_poly(cur, g);
  }
  return F;
}

Scalar Field::add_slow(Scalar a, Scalar b) const {
  std::uint32_t r = 0, mult = 1, x = a.v, y = b.v;
  for (int i = 0; i < k_; ++i) {
    r += ((x % p_ + y % p_) % p_) * mult;
    x /= p_;
    y /= p_;
    mult *= p_;
  }
  return {r};
}

Scalar Field::mul_poly(Scalar a, Scalar b) const {
  std::vector<long long> x(k_), y(k_);
  std::uint32_t s = a.v, t = b.v;
  for (int i = 0; i < k_; ++i) {
    x[i] = s % p_;
    y[i] = t % p_;
    s /= p_;
    t /= p_;
  }
  std::vector<long long> r(2 * k_, 0);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p_;
  for (int d = 2 * k_ - 1; d >= k_; --d) {
    long long c = r[d];
    if (c == 0) continue;
    for (int i = 0; i <= k_; ++i) r[d - k_ + i] = ((r[d - k_ + i] - c * modulus_[i]) % p_ + p_) % p_;
  }
  std::uint32_t v = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    v += static_cast<std::uint32_t>(r[i]) * mult;
    mult *= p_;
  }
  return {v};
}

Scalar Field::from_int(long long n) const {
  long long r = n % p_;
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

Scalar Field::from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) != k_)
    throw Error(Errc::InvalidInput, "scalar must have " + std::to_string(k_) + " coefficients");
  std::uint32_t v = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    int d = ((c[i] % p_) + p_) % p_;
    v += static_cast<std::uint32_t>(d) * mult;
    mult *= p_;
  }
  return {v};
}

std::vector<int> Field::coeffs(Scalar a) const {
  std::vector<int> c(k_);
  std::uint32_t t = a.v;
  for (int i = 0; i < k_; ++i) {
    c[i] = static_cast<int>(t % p_);
    t /= p_;
  }
  return c;
}

Scalar Field::inv(Scalar a) const {
  if (a.v == 0) throw Error(Errc::InvalidInput, "division by zero in F_q");
  std::uint32_t l = log_[a.v];
  return {exp_[l == 0 ? 0 : q_ - 1 - l]};
}

Scalar Field::pow(Scalar a, long long e) const {
  if (e == 0) return one();
  if (a.v == 0) return zero();
  long long m = static_cast<long long>(q_) - 1;
  long long r = (static_cast<long long>(log_[a.v]) * (((e % m) + m) % m)) % m;
  return {exp_[r]};
}

std::uint64_t Field::order(Scalar a) const {
  if (a.v == 0) throw Error(Errc::InvalidInput, "zero has no multiplicative order");
  std::uint64_t m = q_ - 1;
  return m / std::gcd<std::uint64_t>(m, log_[a.v]);
}

Scalar Field::pth_root(Scalar a) const {
  // a^(q/p) since x -> x^p has inverse x -> x^(p^(k-1)).
  long long e = q_ / p_;
  return pow(a, e);
}

std::vector<Scalar> Field::elements() const {
  std::vector<Scalar> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = {i};
  return out;
}

std::string Field::to_string(Scalar a) const {
  std::ostringstream os;
  auto c = coeffs(a);
  os << '[';
  for (int i = 0; i < k_; ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

}  // namespace colorlie
