#include "colorlie/envelope/envelope.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include "colorlie/core/error.hpp"

namespace colorlie {

namespace {

std::atomic<std::uint64_t> next_id{1};

int last_index(const Monomial& m) {
  for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i)
    if (m[i]) return i;
  return -1;
}

int exp_at(const Monomial& m, int i) { return static_cast<unsigned char>(m[i]); }

void set_exp(Monomial& m, int i, int e) {
  if (e > 255) throw Error(Errc::TooLarge, "PBW exponent exceeds 255");
  m[i] = static_cast<char>(static_cast<unsigned char>(e));
}

}  // namespace

Monomial make_monomial(const std::vector<int>& exps) {
  Monomial m(exps.size(), '\0');
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0) throw Error(Errc::InvalidInput, "negative PBW exponent");
    set_exp(m, static_cast<int>(i), exps[i]);
  }
  return m;
}

std::vector<int> exponents(const Monomial& m) {
  std::vector<int> e(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) e[i] = static_cast<unsigned char>(m[i]);
  return e;
}

int total_degree(const Monomial& m) {
  int t = 0;
  for (char c : m) t += static_cast<unsigned char>(c);
  return t;
}

Scalar NormalElement::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), m,
                             [](const auto& t, const Monomial& k) { return t.first < k; });
  return it != terms.end() && it->first == m ? it->second : Scalar{0};
}

void TermAccumulator::add(const Monomial& m, Scalar c) {
  if (c.v == 0) return;
  auto [it, fresh] = acc_.try_emplace(m, c);
  if (!fresh) it->second = F_.add(it->second, c);
}

void TermAccumulator::add(const NormalElement& u, Scalar c) {
  if (c.v == 0) return;
  for (const auto& [m, a] : u.terms) add(m, F_.mul(a, c));
}

NormalElement TermAccumulator::finish(std::uint64_t owner) {
  NormalElement out;
  out.owner = owner;
  out.terms.reserve(acc_.size());
  for (auto& [m, c] : acc_)
    if (c.v) out.terms.emplace_back(m, c);
  std::sort(out.terms.begin(), out.terms.end());
  acc_.clear();
  return out;
}

Envelope::Envelope(AlgebraPtr A, ReducedSpecPtr spec, bool free_J)
    : A_(std::move(A)), spec_(std::move(spec)), id_(next_id++) {
  const std::size_t n = A_->dim();
  if (spec_) {
    caps_ = spec_->caps();
    if (free_J)
      for (int j : spec_->J) caps_[j] = 0;
  } else {
    caps_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (A_->is_odd(static_cast<int>(i))) caps_[i] = 2;
  }
  memo_.resize(n);
  repl_.resize(n);
}

Envelope Envelope::universal(AlgebraPtr A) { return Envelope(std::move(A), nullptr, false); }

Envelope Envelope::reduced(ReducedSpecPtr spec) {
  AlgebraPtr A = spec->algebra;
  return Envelope(std::move(A), std::move(spec), false);
}

NormalElement Envelope::zero() const {
  NormalElement z;
  z.owner = id_;
  return z;
}

NormalElement Envelope::scalar(Scalar c) const { return term(Monomial(dim(), '\0'), c); }

NormalElement Envelope::one() const { return scalar(field().one()); }

NormalElement Envelope::term(const Monomial& m, Scalar c) const {
  NormalElement out = zero();
  if (c.v) out.terms.emplace_back(m, c);
  return out;
}

NormalElement Envelope::generator(int i) const {
  Monomial m(dim(), '\0');
  m[i] = 1;
  return term(m, field().one());
}

NormalElement Envelope::from_vec(const Vec& x) const {
  TermAccumulator acc(field());
  Monomial m(dim(), '\0');
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].v == 0) continue;
    m[i] = 1;
    acc.add(m, x[i]);
    m[i] = 0;
  }
  return acc.finish(id_);
}

NormalElement Envelope::monomial(const std::vector<int>& e) const {
  NormalElement cur = one();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (int r = 0; r < e[i]; ++r) cur = times_generator(cur, static_cast<int>(i));
  return cur;
}

NormalElement Envelope::add(const NormalElement& a, const NormalElement& b) const {
  TermAccumulator acc(field());
  acc.add(a, field().one());
  acc.add(b, field().one());
  return acc.finish(id_);
}

NormalElement Envelope::sub(const NormalElement& a, const NormalElement& b) const {
  TermAccumulator acc(field());
  acc.add(a, field().one());
  acc.add(b, field().neg(field().one()));
  return acc.finish(id_);
}

NormalElement Envelope::scale(Scalar c, const NormalElement& a) const {
  TermAccumulator acc(field());
  acc.add(a, c);
  return acc.finish(id_);
}

void Envelope::check_owner(const NormalElement& u) const {
  if (u.owner != 0 && u.owner != id_)
    throw Error(Errc::MixedSpecs, "normal element belongs to a different enveloping algebra");
}

NormalElement Envelope::times_generator(const NormalElement& u, int j) const {
  check_owner(u);
  TermAccumulator acc(field());
  for (const auto& [m, c] : u.terms) acc.add(mul_gen(m, j), c);
  return acc.finish(id_);
}

NormalElement Envelope::product(const NormalElement& u, const NormalElement& v) const {
  check_owner(u);
  check_owner(v);
  TermAccumulator acc(field());
  for (const auto& [m, c] : v.terms) {
    NormalElement cur = u;
    for (int g : word(m)) cur = times_generator(cur, g);
    acc.add(cur, c);
  }
  return acc.finish(id_);
}

NormalElement Envelope::power(const NormalElement& u, int n) const {
  NormalElement r = one();
  for (int i = 0; i < n; ++i) r = product(r, u);
  return r;
}

const NormalElement& Envelope::mul_gen(const Monomial& a, int j) const {
  auto& cache = memo_[j];
  if (auto it = cache.find(a); it != cache.end()) return it->second;
  const Field& F = field();
  const int i = last_index(a);
  NormalElement out;
  if (i < j) {
    Monomial b = a;
    b[j] = 1;
    out = term(b, F.one());
  } else if (i == j) {
    int e = exp_at(a, j) + 1;
    if (caps_[j] == 0 || e < caps_[j]) {
      Monomial b = a;
      set_exp(b, j, e);
      out = term(b, F.one());
    } else {
      Monomial rest = a;
      rest[j] = 0;
      const NormalElement& R = replacement(j);
      TermAccumulator acc(F);
      for (const auto& [m, c] : R.terms) {
        NormalElement cur = term(rest, F.one());
        for (int g : word(m)) cur = times_generator(cur, g);
        acc.add(cur, c);
      }
      out = acc.finish(id_);
    }
  } else {
    // a = a' x_i with i > j:  a' x_i x_j = eps(i,j) (a' x_j) x_i + a' [x_i, x_j].
    Monomial rest = a;
    rest[i] = static_cast<char>(exp_at(a, i) - 1);
    const ColorAlgebra& A = *A_;
    Scalar s = A.grading().sign(A.degree(i), A.degree(j));
    TermAccumulator acc(F);
    const NormalElement& left = mul_gen(rest, j);
    for (const auto& [m, c] : left.terms) acc.add(mul_gen(m, i), F.mul(s, c));
    for (auto [k, c] : A.bracket_basis(i, j)) acc.add(mul_gen(rest, k), c);
    out = acc.finish(id_);
  }
  return cache.emplace(a, std::move(out)).first->second;
}

const NormalElement& Envelope::replacement(int j) const {
  if (!repl_[j]) repl_[j] = std::make_unique<NormalElement>(build_replacement(j));
  return *repl_[j];
}

NormalElement Envelope::build_replacement(int j) const {
  const ColorAlgebra& A = *A_;
  const Field& F = field();
  const std::size_t n = dim();
  const int p = F.p();
  if (A.is_odd(j)) {
    // x^2 = 1/2 [x, x] for odd x.
    Scalar half = F.inv(F.from_int(2));
    Vec v = linalg::vscale(F, half, to_dense(A.bracket_basis(j, j), n));
    return from_vec(v);
  }
  Vec pm = to_dense(*A.pmap_basis(j), n);
  const PCharacter& chi = spec_->chi;
  auto sj = spec_->s_of.find(j);
  if (sj != spec_->s_of.end()) {
    // (xi^p - xi^[p])^s = 1: expand the left side where xi is uncapped and
    // solve for xi^{ps}.
    Envelope freeJ(A_, spec_, true);
    std::vector<int> e(n, 0);
    e[j] = p;
    NormalElement z = freeJ.sub(freeJ.term(make_monomial(e), F.one()), freeJ.from_vec(pm));
    NormalElement W = freeJ.power(z, sj->second);
    e[j] = p * sj->second;
    Monomial top = make_monomial(e);
    if (W.coeff(top) != F.one())
      throw Error(Errc::InvalidInput, "F-class relation has no monic leading term in " + A.name(j));
    TermAccumulator acc(F);
    acc.add(Monomial(n, '\0'), F.one());
    for (const auto& [m, c] : W.terms) {
      if (m == top) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (caps_[k] && exp_at(m, static_cast<int>(k)) >= caps_[k])
          throw Error(Errc::InvalidInput, "F-class relation for " + A.name(j) + " does not reduce below its cap");
      acc.add(m, F.neg(c));
    }
    return acc.finish(id_);
  }
  NormalElement R = from_vec(pm);
  if (const FClass* fc = chi.fclass_of_degree(A.degree(j))) {
    // x^p = x^[p] + c(x)^p (xi^p - xi^[p]).
    Scalar cp = F.pow(fc->c[j], p);
    if (cp.v == 0) return R;
    std::vector<int> e(n, 0);
    e[fc->xi] = p;
    Vec xpm = to_dense(*A.pmap_basis(fc->xi), n);
    NormalElement Z = sub(term(make_monomial(e), F.one()), from_vec(xpm));
    return add(R, scale(cp, Z));
  }
  return add(R, scalar(F.pow(chi.value(j), p)));
}

int Envelope::degree(const Monomial& m) const {
  const GradedGroup& G = A_->grading().group();
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) d = G.add(d, G.mul(exp_at(m, static_cast<int>(i)), A_->degree(static_cast<int>(i))));
  return d;
}

std::vector<int> Envelope::word(const Monomial& m) const {
  std::vector<int> w;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int r = 0; r < exp_at(m, static_cast<int>(i)); ++r) w.push_back(static_cast<int>(i));
  return w;
}

std::string Envelope::format(const NormalElement& u) const {
  if (u.is_zero()) return "0";
  const Field& F = field();
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : u.terms) {
    if (!first) os << " + ";
    first = false;
    os << (F.k() == 1 ? std::to_string(F.to_int(c)) : F.to_string(c));
    for (std::size_t i = 0; i < m.size(); ++i) {
      int e = exp_at(m, static_cast<int>(i));
      if (!e) continue;
      os << '*' << A_->name(static_cast<int>(i));
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

std::size_t Envelope::cache_size() const {
  std::size_t s = 0;
  for (const auto& c : memo_) s += c.size();
  return s;
}

}  // namespace colorlie
