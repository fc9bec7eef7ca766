#include "colorlie/core/grading.hpp"

#include <sstream>

#include "colorlie/core/error.hpp"

namespace colorlie {

GradedGroup::GradedGroup(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders)) {
  size_ = 1;
  for (int n : orders_) {
    if (n < 1) throw Error(Errc::InvalidInput, "cyclic orders must be positive");
    size_ *= n;
    if (size_ > (1 << 16)) throw Error(Errc::InvalidInput, "grading group too large");
  }
}

int GradedGroup::index(const std::vector<int>& e) const {
  if (e.size() != orders_.size())
    throw Error(Errc::InvalidInput, "group element has wrong number of coordinates");
  int idx = 0, mult = 1;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    int c = ((e[i] % orders_[i]) + orders_[i]) % orders_[i];
    idx += c * mult;
    mult *= orders_[i];
  }
  return idx;
}

std::vector<int> GradedGroup::element(int index) const {
  std::vector<int> e(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    e[i] = index % orders_[i];
    index /= orders_[i];
  }
  return e;
}

int GradedGroup::add(int a, int b) const {
  int idx = 0, mult = 1;
  for (int n : orders_) {
    idx += ((a % n + b % n) % n) * mult;
    a /= n;
    b /= n;
    mult *= n;
  }
  return idx;
}

int GradedGroup::neg(int a) const {
  int idx = 0, mult = 1;
  for (int n : orders_) {
    idx += ((n - a % n) % n) * mult;
    a /= n;
    mult *= n;
  }
  return idx;
}

int GradedGroup::mul(long long k, int a) const {
  int idx = 0, mult = 1;
  for (int n : orders_) {
    long long c = (k % n) * (a % n) % n;
    if (c < 0) c += n;
    idx += static_cast<int>(c) * mult;
    a /= n;
    mult *= n;
  }
  return idx;
}

int GradedGroup::order(int a) const {
  int k = 1;
  while (mul(k, a) != 0) ++k;
  return k;
}

Scalar color_sign(const Field& F, const GradedGroup& G, const BicharTable& table,
                  const std::vector<int>& a, const std::vector<int>& b) {
  Scalar r = F.one();
  for (int i = 0; i < G.rank(); ++i) {
    int ai = ((a[i] % G.orders()[i]) + G.orders()[i]) % G.orders()[i];
    if (ai == 0) continue;
    for (int j = 0; j < G.rank(); ++j) {
      int bj = ((b[j] % G.orders()[j]) + G.orders()[j]) % G.orders()[j];
      if (bj == 0) continue;
      r = F.mul(r, F.pow(table[i][j], static_cast<long long>(ai) * bj));
    }
  }
  return r;
}

BicharReport bichar_validate(const Field& F, const GradedGroup& G, const BicharTable& table) {
  const int r = G.rank();
  if (static_cast<int>(table.size()) != r)
    throw Error(Errc::InvalidInput, "bicharacter table must be square of size equal to the group rank");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != r)
      throw Error(Errc::InvalidInput, "bicharacter table must be square of size equal to the group rank");
    for (Scalar s : row)
      if (s.v == 0) throw Error(Errc::ZeroEntry, "bicharacter table contains 0");
  }
  BicharReport rep;
  auto name = [](int i) { return "g" + std::to_string(i + 1); };
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      Scalar s = F.mul(table[i][j], table[j][i]);
      if (j >= i && s != F.one()) {
        rep.violations.push_back("skew-symmetry fails at (" + name(i) + "," + name(j) +
                                 "): product is " + F.to_string(s));
      }
      // n_j g_j = 0 forces eps(g_i, g_j)^{n_j} = 1, likewise for n_i.
      if (F.pow(table[i][j], G.orders()[j]) != F.one())
        rep.violations.push_back("additivity fails at (" + name(i) + "," + name(j) + "): eps^" +
                                 std::to_string(G.orders()[j]) + " != 1 in the second slot");
      if (F.pow(table[i][j], G.orders()[i]) != F.one())
        rep.violations.push_back("additivity fails at (" + name(i) + "," + name(j) + "): eps^" +
                                 std::to_string(G.orders()[i]) + " != 1 in the first slot");
    }
  }
  Scalar minus_one = F.neg(F.one());
  for (int a = 0; a < G.size(); ++a) {
    auto e = G.element(a);
    Scalar s = color_sign(F, G, table, e, e);
    if (s == F.one()) {
      rep.even.push_back(a);
    } else if (s == minus_one) {
      rep.odd.push_back(a);
    } else if (rep.violations.empty()) {
      rep.violations.push_back("eps(a,a) is not +-1 at element index " + std::to_string(a));
    }
  }
  return rep;
}

GradingPtr Grading::make(FieldPtr F, GradedGroup G, BicharTable table) {
  BicharReport rep = bichar_validate(*F, G, table);
  if (!rep.ok()) {
    std::ostringstream os;
    os << "invalid bicharacter:";
    for (const auto& v : rep.violations) os << ' ' << v << ';';
    throw Error(Errc::InvalidInput, os.str());
  }
  auto g = std::shared_ptr<Grading>(new Grading());
  g->F_ = std::move(F);
  g->G_ = std::move(G);
  g->table_ = std::move(table);
  const int n = g->G_.size();
  g->sign_.resize(static_cast<std::size_t>(n) * n);
  std::vector<std::vector<int>> elems(n);
  for (int a = 0; a < n; ++a) elems[a] = g->G_.element(a);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g->sign_[static_cast<std::size_t>(a) * n + b] =
          color_sign(*g->F_, g->G_, g->table_, elems[a], elems[b]);
  g->odd_.assign(n, false);
  for (int a : rep.odd) g->odd_[a] = true;
  return g;
}

GradingPtr Grading::trivial(FieldPtr F) { return make(std::move(F), GradedGroup(std::vector<int>{}), {}); }

GradingPtr Grading::super(FieldPtr F) {
  Scalar m1 = F->neg(F->one());
  return make(F, GradedGroup({2}), {{m1}});
}

}  // namespace colorlie
