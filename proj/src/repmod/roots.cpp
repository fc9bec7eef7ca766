#include "colorlie/repmod/roots.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "colorlie/core/error.hpp"

namespace colorlie {

namespace {

using Root = std::vector<int>;

Root neg(Root r) {
  for (int& x : r) x = -x;
  return r;
}

Root sum(const Root& a, const Root& b) {
  Root r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

struct RootSet {
  std::set<Root> all;  // Phi
  bool is_root(const Root& r) const { return all.count(r) > 0; }
};

RootSet roots_of(const TriangularData& T) {
  RootSet s;
  for (int b : T.pos) s.all.insert(T.eps[b]);
  for (int b : T.neg) s.all.insert(T.eps[b]);
  return s;
}

Root pos_root(const TriangularData& T, int slot) { return T.eps[T.pos[slot]]; }

}  // namespace

const TriangularData& root_datum(const ColorAlgebra& A) {
  if (!A.triangular()) throw Error(Errc::NoMatrixRealization, "algebra has no root data");
  return *A.triangular();
}

std::string root_name(const TriangularData& T, int slot) {
  Root r = pos_root(T, slot);
  std::string s;
  for (int k = 0; k < T.rank; ++k)
    if (r[k] == 1) s = "e" + std::to_string(k + 1) + s;
  for (int k = 0; k < T.rank; ++k)
    if (r[k] == -1) s += "-e" + std::to_string(k + 1);
  return s;
}

bool is_subsystem(const TriangularData& T, const std::vector<int>& levi) {
  RootSet R = roots_of(T);
  std::set<Root> sub;
  for (int s : levi) {
    sub.insert(pos_root(T, s));
    sub.insert(neg(pos_root(T, s)));
  }
  for (const Root& a : sub)
    for (const Root& b : sub)
      for (int l1 = -3; l1 <= 3; ++l1)
        for (int l2 = -3; l2 <= 3; ++l2) {
          Root c(a.size());
          for (std::size_t i = 0; i < a.size(); ++i) c[i] = l1 * a[i] + l2 * b[i];
          if (R.is_root(c) && !sub.count(c)) return false;
        }
  return true;
}

std::vector<FPCertificate> fp_certificates(const TriangularData& T, const std::vector<int>& levi,
                                           const std::vector<int>& deltas) {
  RootSet R = roots_of(T);
  std::vector<Root> levi_pos;
  for (int s : levi) levi_pos.push_back(pos_root(T, s));
  std::vector<FPCertificate> out;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    FPCertificate c;
    c.delta = deltas[i];
    std::set<Root> P(levi_pos.begin(), levi_pos.end());
    for (std::size_t j = 0; j < i; ++j) P.insert(neg(pos_root(T, deltas[j])));
    for (std::size_t j = i; j < deltas.size(); ++j) P.insert(pos_root(T, deltas[j]));

    bool partition = P.size() * 2 == R.all.size();
    for (const Root& r : P) partition = partition && R.is_root(r) && !P.count(neg(r));
    bool closed = true;
    for (const Root& a : P)
      for (const Root& b : P) {
        Root s = sum(a, b);
        if (R.is_root(s) && !P.count(s)) closed = false;
      }
    c.positive_system = partition && closed;

    Root d = pos_root(T, deltas[i]);
    c.simple = true;
    for (const Root& a : P)
      for (const Root& b : P)
        if (sum(a, b) == d) c.simple = false;

    std::set<Root> S;
    for (std::size_t j = 0; j <= i; ++j) S.insert(neg(pos_root(T, deltas[j])));
    c.additive = true;
    for (const Root& a : S)
      for (const Root& b : S) {
        Root s = sum(a, b);
        if (R.is_root(s) && !S.count(s)) c.additive = false;
      }
    c.normalized = true;
    for (const Root& l : levi_pos)
      for (const Root& a : S) {
        Root s = sum(l, a);
        if (R.is_root(s) && !S.count(s)) c.normalized = false;
      }
    out.push_back(c);
  }
  return out;
}

FPTriple fp_order(const ColorAlgebra& A, const std::vector<int>& levi) {
  const TriangularData& T = root_datum(A);
  const int npos = static_cast<int>(T.pos.size());
  for (int s : levi)
    if (s < 0 || s >= npos) throw Error(Errc::InvalidInput, "Levi root slot out of range");
  if (!is_subsystem(T, levi)) throw Error(Errc::InvalidInput, "Levi roots do not form a subsystem");
  std::vector<int> rest;
  for (int s = 0; s < npos; ++s)
    if (std::find(levi.begin(), levi.end(), s) == levi.end()) rest.push_back(s);

  FPTriple out;
  out.levi = levi;
  std::sort(out.levi.begin(), out.levi.end());
  std::vector<int> chosen;
  std::vector<bool> used(npos, false);
  // Step i only depends on the chosen prefix and the remaining set, so each
  // candidate is certified against "prefix + candidate + rest in any order".
  std::function<bool()> dfs = [&]() {
    if (chosen.size() == rest.size()) return true;
    for (int s : rest) {
      if (used[s]) continue;
      std::vector<int> trial = chosen;
      trial.push_back(s);
      for (int r : rest)
        if (!used[r] && r != s) trial.push_back(r);
      auto certs = fp_certificates(T, out.levi, trial);
      if (!certs[chosen.size()].ok()) continue;
      chosen.push_back(s);
      used[s] = true;
      if (dfs()) return true;
      chosen.pop_back();
      used[s] = false;
    }
    return false;
  };
  if (!dfs()) throw Error(Errc::NoOrderingFound, "no Friedlander-Parshall ordering of the remaining roots");
  out.deltas = chosen;
  out.certificates = fp_certificates(T, out.levi, out.deltas);
  return out;
}

}  // namespace colorlie
