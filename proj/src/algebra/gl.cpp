#include "colorlie/algebra/gl.hpp"

#include <algorithm>

#include "colorlie/core/error.hpp"

namespace colorlie {

namespace {

std::string unit_name(int i, int j, int m) {
  if (m < 10) return "e" + std::to_string(i + 1) + std::to_string(j + 1);
  return "e" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

}  // namespace

AlgebraPtr make_gl(GradingPtr grading, std::vector<std::pair<int, int>> dims) {
  const Grading& Gr = *grading;
  const Field& F = Gr.field();
  std::sort(dims.begin(), dims.end());
  std::vector<int> vdeg;
  for (auto [g, cnt] : dims) {
    if (g < 0 || g >= Gr.group().size()) throw Error(Errc::InvalidInput, "dimension key outside the group");
    if (cnt < 0) throw Error(Errc::InvalidInput, "negative block dimension");
    for (int t = 0; t < cnt; ++t) vdeg.push_back(g);
  }
  const int m = static_cast<int>(vdeg.size());
  if (m == 0) throw Error(Errc::EmptyAlgebra, "gl of a zero-dimensional space");

  // Basis order: negative roots by height then (i,j), Cartan, positive roots.
  std::vector<std::pair<int, int>> order;
  for (int h = 1; h < m; ++h)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (i - j == h) order.emplace_back(i, j);
  for (int i = 0; i < m; ++i) order.emplace_back(i, i);
  for (int h = 1; h < m; ++h)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (j - i == h) order.emplace_back(i, j);
  // (i,j) lexicographic within a height: the loops above visit i ascending.

  const int n = m * m;
  std::vector<int> idx(n);
  for (int b = 0; b < n; ++b) idx[order[b].first * m + order[b].second] = b;

  ColorAlgebra::Data d;
  d.grading = grading;
  d.names.resize(n);
  d.degrees.resize(n);
  Realization R;
  R.row_degrees = vdeg;
  R.mats.resize(n);
  for (int b = 0; b < n; ++b) {
    auto [i, j] = order[b];
    d.names[b] = unit_name(i, j, m);
    d.degrees[b] = Gr.add(vdeg[i], Gr.neg(vdeg[j]));
    Matrix E(m, m);
    E(i, j) = F.one();
    R.mats[b] = std::move(E);
  }
  for (int a = 0; a < n; ++a) {
    auto [i, j] = order[a];
    for (int b = 0; b < n; ++b) {
      auto [k, l] = order[b];
      Scalar s = Gr.sign(d.degrees[a], d.degrees[b]);
      SparseVec out;
      // [E_ij, E_kl] = delta_jk E_il - eps * delta_li E_kj
      Vec dense(n);
      if (j == k) dense[idx[i * m + l]] = F.add(dense[idx[i * m + l]], F.one());
      if (l == i) dense[idx[k * m + j]] = F.sub(dense[idx[k * m + j]], s);
      out = to_sparse(dense);
      if (!out.empty()) d.structure[{a, b}] = std::move(out);
    }
  }
  std::map<int, SparseVec> pm;
  for (int b = 0; b < n; ++b) {
    if (Gr.is_odd(d.degrees[b])) continue;
    auto [i, j] = order[b];
    if (i == j)
      pm[b] = {{b, F.one()}};
    else
      pm[b] = {};
  }
  d.pmap = std::move(pm);
  d.realization = std::move(R);

  TriangularData T;
  T.rank = m;
  T.eps.assign(n, std::vector<int>(m, 0));
  T.height.assign(n, 0);
  T.on_cartan.assign(n, Vec(m));
  for (int b = 0; b < n; ++b) {
    auto [i, j] = order[b];
    if (i == j) {
      T.cartan.push_back(b);
      continue;
    }
    (i > j ? T.neg : T.pos).push_back(b);
    T.eps[b][i] += 1;
    T.eps[b][j] -= 1;
    T.height[b] = j - i;
    for (int c = 0; c < m; ++c) T.on_cartan[b][c] = F.from_int(T.eps[b][c]);
  }
  for (int b : T.pos) {
    auto [i, j] = order[b];
    TriangularData::Triple t;
    t.e = b;
    t.f = idx[j * m + i];
    t.odd = Gr.is_odd(d.degrees[b]);
    t.H = Vec(n);
    t.H[idx[i * m + i]] = F.one();
    t.H[idx[j * m + j]] = t.odd ? F.one() : F.neg(F.one());
    if (j == i + 1) T.simple.push_back(static_cast<int>(T.triples.size()));
    T.triples.push_back(std::move(t));
  }
  d.triangular = std::move(T);
  return ColorAlgebra::make(std::move(d));
}

AlgebraPtr restrict_algebra(const ColorAlgebra& A, const std::vector<int>& indices) {
  const std::size_t n = A.dim();
  std::vector<int> local(n, -1);
  for (std::size_t t = 0; t < indices.size(); ++t) {
    int b = indices[t];
    if (b < 0 || static_cast<std::size_t>(b) >= n || local[b] != -1)
      throw Error(Errc::InvalidInput, "bad subalgebra index list");
    local[b] = static_cast<int>(t);
  }
  auto remap = [&](const SparseVec& s) {
    SparseVec out;
    for (auto [k, c] : s) {
      if (local[k] < 0) throw Error(Errc::InvalidInput, "span is not closed: reaches " + A.name(k));
      out.emplace_back(local[k], c);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  ColorAlgebra::Data d;
  d.grading = A.grading_ptr();
  for (int b : indices) {
    d.names.push_back(A.name(b));
    d.degrees.push_back(A.degree(b));
  }
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = 0; b < indices.size(); ++b) {
      const SparseVec& s = A.bracket_basis(indices[a], indices[b]);
      if (!s.empty()) d.structure[{static_cast<int>(a), static_cast<int>(b)}] = remap(s);
    }
  if (A.has_pmap()) {
    std::map<int, SparseVec> pm;
    for (std::size_t a = 0; a < indices.size(); ++a)
      if (const SparseVec* s = A.pmap_basis(indices[a])) pm[static_cast<int>(a)] = remap(*s);
    d.pmap = std::move(pm);
  }
  if (A.realization()) {
    Realization R;
    R.row_degrees = A.realization()->row_degrees;
    for (int b : indices) R.mats.push_back(A.realization()->mats[b]);
    d.realization = std::move(R);
  }
  return ColorAlgebra::make(std::move(d));
}

AlgebraPtr permute_algebra(const ColorAlgebra& A, const std::vector<int>& order) {
  const std::size_t n = A.dim();
  if (order.size() != n) throw Error(Errc::InvalidInput, "permutation has the wrong length");
  AlgebraPtr B = restrict_algebra(A, order);
  if (!A.triangular()) return B;
  std::vector<int> local(n);
  for (std::size_t t = 0; t < n; ++t) local[order[t]] = static_cast<int>(t);
  const TriangularData& T = *A.triangular();
  TriangularData U;
  U.rank = T.rank;
  for (int b : T.neg) U.neg.push_back(local[b]);
  for (int b : T.cartan) U.cartan.push_back(local[b]);
  for (int b : T.pos) U.pos.push_back(local[b]);
  U.eps.resize(n);
  U.height.resize(n);
  U.on_cartan.resize(n);
  for (std::size_t b = 0; b < n; ++b) {
    U.eps[local[b]] = T.eps[b];
    U.height[local[b]] = T.height[b];
    U.on_cartan[local[b]] = T.on_cartan[b];
  }
  for (const auto& t : T.triples) {
    TriangularData::Triple s;
    s.e = local[t.e];
    s.f = local[t.f];
    s.odd = t.odd;
    s.H = Vec(n);
    for (std::size_t b = 0; b < n; ++b) s.H[local[b]] = t.H[b];
    U.triples.push_back(std::move(s));
  }
  U.simple = T.simple;
  ColorAlgebra::Data d = B->data();
  d.triangular = std::move(U);
  return ColorAlgebra::make(std::move(d));
}

}  // namespace colorlie
