#include "colorlie/repmod/module.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "colorlie/core/error.hpp"

namespace colorlie {

namespace {

/// Column-sparse copy of a square matrix.
struct SparseCols {
  std::vector<std::vector<std::pair<std::uint32_t, Scalar>>> cols;

  explicit SparseCols(const Matrix& M) : cols(M.cols()) {
    for (std::size_t j = 0; j < M.cols(); ++j)
      for (std::size_t i = 0; i < M.rows(); ++i)
        if (M(i, j).v) cols[j].emplace_back(static_cast<std::uint32_t>(i), M(i, j));
  }

  Vec apply(const Field& F, const Vec& v) const {
    Vec out(v.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (v[j].v == 0) continue;
      for (auto [i, c] : cols[j]) out[i] = F.add(out[i], F.mul(c, v[j]));
    }
    return out;
  }
};

/// A * B skipping zero entries of B and using sparse columns of A.
Matrix sparse_product(const Field& F, const SparseCols& A, const Matrix& B) {
  Matrix out(B.rows(), B.cols());
  for (std::size_t j = 0; j < B.cols(); ++j)
    for (std::size_t k = 0; k < B.rows(); ++k) {
      Scalar b = B(k, j);
      if (b.v == 0) continue;
      for (auto [i, a] : A.cols[k]) out(i, j) = F.add(out(i, j), F.mul(a, b));
    }
  return out;
}

bool is_nilpotent(const Field& F, const Matrix& M) {
  Matrix P = M;
  for (std::size_t k = 1; k < M.rows(); k *= 2) {
    if (P.is_zero()) return true;
    P = sparse_product(F, SparseCols(P), P);
  }
  return P.is_zero();
}

std::vector<std::uint32_t> weight_key(const Vec& w) {
  std::vector<std::uint32_t> k;
  for (Scalar s : w) k.push_back(s.v);
  return k;
}

/// Closure of a span under the given operators.
std::size_t close_span(const Field& F, const std::vector<SparseCols>& ops, SpanBuilder& span,
                       std::vector<Vec> frontier, std::size_t stop_at) {
  while (!frontier.empty() && span.dim() < stop_at) {
    std::vector<Vec> next;
    for (const Vec& v : frontier)
      for (const auto& op : ops) {
        Vec w = op.apply(F, v);
        if (span.add(w)) next.push_back(std::move(w));
        if (span.dim() == stop_at) return span.dim();
      }
    frontier = std::move(next);
  }
  return span.dim();
}

}  // namespace

void fill_weights(const ColorAlgebra& A, GradedModule& M) {
  M.weights.assign(M.dim, Vec());
  if (!A.triangular()) return;
  const auto& cartan = A.triangular()->cartan;
  for (std::size_t v = 0; v < M.dim; ++v)
    for (int h : cartan) M.weights[v].push_back(M.action[h](v, v));
}

std::vector<std::string> module_violations(const ColorAlgebra& A, const GradedModule& M,
                                           const ModuleCheckOptions& opt) {
  std::vector<std::string> bad;
  const Field& F = A.field();
  const Grading& Gr = A.grading();
  const int n = static_cast<int>(A.dim());
  if (static_cast<int>(M.action.size()) != n) {
    bad.push_back("action has the wrong number of matrices");
    return bad;
  }
  std::vector<SparseCols> sp;
  for (const Matrix& m : M.action) sp.emplace_back(m);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Matrix lhs(M.dim, M.dim);
      for (auto [k, c] : A.bracket_basis(x, y)) lhs = linalg::add(F, lhs, linalg::scale(F, c, M.action[k]));
      Matrix xy = sparse_product(F, sp[x], M.action[y]);
      Matrix yx = sparse_product(F, sp[y], M.action[x]);
      Matrix rhs = linalg::sub(F, xy, linalg::scale(F, Gr.sign(A.degree(x), A.degree(y)), yx));
      if (lhs != rhs) bad.push_back("bracket relation fails for (" + A.name(x) + "," + A.name(y) + ")");
    }
  const TriangularData* T = A.triangular() ? &*A.triangular() : nullptr;
  if (T)
    for (int h : T->cartan)
      for (std::size_t i = 0; i < M.dim; ++i)
        for (std::size_t j = 0; j < M.dim; ++j)
          if (i != j && M.action[h](i, j).v) {
            bad.push_back("Cartan element " + A.name(h) + " is not diagonal");
            i = M.dim;
            break;
          }
  if (M.degrees.size() == M.dim)
    for (int x = 0; x < n; ++x) {
      bool ok = true;
      for (std::size_t i = 0; i < M.dim && ok; ++i)
        for (std::size_t j = 0; j < M.dim; ++j)
          if (M.action[x](i, j).v && M.degrees[i] != Gr.add(A.degree(x), M.degrees[j])) {
            ok = false;
            break;
          }
      if (!ok) bad.push_back(A.name(x) + " does not act homogeneously");
    }
  if (T && opt.heights && M.heights.size() == M.dim)
    for (int x = 0; x < n; ++x) {
      bool ok = true;
      for (std::size_t i = 0; i < M.dim && ok; ++i)
        for (std::size_t j = 0; j < M.dim; ++j)
          if (M.action[x](i, j).v && M.heights[i] != M.heights[j] - T->height[x]) {
            ok = false;
            break;
          }
      if (!ok) bad.push_back(A.name(x) + " does not shift height by its root height");
    }
  if (opt.chi && A.has_pmap()) {
    const int p = F.p();
    for (int x = 0; x < n; ++x) {
      if (A.is_odd(x)) continue;
      const SparseVec* pm = A.pmap_basis(x);
      if (!pm) continue;
      if (opt.chi->fclass_of_degree(A.degree(x))) continue;
      Matrix lhs = linalg::power(F, M.action[x], p);
      for (auto [k, c] : *pm) lhs = linalg::sub(F, lhs, linalg::scale(F, c, M.action[k]));
      Scalar want = F.pow(opt.chi->value(x), p);
      Matrix rhs = linalg::scale(F, want, Matrix::identity(M.dim));
      if (lhs != rhs) bad.push_back("u_chi relation fails for " + A.name(x));
    }
  }
  return bad;
}

std::vector<SingularBucket> singular_vectors(const ColorAlgebra& A, const GradedModule& M) {
  const Field& F = A.field();
  const TriangularData& T = *A.triangular();
  std::vector<int> raising;
  for (int s : T.simple) raising.push_back(T.triples[s].e);
  auto kernel_on = [&](const std::vector<std::size_t>& cols) {
    Matrix S(raising.size() * M.dim, cols.size());
    for (std::size_t r = 0; r < raising.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t i = 0; i < M.dim; ++i) S(r * M.dim + i, c) = M.action[raising[r]](i, cols[c]);
    std::vector<Vec> out;
    for (const Vec& k : linalg::kernel(F, S)) {
      Vec full(M.dim);
      for (std::size_t c = 0; c < cols.size(); ++c) full[cols[c]] = k[c];
      out.push_back(std::move(full));
    }
    return out;
  };
  std::map<std::pair<std::vector<std::uint32_t>, int>, std::vector<std::size_t>> buckets;
  for (std::size_t v = 0; v < M.dim; ++v) buckets[{weight_key(M.weights[v]), M.degrees[v]}].push_back(v);
  std::vector<SingularBucket> out;
  for (const auto& [key, cols] : buckets) {
    auto K = kernel_on(cols);
    if (K.empty()) continue;
    // Split by height only when the recorded heights grade this kernel; with
    // a base module of dimension > 1 they need not.
    std::map<int, std::vector<std::size_t>> by_height;
    for (std::size_t c : cols) by_height[M.heights.empty() ? 0 : M.heights[c]].push_back(c);
    std::vector<std::pair<int, std::vector<Vec>>> parts;
    std::size_t total = 0;
    for (const auto& [h, hc] : by_height) {
      auto Kh = kernel_on(hc);
      total += Kh.size();
      if (!Kh.empty()) parts.emplace_back(h, std::move(Kh));
    }
    if (total != K.size()) {
      int h = M.heights.empty() ? 0 : M.heights[cols.front()];
      for (std::size_t c : cols)
        if (!M.heights.empty()) h = std::min(h, M.heights[c]);
      parts.assign(1, {h, std::move(K)});
    }
    for (auto& [h, basis] : parts) {
      SingularBucket b;
      b.weight = M.weights[cols.front()];
      b.degree = key.second;
      b.height = h;
      b.basis = std::move(basis);
      out.push_back(std::move(b));
    }
  }
  return out;
}

std::size_t spin_dimension(const Field& F, const std::vector<Matrix>& action, const Vec& v) {
  std::vector<SparseCols> ops;
  for (const Matrix& m : action) ops.emplace_back(m);
  SpanBuilder span(F, v.size());
  if (!span.add(v)) return 0;
  return close_span(F, ops, span, {v}, v.size());
}

SimplicityVerdict is_simple(const ColorAlgebra& A, const GradedModule& M, const SimplicityOptions& opt) {
  const Field& F = A.field();
  const TriangularData& T = *A.triangular();
  for (int b : T.pos)
    if (!is_nilpotent(F, M.action[b]))
      throw Error(Errc::ChiOnNplus, A.name(b) + " does not act nilpotently");
  SimplicityVerdict out;
  if (M.dim == 0) {
    out.simple = false;
    return out;
  }
  std::vector<SparseCols> lowering, all;
  for (int s : T.simple) lowering.emplace_back(M.action[T.triples[s].f]);
  for (const Matrix& m : M.action) all.emplace_back(m);

  // Merge height buckets: a submodule is graded by weight and degree but
  // need not be by height.
  std::map<std::pair<std::vector<std::uint32_t>, int>, std::vector<Vec>> merged;
  for (auto& b : singular_vectors(A, M)) {
    auto& dst = merged[{weight_key(b.weight), b.degree}];
    for (auto& v : b.basis) dst.push_back(std::move(v));
  }

  // A singular weight vector generates U(N^-) v, spanned by words in the
  // simple lowering operators; a proper result is re-closed under every
  // operator before it counts as a witness.
  auto generates_all = [&](const Vec& v) {
    SpanBuilder span(F, M.dim);
    span.add(v);
    std::size_t d = close_span(F, lowering, span, {v}, M.dim);
    if (d == M.dim) return true;
    std::vector<Vec> frontier = span.basis();
    d = close_span(F, all, span, frontier, M.dim);
    if (d == M.dim) return true;
    out.witness = v;
    out.witness_span = d;
    return false;
  };

  std::mt19937 rng(opt.seed);
  const std::uint32_t q = F.size();
  for (const auto& [key, basis] : merged) {
    const std::size_t d = basis.size();
    if (d <= opt.max_enumerated) {
      std::vector<std::uint32_t> c(d, 0);
      while (true) {
        std::size_t i = 0;
        while (i < d && ++c[i] == q) c[i++] = 0;
        if (i == d) break;
        std::size_t lead = d;
        for (std::size_t k = d; k-- > 0;)
          if (c[k]) {
            lead = k;
            break;
          }
        if (c[lead] != 1) continue;  // one representative per line
        Vec v(M.dim);
        for (std::size_t k = 0; k < d; ++k) v = linalg::vadd(F, v, linalg::vscale(F, Scalar{c[k]}, basis[k]));
        ++out.lines_checked;
        if (!generates_all(v)) {
          out.simple = false;
          return out;
        }
      }
    } else {
      out.randomized = true;
      std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
      for (int t = 0; t < opt.samples; ++t) {
        Vec v(M.dim);
        for (std::size_t k = 0; k < d; ++k) v = linalg::vadd(F, v, linalg::vscale(F, Scalar{pick(rng)}, basis[k]));
        if (linalg::is_zero(v)) continue;
        ++out.samples;
        if (!generates_all(v)) {
          out.simple = false;
          return out;
        }
      }
    }
  }
  return out;
}

std::optional<Scalar> extract_kappa(const ColorAlgebra& A, const GradedModule& M, int x) {
  const Field& F = A.field();
  if (A.is_odd(x)) throw Error(Errc::OddElement, A.name(x) + " is odd");
  const SparseVec* pm = A.pmap_basis(x);
  if (!pm) throw Error(Errc::NotRestricted, "no p-map value for " + A.name(x));
  const int p = F.p();
  const GradedGroup& G = A.grading().group();
  const int s = G.order(G.mul(p, A.degree(x)));
  Matrix Z = linalg::power(F, M.action[x], p);
  for (auto [k, c] : *pm) Z = linalg::sub(F, Z, linalg::scale(F, c, M.action[k]));
  Z = linalg::power(F, Z, s);
  Scalar c = M.dim ? Z(0, 0) : Scalar{0};
  if (Z != linalg::scale(F, c, Matrix::identity(M.dim))) return std::nullopt;
  return c;
}

GradedModule direct_sum(const GradedModule& a, const GradedModule& b) {
  GradedModule out;
  out.dim = a.dim + b.dim;
  for (std::size_t x = 0; x < a.action.size(); ++x) {
    Matrix m(out.dim, out.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j) m(i, j) = a.action[x](i, j);
    for (std::size_t i = 0; i < b.dim; ++i)
      for (std::size_t j = 0; j < b.dim; ++j) m(a.dim + i, a.dim + j) = b.action[x](i, j);
    out.action.push_back(std::move(m));
  }
  auto cat = [](auto u, const auto& v) {
    u.insert(u.end(), v.begin(), v.end());
    return u;
  };
  out.labels = cat(a.labels, b.labels);
  out.degrees = cat(a.degrees, b.degrees);
  out.weights = cat(a.weights, b.weights);
  out.heights = cat(a.heights, b.heights);
  out.exps = cat(a.exps, b.exps);
  out.factor = cat(a.factor, b.factor);
  return out;
}

GradedModule adjoint_module(const ColorAlgebra& A) {
  GradedModule M;
  M.dim = A.dim();
  M.labels = A.names();
  M.degrees = A.degrees();
  for (std::size_t x = 0; x < A.dim(); ++x) M.action.push_back(A.ad_basis(static_cast<int>(x)));
  M.heights.assign(M.dim, 0);
  if (A.triangular()) M.heights = A.triangular()->height;
  fill_weights(A, M);
  return M;
}

}  // namespace colorlie
