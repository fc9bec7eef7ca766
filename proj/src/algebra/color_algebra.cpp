#include "colorlie/algebra/color_algebra.hpp"

#include <sstream>

#include "colorlie/core/error.hpp"

namespace colorlie {

Vec to_dense(const SparseVec& s, std::size_t n) {
  Vec v(n);
  for (auto [i, c] : s) v[i] = c;
  return v;
}

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].v) s.emplace_back(static_cast<int>(i), v[i]);
  return s;
}

int TriangularData::pos_slot(int b) const {
  for (std::size_t k = 0; k < pos.size(); ++k)
    if (pos[k] == b) return static_cast<int>(k);
  return -1;
}

int TriangularData::find_root(const std::vector<int>& coords) const {
  for (int b : neg)
    if (eps[b] == coords) return b;
  for (int b : pos)
    if (eps[b] == coords) return b;
  return -1;
}

AlgebraPtr ColorAlgebra::make(Data d) {
  return AlgebraPtr(new ColorAlgebra(std::move(d)));
}

ColorAlgebra::ColorAlgebra(Data d) : d_(std::move(d)) {
  const std::size_t n = d_.names.size();
  if (n == 0) throw Error(Errc::EmptyAlgebra, "algebra has no basis elements");
  if (d_.degrees.size() != n)
    throw Error(Errc::InvalidInput, "degree list length differs from basis length");
  for (int g : d_.degrees)
    if (g < 0 || g >= d_.grading->group().size())
      throw Error(Errc::InvalidInput, "basis degree outside the grading group");
  table_.assign(n * n, {});
  for (const auto& [key, val] : d_.structure) {
    auto [i, j] = key;
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= n || static_cast<std::size_t>(j) >= n)
      throw Error(Errc::InvalidInput, "structure constant index out of range");
    Vec dense(n);
    for (auto [k, c] : val) {
      if (k < 0 || static_cast<std::size_t>(k) >= n)
        throw Error(Errc::InvalidInput, "structure constant target out of range");
      dense[k] = field().add(dense[k], c);
    }
    table_[i * n + j] = to_sparse(dense);
  }
  if (d_.pmap) {
    for (auto& [i, val] : *d_.pmap) {
      if (i < 0 || static_cast<std::size_t>(i) >= n)
        throw Error(Errc::InvalidInput, "p-map index out of range");
      Vec dense(n);
      for (auto [k, c] : val) {
        if (k < 0 || static_cast<std::size_t>(k) >= n)
          throw Error(Errc::InvalidInput, "p-map target out of range");
        dense[k] = field().add(dense[k], c);
      }
      val = to_sparse(dense);
    }
  }
  if (d_.realization) {
    const auto& R = *d_.realization;
    if (R.mats.size() != n) throw Error(Errc::InvalidInput, "realization must give one matrix per basis element");
    const std::size_t m = R.row_degrees.size();
    flat_ = Matrix(m * m, n);
    bool units = true;
    unit_index_.assign(m * m, -1);
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix& M = R.mats[j];
      if (M.rows() != m || M.cols() != m) throw Error(Errc::InvalidInput, "realization matrix has wrong size");
      int nonzero = 0;
      std::size_t slot = 0;
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
          flat_(r * m + c, j) = M(r, c);
          if (M(r, c).v) {
            ++nonzero;
            slot = r * m + c;
            if (M(r, c) != field().one()) units = false;
          }
        }
      if (nonzero != 1 || unit_index_[slot] != -1) units = false;
      if (units) unit_index_[slot] = static_cast<int>(j);
    }
    if (!units) unit_index_.clear();
  }
}

int ColorAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < d_.names.size(); ++i)
    if (d_.names[i] == name) return static_cast<int>(i);
  return -1;
}

Vec ColorAlgebra::bracket(const Vec& x, const Vec& y) const {
  const Field& F = field();
  const std::size_t n = dim();
  Vec r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].v == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].v == 0) continue;
      Scalar c = F.mul(x[i], y[j]);
      for (auto [k, s] : table_[i * n + j]) r[k] = F.add(r[k], F.mul(c, s));
    }
  }
  return r;
}

Matrix ColorAlgebra::ad(const Vec& x) const {
  const Field& F = field();
  const std::size_t n = dim();
  Matrix M(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].v == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (auto [k, s] : table_[i * n + j]) M(k, j) = F.add(M(k, j), F.mul(x[i], s));
  }
  return M;
}

Matrix ColorAlgebra::ad_basis(int i) const { return ad(basis_vec(i)); }

const SparseVec* ColorAlgebra::pmap_basis(int i) const {
  if (!d_.pmap) return nullptr;
  auto it = d_.pmap->find(i);
  return it == d_.pmap->end() ? nullptr : &it->second;
}

Vec ColorAlgebra::basis_vec(int i) const {
  Vec v(dim());
  v[i] = field().one();
  return v;
}

Matrix ColorAlgebra::to_matrix(const Vec& x) const {
  if (!d_.realization) throw Error(Errc::NoMatrixRealization, "algebra has no matrix realization");
  const Field& F = field();
  const std::size_t m = d_.realization->row_degrees.size();
  Matrix M(m, m);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].v == 0) continue;
    const Matrix& B = d_.realization->mats[i];
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c)
        if (B(r, c).v) M(r, c) = F.add(M(r, c), F.mul(x[i], B(r, c)));
  }
  return M;
}

std::optional<Vec> ColorAlgebra::coords_of(const Matrix& M) const {
  if (!d_.realization) throw Error(Errc::NoMatrixRealization, "algebra has no matrix realization");
  const std::size_t m = d_.realization->row_degrees.size();
  if (!unit_index_.empty()) {
    Vec v(dim());
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        if (M(r, c).v == 0) continue;
        int b = unit_index_[r * m + c];
        if (b < 0) return std::nullopt;
        v[b] = M(r, c);
      }
    return v;
  }
  Vec rhs(m * m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) rhs[r * m + c] = M(r, c);
  return linalg::solve(field(), flat_, rhs);
}

int ColorAlgebra::degree_of(const Vec& x) const {
  int deg = -1;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].v == 0) continue;
    if (deg == -1)
      deg = d_.degrees[i];
    else if (deg != d_.degrees[i])
      return -1;
  }
  return deg;
}

std::string format_element(const ColorAlgebra& A, const Vec& x) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    if (x[i].v == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << A.field().to_string(x[i]) << '*' << A.name(static_cast<int>(i));
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace colorlie
