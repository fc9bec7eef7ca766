#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "colorlie/core/grading.hpp"
#include "colorlie/core/matrix.hpp"

namespace colorlie {

/// Sparse linear combination of basis indices, sorted by index, no zeros.
using SparseVec = std::vector<std::pair<int, Scalar>>;

Vec to_dense(const SparseVec& s, std::size_t n);
SparseVec to_sparse(const Vec& v);

/// Root data for a gl-type algebra: a triangular decomposition of the basis
/// and, per positive root, its (e, f, H) triple.
struct TriangularData {
  int rank = 0;                    // number of epsilon coordinates
  std::vector<int> neg, cartan, pos;
  /// Per basis index: epsilon coordinates of its root (zero for Cartan).
  std::vector<std::vector<int>> eps;
  /// Per basis index: signed height (j - i for e_ij).
  std::vector<int> height;
  /// Per basis index: root values on the Cartan basis (in cartan order).
  std::vector<Vec> on_cartan;

  struct Triple {
    int e = -1, f = -1;
    Vec H;  // dense coefficient vector in the algebra basis
    bool odd = false;
  };
  /// Aligned with pos.
  std::vector<Triple> triples;
  /// Positions in pos of the simple roots.
  std::vector<int> simple;

  /// Index in pos of the positive root whose e-vector is basis index b, or -1.
  int pos_slot(int b) const;
  /// Basis index with the given epsilon coordinates, or -1.
  int find_root(const std::vector<int>& coords) const;
};

struct Realization {
  std::vector<int> row_degrees;  // Gamma-degree of each module basis vector
  std::vector<Matrix> mats;      // one matrix per algebra basis index
};

class ColorAlgebra;
using AlgebraPtr = std::shared_ptr<const ColorAlgebra>;

class ColorAlgebra {
 public:
  struct Data {
    GradingPtr grading;
    std::vector<std::string> names;
    std::vector<int> degrees;
    /// Keyed by (i, j); missing pairs bracket to zero.
    std::map<std::pair<int, int>, SparseVec> structure;
    /// Present iff the algebra carries a p-map; entries only on even indices.
    std::optional<std::map<int, SparseVec>> pmap;
    std::optional<Realization> realization;
    std::optional<TriangularData> triangular;
  };

  /// Stores the data as given; validity is checked by validate_algebra.
  static AlgebraPtr make(Data d);

  const Grading& grading() const { return *d_.grading; }
  const GradingPtr& grading_ptr() const { return d_.grading; }
  const Field& field() const { return d_.grading->field(); }
  std::size_t dim() const { return d_.names.size(); }
  const std::vector<std::string>& names() const { return d_.names; }
  const std::string& name(int i) const { return d_.names[i]; }
  int index_of(const std::string& name) const;
  int degree(int i) const { return d_.degrees[i]; }
  const std::vector<int>& degrees() const { return d_.degrees; }
  bool is_odd(int i) const { return d_.grading->is_odd(d_.degrees[i]); }

  const SparseVec& bracket_basis(int i, int j) const { return table_[i * dim() + j]; }
  Vec bracket(const Vec& x, const Vec& y) const;
  /// Column j is [x, b_j].
  Matrix ad(const Vec& x) const;
  Matrix ad_basis(int i) const;

  bool has_pmap() const { return d_.pmap.has_value(); }
  /// p-map of a basis element, if stored.
  const SparseVec* pmap_basis(int i) const;

  const std::optional<Realization>& realization() const { return d_.realization; }
  const std::optional<TriangularData>& triangular() const { return d_.triangular; }
  const Data& data() const { return d_; }

  Vec basis_vec(int i) const;
  /// Matrix of a general element in the realization.
  Matrix to_matrix(const Vec& x) const;
  /// Coordinates of a matrix in the realization basis, if it lies in the span.
  std::optional<Vec> coords_of(const Matrix& M) const;
  /// Degree of a homogeneous nonzero vector, or -1 if inhomogeneous / zero.
  int degree_of(const Vec& x) const;

 private:
  explicit ColorAlgebra(Data d);
  Data d_;
  std::vector<SparseVec> table_;
  Matrix flat_;                  // column j = flattened realization matrix j
  std::vector<int> unit_index_;  // entry slot -> basis index when all are units
};

std::string format_element(const ColorAlgebra& A, const Vec& x);

}  // namespace colorlie
