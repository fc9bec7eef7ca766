#pragma once

#include <utility>
#include <vector>

#include "colorlie/algebra/color_algebra.hpp"

namespace colorlie {

/// gl(m, Gamma): `dims` lists (group element index, multiplicity). The
/// underlying space has its basis ordered by group element index.
AlgebraPtr make_gl(GradingPtr grading, std::vector<std::pair<int, int>> dims);

/// Subalgebra spanned by the given basis indices (in that order). Throws
/// InvalidInput if the span is not closed under bracket and p-map.
AlgebraPtr restrict_algebra(const ColorAlgebra& A, const std::vector<int>& indices);

/// The same algebra with its basis reordered: new index t is old index
/// order[t]. Root data is carried along.
AlgebraPtr permute_algebra(const ColorAlgebra& A, const std::vector<int>& order);

}  // namespace colorlie
