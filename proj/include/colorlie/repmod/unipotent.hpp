#pragma once

#include <vector>

#include "colorlie/envelope/envelope.hpp"

namespace colorlie {

/// Every even basis element is killed by an iterate of the p-map.
bool is_unipotent(const ColorAlgebra& A);

/// Left and right multiplication by the basis of g on u_chi(g), in the
/// sorted PBW basis.
struct RegularModule {
  std::vector<Monomial> basis;
  std::vector<Matrix> left, right;
};

RegularModule regular_module(const Envelope& E);

struct SocleReport {
  std::size_t left_dim = 0, right_dim = 0;
  Vec left, right;       // spanning vectors when 1-dimensional
  Scalar c;              // left = c * right
  bool proportional = false;
  RegularModule regular;
};

/// Joint kernels of left and right multiplication by g on u(g). Throws
/// NotUnipotent.
SocleReport unipotent_socle(AlgebraPtr A);

/// A 1-dimensional quotient u/H: the functional phi with H = ker phi and the
/// scalar by which each basis element of g acts.
struct SimpleQuotient {
  Vec phi;
  std::vector<Scalar> action;
};

/// Random hyperplane containing sum_x rho(x) u, checked to be a submodule.
/// Throws InvalidInput if the radical candidate has no proper hyperplane.
SimpleQuotient random_simple_quotient(const Field& F, const std::vector<Matrix>& action, unsigned seed);

/// Nonzero T with T a_x = b_x T for all x, if one exists.
std::optional<Scalar> quotient_intertwiner(const Field& F, const SimpleQuotient& a, const SimpleQuotient& b);

}  // namespace colorlie
