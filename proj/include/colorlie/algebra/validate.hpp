#pragma once

#include <string>
#include <vector>

#include "colorlie/algebra/color_algebra.hpp"

namespace colorlie {

struct Violation {
  std::string kind;          // degree, skew, jacobi, restricted, additivity, ...
  std::vector<int> indices;  // basis indices involved
  std::string message;
};

struct AlgebraReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(const std::string& kind) const;
};

/// Coefficients s_1..s_{p-1} of the Jacobson formula for homogeneous even x, y
/// of equal degree: i*s_i(x,y) is the coefficient of t^{i-1} in
/// ad(tx+y)^{p-1}(x), recovered by interpolation at t = 0..p-2.
std::vector<Vec> jacobson_terms(const ColorAlgebra& A, const Vec& x, const Vec& y);

/// p-map of a homogeneous even element from basis values, via semilinearity
/// and the Jacobson formula. Throws NotRestricted if a needed value is absent.
Vec pmap_eval(const ColorAlgebra& A, const Vec& x);

/// Never throws for axiom failures; every violated instance is listed.
/// `samples` bounds the number of random combinations in the p-map checks.
AlgebraReport validate_algebra(const ColorAlgebra& A, unsigned seed = 1, int samples = 8);

std::string format_report(const ColorAlgebra& A, const AlgebraReport& r);

}  // namespace colorlie
