#pragma once

#include <vector>

#include "colorlie/core/field.hpp"
#include "colorlie/core/matrix.hpp"

namespace colorlie {

/// Univariate polynomial over F_q, little-endian, no trailing zeros.
using Poly = std::vector<Scalar>;

namespace poly {

void trim(Poly& a);
int degree(const Poly& a);  // -1 for the zero polynomial
Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly mul(const Field& F, const Poly& a, const Poly& b);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);
Poly mod(const Field& F, const Poly& a, const Poly& b);
Poly monic(const Field& F, const Poly& a);
Poly gcd(const Field& F, Poly a, Poly b);
Scalar eval(const Field& F, const Poly& a, Scalar x);
Poly derivative(const Field& F, const Poly& a);
/// Characteristic polynomial det(tI - A), via Hessenberg reduction.
Poly charpoly(const Field& F, const Matrix& A);
/// Distinct roots lying in F_q.
std::vector<Scalar> roots(const Field& F, const Poly& a);
/// Degree over F_q of the splitting field of a: lcm of the degrees of its
/// irreducible factors.
int splitting_degree(const Field& F, const Poly& a);
/// Coefficients c_0..c_{n-1} of the unique polynomial of degree < n through
/// the points (xs[i], ys[i]); xs must be distinct.
Poly interpolate(const Field& F, const std::vector<Scalar>& xs, const std::vector<Scalar>& ys);

}  // namespace poly
}  // namespace colorlie
