#pragma once

#include "colorlie/algebra/color_algebra.hpp"

namespace colorlie {

/// b(x,y) = eps(alpha,beta) tr(xy) on homogeneous x in g_alpha, y in g_beta,
/// extended bilinearly. Needs a matrix realization.
Scalar trace_form(const ColorAlgebra& A, const Vec& x, const Vec& y);

/// Gram matrix of b on the basis.
Matrix trace_gram(const ColorAlgebra& A);

/// Graded supertrace pairing str(xy), str(M) = sum_i eps(d_i,d_i) M_ii. Used
/// as the comparison form where b fails to be invariant.
Scalar supertrace_form(const ColorAlgebra& A, const Vec& x, const Vec& y);

/// theta(x) = b(x, -) as values on the basis.
Vec theta(const ColorAlgebra& A, const Vec& x);

/// Inverse of theta; throws InvalidInput if the functional is not in the image.
Vec theta_inv(const ColorAlgebra& A, const Vec& chi);

}  // namespace colorlie
