#pragma once

#include "colorlie/core/field.hpp"
#include "colorlie/core/poly.hpp"

namespace colorlie {

/// [n]_q = 1 + q + ... + q^{n-1}.
Scalar quantum_integer(const Field& F, int n, Scalar q);

/// d-th cyclotomic polynomial reduced mod p.
Poly cyclotomic(const Field& F, int d);

/// Gaussian binomial Q^i_n evaluated at q, computed as a product of
/// cyclotomic values Phi_d(q)^{e_d}; e_d >= 0 always, so no division occurs.
Scalar quantum_binomial(const Field& F, int n, int i, Scalar q);

}  // namespace colorlie
