#pragma once

#include <string>
#include <vector>

#include "colorlie/algebra/color_algebra.hpp"

namespace colorlie {

struct JordanParts {
  Vec xs, xn;
};

/// Jordan decomposition of a degree-zero element through its matrix.
/// Throws NeedsExtension (detail = splitting degree) if the characteristic
/// polynomial does not split, NotZeroDegree if x has nonzero degree.
JordanParts jordan_decompose(const ColorAlgebra& A, const Vec& x);

struct CharacterStd {
  Vec chi;    // chi^g on the basis
  Vec chi_s;  // semisimple part, supported on the Cartan
  Vec chi_n;  // nilpotent part, supported on N^-
  Matrix g;   // block-diagonal conjugator acting on the realization space
  Matrix g_inv;
};

/// Conjugates chi (supported in degree 0) into standard form:
/// chi^g(y) = chi(g^{-1} y g), chi^g = theta(g x g^{-1}) with x = theta_inv(chi).
CharacterStd standardize_character(const ColorAlgebra& A, const Vec& chi);

/// Coadjoint action chi^g(y) = chi(g^{-1} y g).
Vec coadjoint(const ColorAlgebra& A, const Matrix& g, const Matrix& g_inv, const Vec& chi);

/// Violated standard-form conditions for chi = chi_s + chi_n (empty if standard).
std::vector<std::string> check_standard(const ColorAlgebra& A, const Vec& chi_s, const Vec& chi_n);

/// Value of a functional on a vector.
Scalar apply_functional(const Field& F, const Vec& chi, const Vec& x);

struct LeviData {
  std::vector<int> z;        // Cartan plus root vectors with chi(H_delta) = 0
  std::vector<int> p0;       // z plus positive root vectors: the parabolic P
  std::vector<int> nplus;    // positive root vectors with chi(H_delta) != 0
};

/// Throws NotStandard if chi_s/chi_n fail the standard-form conditions.
LeviData levi_data(const ColorAlgebra& A, const Vec& chi_s, const Vec& chi_n);

}  // namespace colorlie
