#pragma once

#include <map>
#include <memory>
#include <vector>

#include "colorlie/algebra/color_algebra.hpp"

namespace colorlie {

/// An F-class record for a degree alpha with p*alpha != 0: a distinguished
/// even basis element xi of degree alpha and a functional c on g_alpha with
/// c(xi) = 1; s is the order of p*alpha.
struct FClass {
  int degree = 0;
  int xi = -1;
  Vec c;  // dense over the whole basis, supported in degree alpha
  int s = 1;
};

/// p-character data: linear values on even basis elements (zero if absent)
/// plus F-class records. A degree carrying an F-class has no linear values.
struct PCharacter {
  std::map<int, Scalar> linear;
  std::vector<FClass> fclasses;

  Scalar value(int i) const;
  const FClass* fclass_of_degree(int degree) const;
  /// Dense vector of the linear values.
  Vec linear_vec(std::size_t n) const;
};

struct ReducedAlgebraSpec {
  AlgebraPtr algebra;
  PCharacter chi;
  std::vector<int> J;        // the xi indices, ascending
  std::map<int, int> s_of;   // xi index -> order of p*deg(xi)

  /// Exponent bound per basis index: p, p*s on J, 2 on odd indices.
  std::vector<int> caps() const;
};

using ReducedSpecPtr = std::shared_ptr<const ReducedAlgebraSpec>;

/// Validates chi against A. Throws NotRestricted if A lacks a p-map on some
/// even basis element, BadCharacter if chi breaks a PCharacter invariant.
ReducedSpecPtr make_reduced_spec(AlgebraPtr A, PCharacter chi);

}  // namespace colorlie
