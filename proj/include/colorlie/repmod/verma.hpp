#pragma once

#include <map>
#include <vector>

#include "colorlie/envelope/envelope.hpp"
#include "colorlie/repmod/module.hpp"
#include "colorlie/repmod/roots.hpp"

namespace colorlie {

/// A u_chi(P_0)-module: matrices for the basis elements of P_0 (original
/// algebra indices; missing entries act by zero) and a degree per vector.
struct BaseModule {
  std::size_t dim = 1;
  std::map<int, Matrix> action;
  std::vector<int> degrees;
};

/// Induced modules Z = u_chi(g) (x)_{u_chi(P_0)} M for one FP triple.
///
/// The PBW expansion of x * f^a for every basis x and every induced monomial
/// f^a is computed once, in a basis reordered so that f_{delta_1}, ...,
/// f_{delta_m} come first; build() then only evaluates the P_0 factors on M.
class VermaBuilder {
 public:
  /// Throws BadCharacter for F-class characters, ChiOnDelta if chi is
  /// nonzero on some g_{+-delta_i}.
  VermaBuilder(ReducedSpecPtr spec, FPTriple triple);

  const ReducedSpecPtr& spec() const { return spec_; }
  const FPTriple& triple() const { return triple_; }
  /// prod over i of pbar(delta_i).
  std::size_t induced_dim() const { return fexps_.size(); }
  /// Basis indices of f_{delta_i} and pbar(delta_i).
  const std::vector<int>& lowering() const { return lower_; }
  const std::vector<int>& pbar() const { return pbar_; }
  /// Indices of P_0.
  const std::vector<int>& p0() const { return p0_; }

  /// Fv with h v = lambda(h) v on the Cartan and every root vector of P_0
  /// acting by zero. Throws BadWeight if this is not a u_chi(P_0)-module.
  BaseModule one_dimensional(const Vec& lambda) const;
  /// Throws BadWeight if M violates the u_chi(P_0)-module conditions or
  /// N^+_0 does not annihilate it.
  void check_base(const BaseModule& M) const;
  GradedModule build(const BaseModule& M) const;
  GradedModule build(const Vec& lambda) const { return build(one_dimensional(lambda)); }

 private:
  struct Entry {
    std::uint32_t target;
    std::uint32_t word;
    Scalar c;
  };
  ReducedSpecPtr spec_;
  FPTriple triple_;
  std::vector<int> lower_, pbar_, p0_;
  std::vector<std::vector<int>> fexps_;
  std::vector<std::vector<int>> words_;  // P_0 words in original indices
  std::vector<std::vector<std::vector<Entry>>> skel_;  // [x][source]
};

/// All lambda (dense over the basis, nonzero only on the Cartan) with
/// lambda(h)^p - lambda(h^[p]) = chi(h)^p; h^[p] must equal h.
std::vector<Vec> admissible_weights(const ReducedAlgebraSpec& spec);

/// Roots of t^p - t = c^p in the field.
std::vector<Scalar> artin_schreier_roots(const Field& F, Scalar c);

/// Product over i of [(lambda_i(H_{delta_i}) + 1)^{pbar-1} - 1] with
/// lambda_i = lambda - sum_{j<i} (pbar_j - 1) delta_j. Throws DoubledRoot if
/// 2 delta lies in the list.
Scalar f_closed(const ColorAlgebra& A, const FPTriple& t, const Vec& lambda);

struct HcPolynomial {
  NormalElement gamma;  // gamma(e^{pbar-1}...f^{pbar-1}), Cartan-only
  Scalar k;             // f_m^{pbar-1}...f_1^{pbar-1} = k f_1^{pbar-1}...f_m^{pbar-1}
  bool k_defined = false;
  bool discarded_in_L = true;
};

/// Also defined when 2 delta occurs among the FP roots. Throws NotStandard if
/// chi is not Cartan-supported.
HcPolynomial hc_polynomial(const Envelope& E, const FPTriple& t);

Scalar f_via_hc(const Envelope& E, const HcPolynomial& h, const Vec& lambda);

}  // namespace colorlie
