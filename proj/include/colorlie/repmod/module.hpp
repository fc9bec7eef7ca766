#pragma once

#include <optional>
#include <string>
#include <vector>

#include "colorlie/algebra/color_algebra.hpp"
#include "colorlie/envelope/reduced_spec.hpp"

namespace colorlie {

/// Finite-dimensional module given by one action matrix per algebra basis
/// element (column j is the image of basis vector j).
struct GradedModule {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<Matrix> action;           // indexed by algebra basis index
  std::vector<int> degrees;             // Gamma-degree per basis vector
  std::vector<Vec> weights;             // values on the Cartan basis, in cartan order
  std::vector<int> heights;
  std::vector<std::vector<int>> exps;   // induced exponents per basis vector
  std::vector<int> factor;              // base-module index per basis vector
};

/// Recomputes weights from the (diagonal) Cartan action.
void fill_weights(const ColorAlgebra& A, GradedModule& M);

struct ModuleCheckOptions {
  bool heights = true;  // e_delta lowers / f_delta raises height by ht(delta)
  const PCharacter* chi = nullptr;  // u_chi relations checked when set
};

/// Violated module invariants: bracket relations on all basis pairs,
/// diagonal Cartan action, homogeneity in degree, heights, u_chi relations.
std::vector<std::string> module_violations(const ColorAlgebra& A, const GradedModule& M,
                                           const ModuleCheckOptions& opt = {});

struct SingularBucket {
  Vec weight;
  int degree = 0;
  int height = 0;
  std::vector<Vec> basis;
};

/// Joint kernel of the simple-root raising operators, split by
/// (weight, degree, height). Buckets whose kernel is not graded by the
/// recorded heights stay whole, labelled with their least height.
std::vector<SingularBucket> singular_vectors(const ColorAlgebra& A, const GradedModule& M);

struct SimplicityOptions {
  std::size_t max_enumerated = 3;  // D: singular dimension up to which all lines are tried
  int samples = 64;                // random vectors per larger bucket
  unsigned seed = 1;
};

struct SimplicityVerdict {
  bool simple = true;
  bool randomized = false;  // some bucket was only sampled
  int samples = 0;
  std::size_t lines_checked = 0;
  std::optional<Vec> witness;      // singular vector generating a proper submodule
  std::size_t witness_span = 0;
};

/// Spin-up oracle on singular lines bucketed by (weight, degree). Throws
/// ChiOnNplus if some positive root vector does not act nilpotently.
SimplicityVerdict is_simple(const ColorAlgebra& A, const GradedModule& M, const SimplicityOptions& opt = {});

/// Dimension of the submodule generated by v.
std::size_t spin_dimension(const Field& F, const std::vector<Matrix>& action, const Vec& v);

/// (rho(x)^p - rho(x^[p]))^s if it is a scalar matrix, where s is the order
/// of p deg(x). Throws OddElement on odd x.
std::optional<Scalar> extract_kappa(const ColorAlgebra& A, const GradedModule& M, int x);

/// Block-diagonal sum of two modules over the same algebra.
GradedModule direct_sum(const GradedModule& a, const GradedModule& b);

/// Adjoint module of A (needs a p-map only for u_chi checks).
GradedModule adjoint_module(const ColorAlgebra& A);

}  // namespace colorlie
