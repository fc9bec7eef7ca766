#pragma once

#include <string>
#include <vector>

#include "colorlie/algebra/color_algebra.hpp"

namespace colorlie {

/// Root data of a gl-type algebra. Throws NoMatrixRealization without it.
const TriangularData& root_datum(const ColorAlgebra& A);

/// Evidence for one step of an FP ordering.
struct FPCertificate {
  int delta = -1;              // slot in TriangularData::pos
  bool positive_system = false;  // Phi_i^+ partitions Phi and is closed
  bool simple = false;         // delta_i is not a sum of two members of Phi_i^+
  bool additive = false;       // {-delta_1..-delta_i} is additive
  bool normalized = false;     // ... and normalized by Phi_1^+
  bool ok() const { return positive_system && simple && additive && normalized; }
};

struct FPTriple {
  std::vector<int> levi;    // slots of Phi_1^+
  std::vector<int> deltas;  // slots of delta_1..delta_m in order
  std::vector<FPCertificate> certificates;
};

/// Levi subsystem test for the roots +-levi.
bool is_subsystem(const TriangularData& T, const std::vector<int>& levi);

/// Certificates for every step of a proposed ordering.
std::vector<FPCertificate> fp_certificates(const TriangularData& T, const std::vector<int>& levi,
                                           const std::vector<int>& deltas);

/// Greedy least-index ordering of the positive roots outside levi, with
/// backtracking. Throws InvalidInput if levi is not a subsystem,
/// NoOrderingFound if no ordering passes.
FPTriple fp_order(const ColorAlgebra& A, const std::vector<int>& levi);

/// Root name like "e1-e3" for a positive slot.
std::string root_name(const TriangularData& T, int slot);

}  // namespace colorlie
