#pragma once

#include <optional>
#include <vector>

#include "colorlie/repmod/verma.hpp"

namespace colorlie {

struct SweepOptions {
  std::vector<int> coords;  // Cartan basis indices to range over; empty = all
  Vec base;                 // values of the remaining coordinates (basis-indexed); empty = 0
  bool oracle = true;
  SimplicityOptions simplicity;
  std::size_t max_dim = 2000;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct SweepRow {
  Vec lambda;
  std::optional<Scalar> f_closed;  // unset on DoubledRoot
  Scalar f_hc;
  std::optional<SimplicityVerdict> oracle;
  bool agree = true;
  double seconds = 0;
};

struct SweepReport {
  std::vector<SweepRow> rows;  // sorted by lambda
  std::size_t simple = 0, agreeing = 0;
  bool all_agree() const { return agreeing == rows.size(); }
};

/// Rows over every admissible assignment of the swept coordinates. Throws
/// TooLarge if the induced module exceeds max_dim, BadWeight if the fixed
/// coordinates are incompatible with chi. Weights rejected by
/// VermaBuilder::one_dimensional are left out.
SweepReport run_sweep(ReducedSpecPtr spec, const FPTriple& triple, const SweepOptions& opt);

}  // namespace colorlie
