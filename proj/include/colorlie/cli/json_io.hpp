#pragma once

#include <string>

#include "json.hpp"

#include "colorlie/envelope/envelope.hpp"
#include "colorlie/repmod/module.hpp"
#include "colorlie/repmod/roots.hpp"
#include "colorlie/repmod/sweep.hpp"

namespace colorlie::io {

using json = nlohmann::json;

/// Scalars are little-endian coefficient lists; a bare integer is accepted
/// on input as a prime-field element.
json to_json(const Field& F, Scalar a);
Scalar scalar_from_json(const Field& F, const json& j);
/// "c0;c1;..." as used in CSV cells.
std::string scalar_cell(const Field& F, Scalar a);

json to_json(const Field& F, const Vec& v);
Vec vec_from_json(const Field& F, const json& j);
json to_json(const Field& F, const Matrix& m);
Matrix matrix_from_json(const Field& F, const json& j);

/// [[exponent_vector, scalar], ...].
json to_json(const Envelope& E, const NormalElement& u);
NormalElement element_from_json(const Envelope& E, const json& j);

/// {"dim", "basis", "action": [[index, matrix]], "weights", "heights"} plus
/// "degrees".
json module_dump(const Field& F, const GradedModule& M);
GradedModule module_from_json(const Field& F, const json& j);
/// Equality on the dumped fields.
bool same_module(const GradedModule& a, const GradedModule& b);

json to_json(const ColorAlgebra& A, const FPTriple& t);
json to_json(const Field& F, const SimplicityVerdict& v);

json to_json(const ColorAlgebra& A, const SweepReport& r);
SweepReport sweep_from_json(const ColorAlgebra& A, const json& j);
bool same_sweep(const SweepReport& a, const SweepReport& b);
/// lambda_<h> columns for the Cartan, then f_closed, f_hc, oracle, agree.
std::string sweep_csv(const ColorAlgebra& A, const SweepReport& r);

}  // namespace colorlie::io
