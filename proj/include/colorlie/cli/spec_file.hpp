#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "colorlie/algebra/color_algebra.hpp"
#include "colorlie/core/grading.hpp"
#include "colorlie/envelope/reduced_spec.hpp"
#include "colorlie/repmod/verma.hpp"

namespace colorlie::io {

using json = nlohmann::json;

struct SpecOptions {
  bool oracle = true;
  std::size_t singular_cutoff = 3;  // D of the simplicity oracle
  std::size_t gram_cutoff = 2000;
  int samples = 64;
};

/// A parsed spec file. Sections other than field/group/bicharacter/algebra
/// are kept raw until a command needs them.
struct SpecFile {
  FieldPtr field;
  GradedGroup group;
  BicharTable table;
  BicharReport bichar;
  GradingPtr grading;  // null when the bicharacter is invalid
  AlgebraPtr algebra;  // null when the bicharacter is invalid
  std::optional<json> character;
  std::vector<std::string> sweep_coords;
  std::optional<json> lambda;
  std::optional<json> levi;  // list of positive root vector names, or "auto"
  std::optional<json> element;
  std::optional<json> module;
  SpecOptions options;
};

/// Throws InvalidInput on unknown keys or malformed sections. An invalid
/// bicharacter is reported in `bichar` rather than thrown.
SpecFile parse_spec(const json& j);
SpecFile load_spec(const std::string& path);
json load_json(const std::string& path);

/// {"values": [[index or name, scalar]], "fclasses": [{"xi", "c", "s", "degree"}]}.
PCharacter parse_character(const ColorAlgebra& A, const json& j);
json character_to_json(const ColorAlgebra& A, const PCharacter& chi);

/// Basis index from an integer or a basis name.
int basis_ref(const ColorAlgebra& A, const json& j);

/// [[name or index, scalar]] or an object {name: scalar}; entries override base.
Vec parse_weight(const ColorAlgebra& A, const json& j, Vec base);
/// "e11=2,e22=1;3" with scalars as integers or ';'-joined coefficient lists.
Vec parse_weight_assignment(const ColorAlgebra& A, const std::string& s, Vec base);

/// {"dim", "action": [[name or index, matrix]], "degrees"}.
BaseModule parse_base_module(const ColorAlgebra& A, const json& j);

}  // namespace colorlie::io
