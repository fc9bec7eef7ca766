#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace colorlie::cli {

struct Options {
  std::string command;
  std::string spec_path;
  std::optional<std::string> chi;     // file path or "zero"
  std::optional<std::string> lambda;  // name=value,...
  std::optional<bool> oracle;
  std::optional<std::string> out;
  std::optional<std::size_t> max_dim;
  unsigned seed = 1;
  bool list = false;                  // basis: enumerate monomials
  std::optional<std::string> word;    // hc: "e12^2 e21^2"
  std::string format = "csv";         // sweep stdout format
};

constexpr std::size_t kDefaultMaxDim = 2000;

/// Flag, then COLORLIE_MAX_DIM, then the default.
std::size_t effective_max_dim(const Options& o);

/// Exit codes: 0 success, 1 validation failure, 2 input error (reported as
/// JSON on err).
int run(const Options& o, std::ostream& out, std::ostream& err);

}  // namespace colorlie::cli
