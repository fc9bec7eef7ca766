#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "colorlie/cli/commands.hpp"

int main(int argc, char** argv) {
  colorlie::cli::Options o;
  CLI::App app{"Restricted Lie color algebras over finite fields"};
  app.require_subcommand(1, 1);
  std::size_t max_dim = 0;
  bool oracle = true;

  auto add = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("spec", o.spec_path, "spec file (JSON)")->required();
    s->add_option("--chi", o.chi, "character file, or 'zero'");
    s->add_option("--lambda", o.lambda, "weight assignment name=value,...");
    s->add_option("--out", o.out, "output path");
    s->add_option("--max-dim", max_dim, "refuse modules or Gram matrices beyond this dimension");
    s->add_option("--seed", o.seed, "seed for randomized fallbacks");
    return s;
  };
  add("validate", "check the bicharacter, algebra axioms and character");
  add("basis", "u_chi basis count")->add_flag("--list", o.list, "print the basis monomials");
  add("hc", "Harish-Chandra projection")->add_option("--word", o.word, "product like 'e12^2 e21^2'");
  add("frobenius", "Gram matrix rank and symmetry");
  add("fp-order", "FP ordering with certificates");
  add("standardize", "standard form of a character");
  add("verma", "induced module dump and simplicity verdict");
  CLI::App* sweep = add("sweep", "simplicity sweep over admissible weights");
  sweep->add_flag("--oracle,!--no-oracle", oracle, "run the spin-up oracle");
  sweep->add_option("--format", o.format, "stdout format")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    nlohmann::json err = {{"error", {{"code", "InvalidInput"}, {"message", e.what()}}}};
    std::cerr << err.dump() << '\n';
    return 2;
  }
  o.command = app.get_subcommands().front()->get_name();
  if (app.get_subcommands().front()->count("--max-dim")) o.max_dim = max_dim;
  if (sweep->parsed() && (sweep->count("--oracle") || sweep->count("--no-oracle"))) o.oracle = oracle;
  return colorlie::cli::run(o, std::cout, std::cerr);
}
