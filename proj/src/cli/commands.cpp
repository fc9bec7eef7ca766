#include "colorlie/cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "colorlie/algebra/standard_form.hpp"
#include "colorlie/algebra/validate.hpp"
#include "colorlie/cli/json_io.hpp"
#include "colorlie/cli/spec_file.hpp"
#include "colorlie/core/error.hpp"
#include "colorlie/envelope/ops.hpp"
#include "colorlie/repmod/sweep.hpp"

namespace colorlie::cli {

using io::json;

namespace {

Error bad(const std::string& what) { return Error(Errc::InvalidInput, what); }

struct Context {
  const Options& opt;
  io::SpecFile spec;
  std::size_t max_dim;
  std::ostream& out;
};

const ColorAlgebra& algebra(const Context& c) {
  if (!c.spec.algebra) throw bad("bicharacter is invalid: " + c.spec.bichar.violations.front());
  return *c.spec.algebra;
}

PCharacter character(const Context& c) {
  const ColorAlgebra& A = algebra(c);
  if (c.opt.chi) {
    if (*c.opt.chi == "zero") return {};
    return io::parse_character(A, io::load_json(*c.opt.chi));
  }
  if (c.spec.character) return io::parse_character(A, *c.spec.character);
  return {};
}

Vec weight(const Context& c) {
  const ColorAlgebra& A = algebra(c);
  Vec lam(A.dim());
  if (c.spec.lambda) lam = io::parse_weight(A, *c.spec.lambda, lam);
  if (c.opt.lambda) lam = io::parse_weight_assignment(A, *c.opt.lambda, lam);
  return lam;
}

SimplicityOptions simplicity(const Context& c) {
  SimplicityOptions s;
  s.max_enumerated = c.spec.options.singular_cutoff;
  s.samples = c.spec.options.samples;
  s.seed = c.opt.seed;
  return s;
}

FPTriple triple(const Context& c, const PCharacter& chi) {
  const ColorAlgebra& A = algebra(c);
  const TriangularData& T = root_datum(A);
  std::vector<int> levi;
  if (c.spec.levi && c.spec.levi->is_string()) {
    if (c.spec.levi->get<std::string>() != "auto") throw bad("levi must be a list of root vectors or \"auto\"");
    Vec chi_s = chi.linear_vec(A.dim()), chi_n(A.dim());
    for (std::size_t i = 0; i < A.dim(); ++i)
      if (std::find(T.cartan.begin(), T.cartan.end(), static_cast<int>(i)) == T.cartan.end()) {
        chi_n[i] = chi_s[i];
        chi_s[i] = A.field().zero();
      }
    LeviData L = levi_data(A, chi_s, chi_n);
    for (int b : L.z) {
      int slot = T.pos_slot(b);
      if (slot >= 0) levi.push_back(slot);
    }
  } else if (c.spec.levi) {
    for (const auto& e : *c.spec.levi) {
      int slot = T.pos_slot(io::basis_ref(A, e));
      if (slot < 0) throw bad("levi entries must be positive root vectors");
      levi.push_back(slot);
    }
  }
  return fp_order(A, levi);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw bad("cannot write " + path);
  f << text;
}

int cmd_validate(Context& c) {
  json viol = json::array();
  for (const auto& v : c.spec.bichar.violations) viol.push_back({{"kind", "bicharacter"}, {"message", v}});
  if (c.spec.algebra) {
    for (const auto& v : validate_algebra(*c.spec.algebra, c.opt.seed).violations)
      viol.push_back({{"kind", v.kind}, {"indices", v.indices}, {"message", v.message}});
    if (c.spec.character || c.opt.chi) {
      try {
        make_reduced_spec(c.spec.algebra, character(c));
      } catch (const Error& e) {
        if (e.code() != Errc::BadCharacter && e.code() != Errc::NotRestricted) throw;
        viol.push_back({{"kind", "character"}, {"message", e.what()}});
      }
    }
  }
  c.out << json{{"violations", viol}}.dump(2) << '\n';
  return viol.empty() ? 0 : 1;
}

int cmd_basis(Context& c) {
  auto spec = make_reduced_spec(c.spec.algebra, character(c));
  std::uint64_t n = uchi_count(*spec);
  if (!c.opt.list) {
    c.out << n << '\n';
    return 0;
  }
  if (n > c.max_dim) throw Error(Errc::TooLarge, "basis of size " + std::to_string(n), static_cast<long>(n));
  Envelope E = Envelope::reduced(spec);
  json monos = json::array();
  for (const Monomial& m : uchi_basis(E, n)) monos.push_back(exponents(m));
  json j = {{"count", n}, {"order", spec->algebra->names()}, {"basis", monos}};
  c.out << j.dump() << '\n';
  return 0;
}

NormalElement parse_word(const Envelope& E, const std::string& w) {
  const ColorAlgebra& A = E.algebra();
  NormalElement u = E.one();
  std::stringstream ss(w);
  std::string tok;
  while (ss >> tok) {
    int k = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      try {
        k = std::stoi(tok.substr(caret + 1));
      } catch (const std::logic_error&) {
        throw bad("bad exponent in '" + tok + "'");
      }
      tok = tok.substr(0, caret);
    }
    if (k < 0) throw bad("negative exponent in word");
    u = E.product(u, E.power(E.generator(io::basis_ref(A, json(tok))), k));
  }
  return u;
}

int cmd_hc(Context& c) {
  const ColorAlgebra& A = algebra(c);
  Envelope E = A.has_pmap() ? Envelope::reduced(make_reduced_spec(c.spec.algebra, character(c)))
                            : Envelope::universal(c.spec.algebra);
  NormalElement u;
  if (c.opt.word) u = parse_word(E, *c.opt.word);
  else if (c.spec.element) u = io::element_from_json(E, *c.spec.element);
  else throw bad("hc needs --word or an \"element\" section");
  auto h = harish_chandra(E, u);
  json j = {{"element", io::to_json(E, u)},
            {"gamma", io::to_json(E, h.gamma)},
            {"gamma_text", E.format(h.gamma)},
            {"discarded_in_L", h.discarded_in_L}};
  c.out << j.dump(2) << '\n';
  return 0;
}

int cmd_frobenius(Context& c) {
  auto spec = make_reduced_spec(c.spec.algebra, character(c));
  Envelope E = Envelope::reduced(spec);
  auto g = frobenius_gram(E, std::min(c.spec.options.gram_cutoff, c.max_dim));
  json j = {{"dim", g.basis.size()}, {"rank", g.rank}, {"nondegenerate", g.nondegenerate}, {"symmetric", g.symmetric}};
  c.out << j.dump(2) << '\n';
  return g.nondegenerate ? 0 : 1;
}

int cmd_fp_order(Context& c) {
  FPTriple t = triple(c, character(c));
  c.out << io::to_json(algebra(c), t).dump(2) << '\n';
  for (const auto& cert : t.certificates)
    if (!cert.ok()) return 1;
  return 0;
}

int cmd_standardize(Context& c) {
  const ColorAlgebra& A = algebra(c);
  const Field& F = A.field();
  PCharacter chi = character(c);
  if (!chi.fclasses.empty()) throw Error(Errc::NotZeroDegree, "standard form needs a linear character");
  CharacterStd s = standardize_character(A, chi.linear_vec(A.dim()));
  auto bad_std = check_standard(A, s.chi_s, s.chi_n);
  json j = {{"chi", io::to_json(F, s.chi)},     {"chi_s", io::to_json(F, s.chi_s)},
            {"chi_n", io::to_json(F, s.chi_n)}, {"g", io::to_json(F, s.g)},
            {"g_inv", io::to_json(F, s.g_inv)}, {"standard", bad_std.empty()}};
  c.out << j.dump(2) << '\n';
  return bad_std.empty() ? 0 : 1;
}

int cmd_verma(Context& c) {
  const ColorAlgebra& A = algebra(c);
  const Field& F = A.field();
  PCharacter chi = character(c);
  auto spec = make_reduced_spec(c.spec.algebra, chi);
  FPTriple t = triple(c, chi);
  VermaBuilder vb(spec, t);
  BaseModule M = c.spec.module ? io::parse_base_module(A, *c.spec.module) : vb.one_dimensional(weight(c));
  if (vb.induced_dim() * M.dim > c.max_dim)
    throw Error(Errc::TooLarge, "module of dimension " + std::to_string(vb.induced_dim() * M.dim),
                static_cast<long>(vb.induced_dim() * M.dim));
  GradedModule Z = vb.build(M);
  ModuleCheckOptions mc;
  mc.heights = M.dim == 1;
  mc.chi = &spec->chi;
  auto viol = module_violations(A, Z, mc);
  SimplicityVerdict v = is_simple(A, Z, simplicity(c));
  json dump = io::module_dump(F, Z);
  json sing = json::array();
  for (const auto& b : singular_vectors(A, Z)) {
    json basis = json::array();
    for (const Vec& x : b.basis) basis.push_back(io::to_json(F, x));
    sing.push_back({{"weight", io::to_json(F, b.weight)}, {"degree", b.degree}, {"height", b.height}, {"basis", basis}});
  }
  json j = {{"triple", io::to_json(A, t)},
            {"module", dump},
            {"violations", viol},
            {"singular", sing},
            {"verdict", io::to_json(F, v)}};
  if (c.opt.out) write_file(*c.opt.out, dump.dump() + "\n");
  c.out << j.dump() << '\n';
  return viol.empty() ? 0 : 1;
}

int cmd_sweep(Context& c) {
  const ColorAlgebra& A = algebra(c);
  PCharacter chi = character(c);
  auto spec = make_reduced_spec(c.spec.algebra, chi);
  FPTriple t = triple(c, chi);
  SweepOptions so;
  for (const auto& n : c.spec.sweep_coords) so.coords.push_back(io::basis_ref(A, json(n)));
  so.base = weight(c);
  so.oracle = c.opt.oracle.value_or(c.spec.options.oracle);
  so.simplicity = simplicity(c);
  so.max_dim = c.max_dim;
  SweepReport r = run_sweep(spec, t, so);
  std::string csv = io::sweep_csv(A, r);
  json j = io::to_json(A, r);
  if (c.opt.out) {
    write_file(*c.opt.out + ".csv", csv);
    write_file(*c.opt.out + ".json", j.dump(2) + "\n");
  }
  if (c.opt.format == "json") c.out << j.dump(2) << '\n';
  else c.out << csv;
  return r.all_agree() ? 0 : 1;
}

}  // namespace

std::size_t effective_max_dim(const Options& o) {
  if (o.max_dim) return *o.max_dim;
  if (const char* env = std::getenv("COLORLIE_MAX_DIM")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::logic_error&) {
      throw bad("COLORLIE_MAX_DIM is not a number");
    }
  }
  return kDefaultMaxDim;
}

int run(const Options& o, std::ostream& out, std::ostream& err) {
  auto fail = [&](const std::string& code, const std::string& msg, long detail) {
    json e = {{"error", {{"code", code}, {"message", msg}}}};
    if (detail) e["error"]["detail"] = detail;
    err << e.dump() << '\n';
    return 2;
  };
  try {
    if (o.format != "csv" && o.format != "json") throw bad("format must be csv or json");
    Context c{o, io::load_spec(o.spec_path), effective_max_dim(o), out};
    if (o.command == "validate") return cmd_validate(c);
    if (!c.spec.algebra) throw bad("bicharacter is invalid: " + c.spec.bichar.violations.front());
    if (o.command == "basis") return cmd_basis(c);
    if (o.command == "hc") return cmd_hc(c);
    if (o.command == "frobenius") return cmd_frobenius(c);
    if (o.command == "fp-order") return cmd_fp_order(c);
    if (o.command == "standardize") return cmd_standardize(c);
    if (o.command == "verma") return cmd_verma(c);
    if (o.command == "sweep") return cmd_sweep(c);
    throw bad("unknown command '" + o.command + "'");
  } catch (const Error& e) {
    return fail(std::string(to_string(e.code())), e.what(), e.detail());
  } catch (const json::exception& e) {
    return fail("InvalidInput", e.what(), 0);
  }
}

}  // namespace colorlie::cli
