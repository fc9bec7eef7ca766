#include "colorlie/cli/spec_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "colorlie/algebra/gl.hpp"
#include "colorlie/cli/json_io.hpp"
#include "colorlie/core/error.hpp"

namespace colorlie::io {

namespace {

Error bad(const std::string& what) { return Error(Errc::InvalidInput, what); }

void only_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw bad(where + " must be an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : j.items())
    if (!ok.count(k)) throw bad("unknown key '" + k + "' in " + where);
}

std::vector<int> parse_element_key(const std::string& key) {
  std::vector<int> out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw bad("bad group element '" + key + "'");
    } catch (const std::logic_error&) {
      throw bad("bad group element '" + key + "'");
    }
  }
  return out;
}

int group_index(const GradedGroup& G, const std::vector<int>& coords) {
  if (G.rank() == 0 && coords == std::vector<int>{0}) return 0;
  if (static_cast<int>(coords.size()) != G.rank()) throw bad("group element has the wrong number of coordinates");
  std::vector<int> c = coords;
  for (int i = 0; i < G.rank(); ++i) c[i] = ((c[i] % G.orders()[i]) + G.orders()[i]) % G.orders()[i];
  return G.index(c);
}

AlgebraPtr explicit_algebra(const SpecFile& s, const json& j) {
  only_keys(j, "algebra", {"type", "basis", "degrees", "structure", "pmap"});
  const Field& F = *s.field;
  ColorAlgebra::Data d;
  d.grading = s.grading;
  d.names = j.at("basis").get<std::vector<std::string>>();
  if (d.names.empty()) throw Error(Errc::EmptyAlgebra, "explicit algebra has no basis");
  const auto& degs = j.at("degrees");
  if (degs.size() != d.names.size()) throw Error(Errc::DimensionMismatch, "one degree per basis element");
  for (const auto& g : degs) {
    std::vector<int> c = g.is_array() ? g.get<std::vector<int>>() : std::vector<int>{g.get<int>()};
    d.degrees.push_back(group_index(s.group, c));
  }
  const int n = static_cast<int>(d.names.size());
  auto idx = [&](const json& x) {
    int i = x.get<int>();
    if (i < 0 || i >= n) throw bad("basis index out of range");
    return i;
  };
  auto sparse = [&](const json& terms) {
    SparseVec v;
    for (const auto& t : terms) {
      Scalar c = scalar_from_json(F, t.at(1));
      if (c.v) v.emplace_back(idx(t.at(0)), c);
    }
    std::sort(v.begin(), v.end());
    return v;
  };
  if (j.contains("structure"))
    for (const auto& e : j.at("structure")) d.structure[{idx(e.at(0)), idx(e.at(1))}] = sparse(e.at(2));
  if (j.contains("pmap")) {
    std::map<int, SparseVec> pm;
    for (const auto& e : j.at("pmap")) pm[idx(e.at(0))] = sparse(e.at(1));
    d.pmap = pm;
  }
  return ColorAlgebra::make(d);
}

}  // namespace

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bad("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw bad(path + ": " + e.what());
  }
}

SpecFile parse_spec(const json& j) {
  only_keys(j, "spec", {"field", "group", "bicharacter", "algebra", "character", "sweep", "lambda", "levi",
                        "element", "module", "options"});
  SpecFile s;
  const json& f = j.at("field");
  only_keys(f, "field", {"p", "k", "modulus"});
  std::optional<std::vector<int>> modulus;
  if (f.contains("modulus")) modulus = f.at("modulus").get<std::vector<int>>();
  s.field = Field::make(f.at("p").get<int>(), f.value("k", 1), modulus);
  const Field& F = *s.field;

  std::vector<int> orders;
  if (j.contains("group")) {
    only_keys(j.at("group"), "group", {"cyclic_orders"});
    orders = j.at("group").at("cyclic_orders").get<std::vector<int>>();
  }
  for (int o : orders)
    if (o < 1) throw bad("cyclic orders must be positive");
  s.group = GradedGroup(orders);
  const std::size_t r = orders.size();
  s.table.assign(r, std::vector<Scalar>(r, F.one()));
  if (j.contains("bicharacter")) {
    only_keys(j.at("bicharacter"), "bicharacter", {"table"});
    const json& t = j.at("bicharacter").at("table");
    if (t.size() != r) throw Error(Errc::DimensionMismatch, "bicharacter table must be rank x rank");
    for (std::size_t a = 0; a < r; ++a) {
      if (t[a].size() != r) throw Error(Errc::DimensionMismatch, "bicharacter table must be rank x rank");
      for (std::size_t b = 0; b < r; ++b) s.table[a][b] = scalar_from_json(F, t[a][b]);
    }
  }
  s.bichar = bichar_validate(F, s.group, s.table);

  const json& alg = j.at("algebra");
  const std::string type = alg.at("type").get<std::string>();
  if (type != "gl" && type != "explicit") throw bad("algebra type must be 'gl' or 'explicit'");
  if (type == "gl") only_keys(alg, "algebra", {"type", "dims"});
  if (s.bichar.ok()) {
    s.grading = Grading::make(s.field, s.group, s.table);
    if (type == "gl") {
      std::vector<std::pair<int, int>> dims;
      for (const auto& [key, m] : alg.at("dims").items())
        dims.emplace_back(group_index(s.group, parse_element_key(key)), m.get<int>());
      std::sort(dims.begin(), dims.end());
      s.algebra = make_gl(s.grading, dims);
    } else {
      s.algebra = explicit_algebra(s, alg);
    }
  }

  if (j.contains("character")) s.character = j.at("character");
  if (j.contains("sweep")) {
    only_keys(j.at("sweep"), "sweep", {"coords"});
    s.sweep_coords = j.at("sweep").at("coords").get<std::vector<std::string>>();
  }
  if (j.contains("lambda")) s.lambda = j.at("lambda");
  if (j.contains("levi")) s.levi = j.at("levi");
  if (j.contains("element")) s.element = j.at("element");
  if (j.contains("module")) s.module = j.at("module");
  if (j.contains("options")) {
    const json& o = j.at("options");
    only_keys(o, "options", {"oracle", "singular_cutoff", "gram_cutoff", "samples"});
    s.options.oracle = o.value("oracle", s.options.oracle);
    s.options.singular_cutoff = o.value("singular_cutoff", s.options.singular_cutoff);
    s.options.gram_cutoff = o.value("gram_cutoff", s.options.gram_cutoff);
    s.options.samples = o.value("samples", s.options.samples);
  }
  return s;
}

SpecFile load_spec(const std::string& path) {
  try {
    return parse_spec(load_json(path));
  } catch (const json::exception& e) {
    throw bad(path + ": " + e.what());
  }
}

int basis_ref(const ColorAlgebra& A, const json& j) {
  if (j.is_string()) {
    int i = A.index_of(j.get<std::string>());
    if (i < 0) throw bad("unknown basis element '" + j.get<std::string>() + "'");
    return i;
  }
  int i = j.get<int>();
  if (i < 0 || i >= static_cast<int>(A.dim())) throw bad("basis index out of range");
  return i;
}

PCharacter parse_character(const ColorAlgebra& A, const json& j) {
  only_keys(j, "character", {"values", "fclasses"});
  const Field& F = A.field();
  PCharacter chi;
  if (j.contains("values"))
    for (const auto& e : j.at("values")) {
      Scalar c = scalar_from_json(F, e.at(1));
      if (c.v) chi.linear[basis_ref(A, e.at(0))] = c;
    }
  if (j.contains("fclasses"))
    for (const auto& fc : j.at("fclasses")) {
      only_keys(fc, "fclass", {"xi", "c", "s", "degree"});
      FClass c;
      c.xi = basis_ref(A, fc.at("xi"));
      c.degree = A.degree(c.xi);
      if (fc.contains("degree")) {
        const json& d = fc.at("degree");
        c.degree = group_index(A.grading().group(),
                               d.is_array() ? d.get<std::vector<int>>() : std::vector<int>{d.get<int>()});
      }
      c.c.assign(A.dim(), F.zero());
      for (const auto& e : fc.at("c")) c.c[basis_ref(A, e.at(0))] = scalar_from_json(F, e.at(1));
      c.s = fc.value("s", 0);
      chi.fclasses.push_back(std::move(c));
    }
  return chi;
}

json character_to_json(const ColorAlgebra& A, const PCharacter& chi) {
  const Field& F = A.field();
  json vals = json::array();
  for (auto [i, c] : chi.linear) vals.push_back({A.name(i), to_json(F, c)});
  json j = {{"values", vals}};
  if (!chi.fclasses.empty()) {
    json fcs = json::array();
    for (const FClass& c : chi.fclasses) {
      json cv = json::array();
      for (std::size_t i = 0; i < c.c.size(); ++i)
        if (c.c[i].v) cv.push_back({A.name(static_cast<int>(i)), to_json(F, c.c[i])});
      fcs.push_back({{"xi", A.name(c.xi)}, {"c", cv}, {"s", c.s}, {"degree", A.grading().group().element(c.degree)}});
    }
    j["fclasses"] = fcs;
  }
  return j;
}

Vec parse_weight(const ColorAlgebra& A, const json& j, Vec base) {
  const Field& F = A.field();
  if (base.empty()) base.assign(A.dim(), F.zero());
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) base[basis_ref(A, json(k))] = scalar_from_json(F, v);
  } else {
    for (const auto& e : j) base[basis_ref(A, e.at(0))] = scalar_from_json(F, e.at(1));
  }
  return base;
}

Vec parse_weight_assignment(const ColorAlgebra& A, const std::string& s, Vec base) {
  const Field& F = A.field();
  if (base.empty()) base.assign(A.dim(), F.zero());
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw bad("lambda entries look like name=value");
    int i = basis_ref(A, json(item.substr(0, eq)));
    std::string val = item.substr(eq + 1);
    json coeffs = json::array();
    std::stringstream vs(val);
    std::string c;
    while (std::getline(vs, c, ';')) {
      try {
        coeffs.push_back(std::stoll(c));
      } catch (const std::logic_error&) {
        throw bad("bad scalar '" + val + "'");
      }
    }
    base[i] = coeffs.size() == 1 ? scalar_from_json(F, coeffs[0]) : scalar_from_json(F, coeffs);
  }
  return base;
}

BaseModule parse_base_module(const ColorAlgebra& A, const json& j) {
  only_keys(j, "module", {"dim", "action", "degrees"});
  const Field& F = A.field();
  BaseModule M;
  M.dim = j.at("dim").get<std::size_t>();
  for (const auto& e : j.at("action")) {
    Matrix m = matrix_from_json(F, e.at(1));
    if (m.rows() != M.dim || m.cols() != M.dim) throw Error(Errc::DimensionMismatch, "base module matrix size");
    M.action[basis_ref(A, e.at(0))] = m;
  }
  M.degrees = j.contains("degrees") ? j.at("degrees").get<std::vector<int>>() : std::vector<int>(M.dim, 0);
  if (M.degrees.size() != M.dim) throw Error(Errc::DimensionMismatch, "one degree per base vector");
  return M;
}

}  // namespace colorlie::io
