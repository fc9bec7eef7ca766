#include "colorlie/cli/json_io.hpp"

#include <sstream>

#include "colorlie/core/error.hpp"

namespace colorlie::io {

namespace {

Error bad_input(const std::string& what) { return Error(Errc::InvalidInput, what); }

}  // namespace

json to_json(const Field& F, Scalar a) { return F.coeffs(a); }

Scalar scalar_from_json(const Field& F, const json& j) {
  if (j.is_number_integer()) return F.from_int(j.get<long long>());
  if (!j.is_array() || j.size() != static_cast<std::size_t>(F.k()))
    throw bad_input("scalar must be a list of " + std::to_string(F.k()) + " coefficients");
  std::vector<int> c;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw bad_input("scalar coefficients must be integers");
    long long v = x.get<long long>() % F.p();
    c.push_back(static_cast<int>(v < 0 ? v + F.p() : v));
  }
  return F.from_coeffs(c);
}

std::string scalar_cell(const Field& F, Scalar a) {
  std::string s;
  for (int c : F.coeffs(a)) s += (s.empty() ? "" : ";") + std::to_string(c);
  return s;
}

json to_json(const Field& F, const Vec& v) {
  json j = json::array();
  for (Scalar a : v) j.push_back(to_json(F, a));
  return j;
}

Vec vec_from_json(const Field& F, const json& j) {
  if (!j.is_array()) throw bad_input("expected a list of scalars");
  Vec v;
  for (const auto& x : j) v.push_back(scalar_from_json(F, x));
  return v;
}

json to_json(const Field& F, const Matrix& m) {
  json j = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(F, m(i, c)));
    j.push_back(row);
  }
  return j;
}

Matrix matrix_from_json(const Field& F, const json& j) {
  if (!j.is_array()) throw bad_input("expected a matrix");
  const std::size_t r = j.size(), c = r ? j[0].size() : 0;
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!j[i].is_array() || j[i].size() != c) throw bad_input("ragged matrix");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = scalar_from_json(F, j[i][k]);
  }
  return m;
}

json to_json(const Envelope& E, const NormalElement& u) {
  json j = json::array();
  for (const auto& [m, c] : u.terms) j.push_back({exponents(m), to_json(E.field(), c)});
  return j;
}

NormalElement element_from_json(const Envelope& E, const json& j) {
  if (!j.is_array()) throw bad_input("element must be a list of [exponents, scalar]");
  NormalElement u = E.zero();
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw bad_input("element term must be [exponents, scalar]");
    auto ex = t[0].get<std::vector<int>>();
    if (ex.size() != E.dim()) throw Error(Errc::DimensionMismatch, "exponent vector length");
    NormalElement w = E.one();
    for (std::size_t i = 0; i < ex.size(); ++i) {
      if (ex[i] < 0) throw bad_input("negative exponent");
      if (ex[i]) w = E.product(w, E.power(E.generator(static_cast<int>(i)), ex[i]));
    }
    u = E.add(u, E.scale(scalar_from_json(E.field(), t[1]), w));
  }
  return u;
}

json module_dump(const Field& F, const GradedModule& M) {
  json j;
  j["dim"] = M.dim;
  j["basis"] = M.labels;
  json act = json::array();
  for (std::size_t x = 0; x < M.action.size(); ++x) act.push_back({x, to_json(F, M.action[x])});
  j["action"] = act;
  json w = json::array();
  for (const Vec& v : M.weights) w.push_back(to_json(F, v));
  j["weights"] = w;
  j["heights"] = M.heights;
  j["degrees"] = M.degrees;
  return j;
}

GradedModule module_from_json(const Field& F, const json& j) {
  GradedModule M;
  M.dim = j.at("dim").get<std::size_t>();
  M.labels = j.at("basis").get<std::vector<std::string>>();
  for (const auto& e : j.at("action")) {
    std::size_t x = e.at(0).get<std::size_t>();
    if (M.action.size() <= x) M.action.resize(x + 1, Matrix(M.dim, M.dim));
    M.action[x] = matrix_from_json(F, e.at(1));
  }
  for (const auto& w : j.at("weights")) M.weights.push_back(vec_from_json(F, w));
  M.heights = j.at("heights").get<std::vector<int>>();
  if (j.contains("degrees")) M.degrees = j.at("degrees").get<std::vector<int>>();
  return M;
}

bool same_module(const GradedModule& a, const GradedModule& b) {
  return a.dim == b.dim && a.labels == b.labels && a.action == b.action && a.weights == b.weights &&
         a.heights == b.heights && a.degrees == b.degrees;
}

json to_json(const ColorAlgebra& A, const FPTriple& t) {
  const TriangularData& T = root_datum(A);
  json j;
  json levi = json::array(), deltas = json::array(), certs = json::array();
  for (int s : t.levi) levi.push_back(root_name(T, s));
  for (int s : t.deltas) deltas.push_back(root_name(T, s));
  for (const auto& c : t.certificates)
    certs.push_back({{"delta", root_name(T, c.delta)},
                     {"positive_system", c.positive_system},
                     {"simple", c.simple},
                     {"additive", c.additive},
                     {"normalized", c.normalized}});
  j["levi"] = levi;
  j["deltas"] = deltas;
  j["certificates"] = certs;
  return j;
}

json to_json(const Field& F, const SimplicityVerdict& v) {
  json j;
  j["simple"] = v.simple;
  j["randomized"] = v.randomized;
  j["samples"] = v.samples;
  j["lines_checked"] = v.lines_checked;
  j["witness"] = v.witness ? to_json(F, *v.witness) : json(nullptr);
  j["witness_span"] = v.witness_span;
  return j;
}

namespace {

std::string oracle_word(const SweepRow& r) {
  if (!r.oracle) return "skipped";
  return r.oracle->simple ? "simple" : "not-simple";
}

}  // namespace

json to_json(const ColorAlgebra& A, const SweepReport& r) {
  const Field& F = A.field();
  const TriangularData& T = root_datum(A);
  json rows = json::array();
  for (const SweepRow& row : r.rows) {
    json lam = json::object();
    for (int h : T.cartan) lam[A.name(h)] = to_json(F, row.lambda[h]);
    json j;
    j["lambda"] = lam;
    j["f_closed"] = row.f_closed ? to_json(F, *row.f_closed) : json(nullptr);
    j["f_hc"] = to_json(F, row.f_hc);
    j["oracle"] = oracle_word(row);
    j["randomized"] = row.oracle ? row.oracle->randomized : false;
    j["agree"] = row.agree;
    j["seconds"] = row.seconds;
    rows.push_back(j);
  }
  return {{"rows", rows}, {"summary", {{"rows", r.rows.size()}, {"simple", r.simple}, {"agree", r.agreeing}}}};
}

SweepReport sweep_from_json(const ColorAlgebra& A, const json& j) {
  const Field& F = A.field();
  SweepReport r;
  for (const auto& row : j.at("rows")) {
    SweepRow s;
    s.lambda.assign(A.dim(), F.zero());
    for (const auto& [name, val] : row.at("lambda").items()) s.lambda[A.index_of(name)] = scalar_from_json(F, val);
    if (!row.at("f_closed").is_null()) s.f_closed = scalar_from_json(F, row.at("f_closed"));
    s.f_hc = scalar_from_json(F, row.at("f_hc"));
    std::string o = row.at("oracle").get<std::string>();
    if (o != "skipped") {
      SimplicityVerdict v;
      v.simple = o == "simple";
      v.randomized = row.value("randomized", false);
      s.oracle = v;
    }
    s.agree = row.at("agree").get<bool>();
    s.seconds = row.value("seconds", 0.0);
    r.rows.push_back(std::move(s));
  }
  r.simple = j.at("summary").at("simple").get<std::size_t>();
  r.agreeing = j.at("summary").at("agree").get<std::size_t>();
  return r;
}

bool same_sweep(const SweepReport& a, const SweepReport& b) {
  if (a.rows.size() != b.rows.size() || a.simple != b.simple || a.agreeing != b.agreeing) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const SweepRow &x = a.rows[i], &y = b.rows[i];
    if (x.lambda != y.lambda || x.f_closed != y.f_closed || x.f_hc != y.f_hc || x.agree != y.agree) return false;
    if (x.oracle.has_value() != y.oracle.has_value()) return false;
    if (x.oracle && (x.oracle->simple != y.oracle->simple || x.oracle->randomized != y.oracle->randomized))
      return false;
  }
  return true;
}

std::string sweep_csv(const ColorAlgebra& A, const SweepReport& r) {
  const Field& F = A.field();
  const TriangularData& T = root_datum(A);
  std::ostringstream os;
  for (int h : T.cartan) os << "lambda_" << A.name(h) << ',';
  os << "f_closed,f_hc,oracle,agree\n";
  for (const SweepRow& row : r.rows) {
    for (int h : T.cartan) os << scalar_cell(F, row.lambda[h]) << ',';
    os << (row.f_closed ? scalar_cell(F, *row.f_closed) : "NA") << ',' << scalar_cell(F, row.f_hc) << ','
       << oracle_word(row) << ',' << (row.agree ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace colorlie::io
