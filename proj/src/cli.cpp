#include "folia/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "folia/germ.hpp"
#include "folia/projective.hpp"

namespace folia::cli {

namespace {

using json = nlohmann::ordered_json;

const char* status_name(int code) {
  switch (code) {
    case kOk: return "ok";
    case kInequalityFalse: return "inequality_false";
    case kInvalidInput: return "invalid_input";
    case kGenericity: return "genericity_failure";
    case kBudget: return "budget_exceeded";
  }
  return "error";
}

// A handler's answer: the exit code it chose plus the result body.
struct Outcome {
  int code = kOk;
  json body;
};

// ---- Document access ----

const json& require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw InvalidInput(std::string("input document is missing \"") + key + "\"");
  return doc.at(key);
}

std::int64_t as_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw InvalidInput(what + " must be an integer");
  return v.get<std::int64_t>();
}

// Exact rational from a JSON integer or a "p/q" string.
mpq_class as_rational(const json& v, const std::string& what) {
  if (v.is_number_integer()) return mpq_class(v.get<std::int64_t>());
  if (v.is_string()) {
    mpq_class q;
    const auto& s = v.get_ref<const std::string&>();
    if (s.empty() || q.set_str(s, 10) != 0) throw InvalidInput(what + ": cannot read \"" + s + "\" as a rational");
    if (q.get_den() == 0) throw InvalidInput(what + ": zero denominator");
    q.canonicalize();
    return q;
  }
  throw InvalidInput(what + " must be an integer or a \"p/q\" string");
}

using AnyField = std::variant<RationalField, PrimeField>;

AnyField field_from_string(const std::string& s) {
  if (s == "q" || s == "Q") return RationalField{};
  if (s.rfind("fp:", 0) == 0) {
    const std::string digits = s.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
      throw InvalidInput("bad prime in field descriptor \"" + s + "\"");
    const auto p = std::stoull(digits);
    if (p >= (1ull << 32)) throw InvalidInput("prime field modulus too large: " + digits);
    return PrimeField(std::uint32_t(p));
  }
  if (s == "fp") return PrimeField{};
  throw InvalidInput("field must be \"q\" or \"fp:P\", got \"" + s + "\"");
}

AnyField resolve_field(const JobSpec& job, const json& doc) {
  if (job.field) return field_from_string(*job.field);
  if (!doc.contains("field")) return RationalField{};
  const json& f = doc.at("field");
  if (f.is_string()) return field_from_string(f.get<std::string>());
  if (f.is_object() && f.contains("fp")) {
    auto p = as_int(f.at("fp"), "field.fp");
    if (p < 3 || p >= (std::int64_t(1) << 31)) throw InvalidInput("field.fp must be an odd prime below 2^31");
    return PrimeField(std::uint32_t(p));
  }
  throw InvalidInput("field must be \"q\" or {\"fp\": prime}");
}

std::vector<std::string> variable_names(const json& doc, std::size_t count, std::size_t first) {
  if (!doc.contains("vars")) return default_names(count, first);
  const json& v = doc.at("vars");
  if (!v.is_array() || v.size() != count)
    throw InvalidInput("\"vars\" must list exactly " + std::to_string(count) + " variable names");
  std::vector<std::string> out;
  for (const auto& s : v) {
    if (!s.is_string()) throw InvalidInput("variable names must be strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

std::size_t form_length(const json& doc) {
  const json& f = require(doc, "form");
  if (f.is_array()) return f.size();
  if (f.is_string()) {
    if (doc.contains("n")) return 0;
    if (doc.contains("vars") && doc.at("vars").is_array()) return doc.at("vars").size();
    throw InvalidInput("a form written with differentials needs \"n\" or \"vars\"");
  }
  throw InvalidInput("\"form\" must be a list of coefficient strings or a single string");
}

template <class F>
Polynomial<F> parse_at(const json& v, std::span<const std::string> names, const F& field, const std::string& where) {
  if (!v.is_string()) throw InvalidInput(where + " must be a polynomial string");
  try {
    return parse_poly(v.get<std::string>(), names, field);
  } catch (const ParseError& e) {
    throw InvalidInput(where + ": " + e.what());
  }
}

template <class F>
PolyForm<F> parse_form(const json& doc, std::span<const std::string> names, const F& field) {
  const json& f = require(doc, "form");
  if (f.is_string()) {
    try {
      return parse_one_form(f.get<std::string>(), names, field);
    } catch (const ParseError& e) {
      throw InvalidInput(std::string("form: ") + e.what());
    }
  }
  if (f.size() != names.size())
    throw InvalidInput("form has " + std::to_string(f.size()) + " coefficients, expected " +
                       std::to_string(names.size()));
  std::vector<Polynomial<F>> c;
  for (std::size_t i = 0; i < f.size(); ++i) c.push_back(parse_at(f[i], names, field, "form[" + std::to_string(i) + "]"));
  return PolyForm<F>::one_form(c);
}

template <class F>
Matrix<F> parse_matrix(const json& v, const F& field, std::size_t rows, std::size_t cols, const std::string& what) {
  auto shape = what + " must be a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix";
  if (!v.is_array() || v.size() != rows) throw InvalidInput(shape);
  Matrix<F> m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!v[i].is_array() || v[i].size() != cols) throw InvalidInput(shape);
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = field.from_rational(as_rational(v[i][j], what + "[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
  }
  return m;
}

// ---- Serialization ----

template <class F>
json matrix_json(const Matrix<F>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.field().to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json length_json(const Length& l) { return l.is_finite() ? json(l.value()) : json("inf"); }

template <class F>
json polys_json(const std::vector<Polynomial<F>>& ps, std::span<const std::string> names) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string(names));
  return out;
}

template <class F>
json certificate_json(const DegreeCertificate<F>& c) {
  json planes = json::array();
  for (const auto& t : c.trials) {
    json p;
    p["matrix"] = matrix_json(t.plane);
    p["value"] = t.value ? json(*t.value) : json(nullptr);
    p["stabilized_at"] = t.stabilized_at;
    planes.push_back(p);
  }
  json out;
  out["value"] = c.value;
  out["planes"] = planes;
  return out;
}

template <class F>
json form_json(const PolyForm<F>& w, std::span<const std::string> names) {
  json out = json::array();
  for (std::size_t i = 0; i < w.nvars(); ++i) out.push_back(w.component(i).to_string(names));
  return out;
}

// ---- Projective input ----

template <class F>
struct ProjInput {
  std::vector<std::string> names;
  ProjFoliation<F> fol;
};

template <class F>
struct ParsedForm {
  std::size_t n;
  std::vector<std::string> names;
  PolyForm<F> w;
};

template <class F>
PolyForm<F> build_generator(const json& g, std::size_t n, std::span<const std::string> names, const F& field) {
  const auto kind = require(g, "kind");
  if (!kind.is_string()) throw InvalidInput("generator.kind must be a string");
  const auto k = kind.get<std::string>();
  auto poly = [&](const char* key) { return parse_at(require(g, key), names, field, std::string("generator.") + key); };
  if (k == "rational") return generate_rational(poly("f"), poly("g")).w;
  if (k == "pencil") return generate_pencil(poly("f"), poly("g")).w;
  if (k == "logarithmic") {
    const json& ps = require(g, "polys");
    const json& ls = require(g, "lambdas");
    if (!ps.is_array() || !ls.is_array() || ps.size() != ls.size() || ps.empty())
      throw InvalidInput("generator.polys and generator.lambdas must be lists of equal length");
    std::vector<Polynomial<F>> fs;
    std::vector<typename F::Elem> lambdas;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      fs.push_back(parse_at(ps[i], names, field, "generator.polys[" + std::to_string(i) + "]"));
      lambdas.push_back(field.from_rational(as_rational(ls[i], "generator.lambdas[" + std::to_string(i) + "]")));
    }
    return generate_logarithmic(fs, lambdas).w;
  }
  if (k == "linear_pullback") {
    std::vector<std::string> y{"y0", "y1", "y2"};
    json sub;
    sub["form"] = require(g, "planar");
    auto planar = parse_form(sub, y, field);
    auto proj = parse_matrix(require(g, "projection"), field, 3, n + 1, "generator.projection");
    return generate_linear_pullback(planar, proj).w;
  }
  throw InvalidInput("unknown generator kind \"" + k + "\"");
}

template <class F>
ParsedForm<F> parse_projective(const json& doc, const F& field, json& echo) {
  std::size_t n = 0;
  if (doc.contains("n")) {
    auto v = as_int(doc.at("n"), "n");
    if (v < 2 || v > 30) throw InvalidInput("n must be between 2 and 30");
    n = std::size_t(v);
  }
  PolyForm<F> w(field, 1, 1);
  std::vector<std::string> names;
  if (doc.contains("generator")) {
    if (!doc.contains("n")) throw InvalidInput("a generator document needs \"n\"");
    names = variable_names(doc, n + 1, 0);
    w = build_generator(doc.at("generator"), n, names, field);
    echo["generator"] = doc.at("generator");
  } else {
    const std::size_t len = form_length(doc);
    if (!doc.contains("n")) {
      if (len < 3) throw InvalidInput("a projective form needs at least 3 coefficients");
      n = len - 1;
    } else if (len != 0 && len != n + 1) {
      throw InvalidInput("form has " + std::to_string(len) + " coefficients, but P^" + std::to_string(n) + " needs " +
                         std::to_string(n + 1));
    }
    names = variable_names(doc, n + 1, 0);
    w = parse_form(doc, names, field);
  }
  echo["n"] = n;
  echo["vars"] = names;
  echo["form"] = form_json(w, names);
  return {n, names, w};
}

template <class F>
ProjInput<F> projective_input(const json& doc, const F& field, json& echo) {
  auto p = parse_projective(doc, field, echo);
  return {p.names, validate(p.w, p.n)};
}

PlaneOptions plane_options(const JobSpec& job) {
  PlaneOptions o;
  o.retries = job.retries;
  o.limits = job.limits;
  return o;
}

// ---- Mode handlers ----

template <class F>
Outcome mode_check(const JobSpec&, const json& doc, const F& field, json& echo) {
  auto p = parse_projective(doc, field, echo);
  const int cd = p.w.coefficient_degree();
  auto descent = [&](int twist) {
    auto dr = descent_check(p.w, twist);
    return json{{"homogeneous", dr.homogeneous}, {"contraction", dr.contraction}, {"lie", dr.lie},
                {"diagnostic", dr.diagnostic()}};
  };
  try {
    auto fol = validate(p.w, p.n);
    json r;
    r["n"] = fol.n;
    r["d"] = fol.d;
    r["twist"] = fol.d + 2;
    r["descent"] = descent(int(fol.d) + 2);
    r["integrable"] = true;
    return {kOk, r};
  } catch (const ValidationError& e) {
    json err;
    err["type"] = "invalid_input";
    err["kind"] = to_string(e.kind());
    err["message"] = e.what();
    if (cd >= 1) err["descent"] = descent(cd + 1);
    return {kInvalidInput, err};
  }
}

template <class F>
Outcome mode_singular(const JobSpec& job, const json& doc, const F& field, json& echo) {
  auto in = projective_input(doc, field, echo);
  auto s = singular_ideal(in.fol, job.limits);
  json r;
  r["n"] = in.fol.n;
  r["d"] = in.fol.d;
  r["generators"] = polys_json(s.ideal.generators(), in.names);
  r["groebner_basis"] = polys_json(s.ideal.groebner(job.limits).polys(), in.names);
  r["projective_dimension"] = s.projective_dimension;
  return {kOk, r};
}

template <class F>
Outcome mode_degz2(const JobSpec& job, const json& doc, const F& field, json& echo) {
  auto in = projective_input(doc, field, echo);
  auto c = deg_z2(in.fol, Rng(job.seed), plane_options(job));
  const std::int64_t d = in.fol.d, z = std::int64_t(c.value);
  json r;
  r["n"] = in.fol.n;
  r["d"] = in.fol.d;
  r["deg_z2"] = c.value;
  r["lower"] = d + 1;
  r["upper"] = d * d + d + 1;
  r["thmB_lower"] = d + 1 <= z;
  r["thmB_upper"] = z <= d * d + d + 1;
  r["certificate"] = certificate_json(c);
  return {r["thmB_lower"].get<bool>() && r["thmB_upper"].get<bool>() ? kOk : kInequalityFalse, r};
}

template <class F>
Outcome mode_delta(const JobSpec& job, const json& doc, const F& field, json& echo) {
  auto in = projective_input(doc, field, echo);
  auto c = delta_global(in.fol, Rng(job.seed), plane_options(job));
  const std::int64_t d = in.fol.d;
  json r;
  r["n"] = in.fol.n;
  r["d"] = in.fol.d;
  r["delta"] = c.delta.value;
  r["mu_plane"] = c.mu_plane;
  r["delta_bound"] = std::int64_t(c.delta.value) <= d * d;
  r["certificate"] = certificate_json(c.delta);
  return {r["delta_bound"].get<bool>() ? kOk : kInequalityFalse, r};
}

template <class F>
Outcome mode_bounds(const JobSpec& job, const json& doc, const F& field, json& echo) {
  auto in = projective_input(doc, field, echo);
  auto b = verify_bounds(in.fol, Rng(job.seed), plane_options(job));
  json r;
  r["n"] = b.n;
  r["d"] = b.d;
  r["deg_z2"] = b.chern.deg_z2;
  r["delta"] = b.chern.delta_global;
  r["mu_plane"] = b.mu_plane;
  r["c1_tf"] = b.chern.c1_tf;
  r["c2_tf"] = b.chern.c2_tf;
  r["discriminant"] = b.chern.discriminant;
  r["floor_p"] = b.floor_p;
  r["flags"] = {{"thmB_lower", b.thmB_lower}, {"thmB_upper", b.thmB_upper},   {"eq5", b.eq5},
                {"eq6", b.eq6},               {"thmA_lower", b.thmA_lower},   {"thmA_upper", b.thmA_upper},
                {"delta_bound", b.delta_bound}, {"sandwich", b.sandwich}};
  r["failures"] = b.failures();
  r["pass"] = b.pass();
  r["certificates"] = {{"deg_z2", certificate_json(b.degz2_cert)}, {"delta", certificate_json(b.delta_cert)}};
  return {b.pass() ? kOk : kInequalityFalse, r};
}

template <class F>
Outcome mode_witness(const JobSpec& job, const json& doc, const F& field, json& echo) {
  auto in = projective_input(doc, field, echo);
  const Rng rng(job.seed);
  auto z = deg_z2(in.fol, rng, plane_options(job));
  auto w = first_integral_witness(in.fol, rng, plane_options(job));
  const bool extremal = z.value == in.fol.d + 1;
  std::vector<std::string> y{"y0", "y1", "y2"};
  json r;
  r["n"] = in.fol.n;
  r["d"] = in.fol.d;
  r["deg_z2"] = z.value;
  r["extremal"] = extremal;
  r["plane"] = matrix_json(w.plane);
  r["radial_identity"] = w.radial_identity;
  if (w.witness) {
    json c = json::array();
    for (const auto& a : w.witness->coefficients) c.push_back(field.to_string(a));
    r["witness"] = {{"coefficients", c}, {"e", w.witness->e.to_string(y)}, {"wedge_certified", w.witness->wedge_certified}};
  } else {
    r["witness"] = nullptr;
  }
  r["deg_z2_certificate"] = certificate_json(z);
  const bool ok = !extremal || (w.witness && w.witness->wedge_certified);
  return {ok ? kOk : kInequalityFalse, r};
}

template <class F>
json key_lemma_json(const KeyLemmaReport& k, const Matrix<F>& plane, bool given) {
  json r;
  r["plane"] = matrix_json(plane);
  r["plane_source"] = given ? "input" : "random";
  r["mu"] = length_json(k.mu);
  r["izs"] = length_json(k.izs);
  r["delta"] = length_json(k.delta);
  r["pass"] = k.pass;
  return r;
}

template <class F>
Outcome mode_germ(const JobSpec& job, const json& doc, const F& field, json& echo) {
  std::size_t n = 0;
  if (doc.contains("n")) {
    auto v = as_int(doc.at("n"), "n");
    if (v < 2 || v > 30) throw InvalidInput("germ dimension n must be between 2 and 30");
    n = std::size_t(v);
  }
  const std::size_t len = form_length(doc);
  if (n == 0) n = len;
  if (len != 0 && len != n)
    throw InvalidInput("form has " + std::to_string(len) + " coefficients, expected " + std::to_string(n));
  if (n < 2) throw InvalidInput("a germ needs at least 2 variables");
  auto names = variable_names(doc, n, 1);
  auto w = parse_form(doc, names, field);
  echo["n"] = n;
  echo["vars"] = names;
  echo["form"] = form_json(w, names);

  json r;
  int code = kOk;
  r["n"] = n;
  r["singular"] = detail::vanishes_at_origin(w);
  if (n == 2) {
    auto g = germ_invariants(w, job.limits);
    r["mu"] = length_json(g.mu);
    r["delta"] = length_json(g.delta);
    r["unfolding"] = length_json(g.unfolding_length);
    r["kupka"] = g.kupka;
    if (g.singular && g.mu.is_finite()) {
      const bool eq = g.unfolding_length == g.delta;
      const bool le = g.delta <= g.mu;
      r["identities"] = {{"unfolding_equals_delta", eq}, {"delta_le_mu", le}};
      if (!eq || !le) code = kInequalityFalse;
    }
  } else if (r["singular"].get<bool>()) {
    r["kupka"] = is_kupka(w);
  }
  const bool want_plane = doc.contains("plane") || n >= 3;
  if (want_plane && r["singular"].get<bool>()) {
    r["integrable"] = is_integrable(w);
    if (!r["integrable"].get<bool>()) throw InvalidInput("the key lemma needs an integrable form (w ∧ dw != 0)");
    if (doc.contains("plane")) {
      auto plane = parse_matrix(doc.at("plane"), field, n, 2, "plane");
      echo["plane"] = matrix_json(plane);
      auto k = key_lemma_check(w, plane, job.limits);
      r["key_lemma"] = key_lemma_json(k, plane, true);
      if (!k.pass) code = kInequalityFalse;
    } else {
      // Same substreams as key_lemma_random, kept here to report the plane.
      const Rng rng(job.seed);
      bool done = false;
      for (unsigned attempt = 0; attempt < job.retries && !done; ++attempt) {
        Rng stream = rng.substream("plane", attempt);
        auto plane = random_plane(field, n, stream);
        try {
          auto k = key_lemma_check(w, plane, job.limits);
          r["key_lemma"] = key_lemma_json(k, plane, false);
          if (!k.pass) code = kInequalityFalse;
          done = true;
        } catch (const GenericityError&) {
        }
      }
      if (!done) throw GenericityError("no transverse plane found after " + std::to_string(job.retries) + " attempts");
    }
  }
  return {code, r};
}

Outcome mode_thma(const JobSpec&, const json& doc, json& echo) {
  const json& t = require(doc, "thma");
  if (!t.is_object()) throw InvalidInput("\"thma\" must be an object");
  ThmANumbers in;
  in.n = as_int(require(t, "n"), "thma.n");
  auto q = [&](const char* key) { return as_rational(require(t, key), std::string("thma.") + key); };
  in.hn = q("hn");
  in.kh = q("kh");
  in.nh = q("nh");
  in.c2h = q("c2h");
  in.delta = q("delta");
  if (t.contains("c1sq") != t.contains("kn_square"))
    throw InvalidInput("thma.c1sq and thma.kn_square must be given together");
  if (t.contains("c1sq")) {
    in.c1sq = q("c1sq");
    in.kn_square = q("kn_square");
  }
  json e;
  e["n"] = in.n;
  e["hn"] = in.hn.get_str();
  e["kh"] = in.kh.get_str();
  e["nh"] = in.nh.get_str();
  e["c2h"] = in.c2h.get_str();
  e["delta"] = in.delta.get_str();
  if (in.c1sq) {
    e["c1sq"] = in.c1sq->get_str();
    e["kn_square"] = in.kn_square->get_str();
  }
  echo["thma"] = e;
  auto rep = theorem_a_report(in);
  json r;
  r["p"] = rep.p.get_str();
  r["degenerate"] = rep.degenerate;
  r["lower"] = rep.lower;
  r["upper"] = rep.upper;
  r["squeezed"] = rep.squeezed;
  if (rep.squeezed) r["forced_equality"] = rep.lower && rep.upper;
  if (rep.discriminant) {
    r["discriminant"] = rep.discriminant->get_str();
    r["discriminant_bound"] = *rep.discriminant_bound;
  }
  r["pass"] = rep.pass();
  return {rep.pass() ? kOk : kInequalityFalse, r};
}

template <class F>
Outcome dispatch(const JobSpec& job, const json& doc, const F& field, json& echo) {
  const auto& m = job.mode;
  if (m == "check") return mode_check(job, doc, field, echo);
  if (m == "singular") return mode_singular(job, doc, field, echo);
  if (m == "degz2") return mode_degz2(job, doc, field, echo);
  if (m == "delta") return mode_delta(job, doc, field, echo);
  if (m == "bounds") return mode_bounds(job, doc, field, echo);
  if (m == "witness") return mode_witness(job, doc, field, echo);
  if (m == "germ") return mode_germ(job, doc, field, echo);
  throw InvalidInput("unknown mode \"" + m + "\"");
}

// ---- Text rendering ----

void flatten(const json& v, const std::string& path, std::ostringstream& out) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(x, path.empty() ? k : path + "." + k, out);
  } else if (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array())) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", out);
  } else if (v.is_array()) {
    out << path << ":";
    for (const auto& x : v) out << " " << (x.is_string() ? x.get<std::string>() : x.dump());
    out << "\n";
  } else {
    out << path << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

}  // namespace

const std::vector<std::string>& modes() {
  static const std::vector<std::string> m{"check", "singular", "degz2", "delta", "bounds", "germ", "witness", "thma"};
  return m;
}

namespace {

// `load_error` set means the document could not be read at all.
RunResult execute(const JobSpec& job, std::string_view document, const std::string& load_error) {
  const auto start = std::chrono::steady_clock::now();
  json report;
  report["tool"] = "foliation-lab";
  report["mode"] = job.mode;
  json echo = json::object();
  Outcome out;
  std::string field_desc = job.field.value_or("");
  try {
    if (!load_error.empty()) throw InvalidInput(load_error);
    json doc;
    try {
      doc = json::parse(document);
    } catch (const json::parse_error& e) {
      throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InvalidInput("input document must be a JSON object");
    if (job.mode == "thma") {
      field_desc = "q";
      out = mode_thma(job, doc, echo);
    } else {
      auto field = resolve_field(job, doc);
      out = std::visit(
          [&](const auto& f) {
            field_desc = f.descriptor();
            echo["field"] = field_desc;
            return dispatch(job, doc, f, echo);
          },
          field);
    }
  } catch (const InvalidInput& e) {
    out = {kInvalidInput, {{"type", "invalid_input"}, {"message", e.what()}}};
  } catch (const GenericityError& e) {
    out = {kGenericity, {{"type", "genericity_failure"}, {"message", e.what()}}};
  } catch (const BudgetExceeded& e) {
    out = {kBudget, {{"type", "budget_exceeded"}, {"message", e.what()}}};
  } catch (const std::exception& e) {
    out = {kInvalidInput, {{"type", "invalid_input"}, {"message", e.what()}}};
  }

  report["status"] = status_name(out.code);
  report["exit_code"] = out.code;
  report["input"] = echo;
  report["options"] = {{"field", field_desc.empty() ? json(nullptr) : json(field_desc)},
                       {"seed", job.seed},
                       {"retries", job.retries},
                       {"max_pairs", job.limits.max_pairs},
                       {"max_degree", job.limits.max_degree},
                       {"local_cap", job.limits.local_cap}};
  const bool failed = out.code == kInvalidInput || out.code == kGenericity || out.code == kBudget;
  report[failed ? "error" : "result"] = out.body;
  if (job.timing) {
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    report["timing"] = {{"elapsed_us", us.count()}};
  }

  RunResult rr;
  rr.exit_code = out.code;
  if (job.json) {
    rr.output = report.dump(2) + "\n";
  } else {
    std::ostringstream s;
    flatten(report, "", s);
    rr.output = s.str();
  }
  return rr;
}

}  // namespace

RunResult run_document(const JobSpec& job, std::string_view document) { return execute(job, document, ""); }

RunResult run(const JobSpec& job) {
  std::ostringstream s;
  if (job.input_path == "-") {
    s << std::cin.rdbuf();
  } else {
    std::ifstream in(job.input_path, std::ios::binary);
    if (!in) return execute(job, "", "cannot open input file " + job.input_path);
    s << in.rdbuf();
  }
  return execute(job, s.str(), "");
}

std::optional<JobSpec> parse_args(int argc, const char* const* argv, std::string& message, int& exit_code) {
  JobSpec job;
  CLI::App app{"Singularity invariants and bound checks for codimension-one foliations", "foliation-lab"};
  std::string field;
  bool as_text = false, as_json = false, no_timing = false;
  app.add_option("mode", job.mode, "check | singular | degz2 | delta | bounds | germ | witness | thma")
      ->required()
      ->check(CLI::IsMember(modes()));
  app.add_option("input", job.input_path, "input JSON document, or - for stdin")->required();
  app.add_option("--field", field, "coefficient field: q or fp:P (overrides the document)");
  app.add_option("--seed", job.seed, "seed for every random choice")->capture_default_str();
  app.add_flag("--json", as_json, "JSON report (default)");
  app.add_flag("--text", as_text, "flat key: value report");
  app.add_option("--retries", job.retries, "extra random planes before a genericity failure")->capture_default_str();
  app.add_option("--max-pairs", job.limits.max_pairs, "S-pair budget per Groebner basis")->capture_default_str();
  app.add_option("--max-degree", job.limits.max_degree, "degree budget per Groebner basis")->capture_default_str();
  app.add_option("--local-cap", job.limits.local_cap, "largest power of the maximal ideal for local lengths")
      ->capture_default_str();
  app.add_flag("--no-timing", no_timing, "omit the timing block");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    message = app.help();
    exit_code = kOk;
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    message = std::string(e.what()) + "\n" + app.help();
    exit_code = kInvalidInput;
    return std::nullopt;
  }
  if (as_text && as_json) {
    message = "--json and --text are exclusive\n";
    exit_code = kInvalidInput;
    return std::nullopt;
  }
  if (!field.empty()) job.field = field;
  job.json = !as_text;
  job.timing = !no_timing;
  return job;
}

}  // namespace folia::cli
