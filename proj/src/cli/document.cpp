#include "vitushkin/cli/document.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include <json.hpp>

#include "vitushkin/errors.hpp"

namespace vitushkin::cli {

using nlohmann::json;

namespace {

const std::set<std::string>& known_fields() {
  static const std::set<std::string> fields{
      "class",    "n",          "degree",      "degrees",   "terms",           "newton",
      "rho",      "epsilons",   "samples_per_axis", "sections", "mu",          "orthant_clip",
      "frequencies", "degree_sums", "cube_side", "m",        "lambda_hat",      "real",
      "interval_length", "origin", "chat_override"};
  return fields;
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError("field '" + path + "': " + what);
}

Rational read_rational(const json& j, const std::string& path) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number()) return parse_rational(j.dump());
  } catch (const InputError& e) {
    fail(path, e.what());
  }
  fail(path, "expected a number or a rational string");
}

double read_double(const json& j, const std::string& path) {
  if (j.is_number()) {
    double v = j.get<double>();
    if (!std::isfinite(v)) fail(path, "non-finite number");
    return v;
  }
  return to_double(read_rational(j, path));
}

long long read_integer(const json& j, const std::string& path, long long lo, long long hi) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  long long v = j.get<long long>();
  if (v < lo || v > hi) fail(path, "value " + std::to_string(v) + " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

unsigned read_unsigned(const json& j, const std::string& path, unsigned lo = 0) {
  return static_cast<unsigned>(read_integer(j, path, lo, std::numeric_limits<int>::max()));
}

const json& require_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::complex<double> read_complex(const json& j, const std::string& path) {
  if (j.is_array()) {
    if (j.size() != 2) fail(path, "complex numbers are [re, im]");
    return {read_double(j[0], path + "[0]"), read_double(j[1], path + "[1]")};
  }
  return {read_double(j, path), 0.0};
}

std::vector<double> read_vector(const json& j, const std::string& path, std::size_t n) {
  require_array(j, path);
  if (j.size() != n) fail(path, "expected " + std::to_string(n) + " entries");
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(read_double(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

MonomialSum read_monomials(const json& j, const std::string& path, std::size_t n) {
  require_array(j, path);
  std::vector<Monomial> terms;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    const json& t = j[i];
    if (!t.is_object()) fail(p, "expected {\"coeff\": ..., \"exp\": [...]}");
    for (auto it = t.begin(); it != t.end(); ++it) {
      if (it.key() != "coeff" && it.key() != "exp") fail(p + "." + it.key(), "unknown field");
    }
    if (!t.contains("coeff") || !t.contains("exp")) fail(p, "monomials need coeff and exp");
    Monomial m;
    m.coeff = read_rational(t["coeff"], p + ".coeff");
    require_array(t["exp"], p + ".exp");
    if (t["exp"].size() != n) fail(p + ".exp", "expected " + std::to_string(n) + " exponents");
    for (std::size_t k = 0; k < n; ++k) {
      m.exps.push_back(static_cast<std::int32_t>(
          read_integer(t["exp"][k], p + ".exp[" + std::to_string(k) + "]", -1000, 1000)));
    }
    terms.push_back(std::move(m));
  }
  return MonomialSum(n, std::move(terms));
}

FunctionClass read_class(const json& j) {
  if (!j.is_string()) fail("class", "expected a string");
  const auto s = j.get<std::string>();
  for (auto c : {FunctionClass::Polynomial, FunctionClass::MultiDegree, FunctionClass::Laurent, FunctionClass::QuasiPoly,
                 FunctionClass::ExpoPoly, FunctionClass::Semialgebraic}) {
    if (class_name(c) == s) return c;
  }
  fail("class", "unknown class '" + s + "'");
}

json rational_json(const Rational& q) { return to_string(q); }

json monomials_json(const MonomialSum& p) {
  json arr = json::array();
  for (const auto& t : p.terms()) arr.push_back({{"coeff", rational_json(t.coeff)}, {"exp", t.exps}});
  return arr;
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

BoundPair read_bound_pair(const json& j, const std::string& path) {
  BoundPair b;
  if (j.is_object()) {
    if (!j.contains("paper") || !j.contains("safe")) fail(path, "expected {\"paper\": ..., \"safe\": ...}");
    b.paper_bound = read_rational(j["paper"], path + ".paper");
    b.safe_bound = read_rational(j["safe"], path + ".safe");
  } else {
    b.paper_bound = read_rational(j, path);
    b.safe_bound = b.paper_bound;
  }
  if (b.paper_bound < 0 || b.safe_bound < 0) fail(path, "section constants must be nonnegative");
  return b;
}

}  // namespace

std::string_view class_name(FunctionClass c) {
  switch (c) {
    case FunctionClass::Polynomial:
      return "polynomial";
    case FunctionClass::MultiDegree:
      return "multidegree";
    case FunctionClass::Laurent:
      return "laurent";
    case FunctionClass::QuasiPoly:
      return "quasipoly";
    case FunctionClass::ExpoPoly:
      return "expopoly";
    case FunctionClass::Semialgebraic:
      return "semialgebraic";
  }
  return "";
}

ProblemDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw InputError("document must be a JSON object");
  for (auto it = root.begin(); it != root.end(); ++it) {
    if (!known_fields().count(it.key())) fail(it.key(), "unknown field");
  }
  if (!root.contains("class")) fail("class", "missing");

  ProblemDocument doc;
  doc.cls = read_class(root["class"]);
  const bool is_expo = doc.cls == FunctionClass::ExpoPoly;
  if (root.contains("n")) {
    doc.n = static_cast<std::size_t>(read_integer(root["n"], "n", 1, static_cast<long long>(kMaxDimension)));
  } else if (!is_expo) {
    fail("n", "missing");
  }
  if (is_expo && doc.n != 1) fail("n", "exponential polynomials are univariate (n must be 1)");
  const std::size_t n = doc.n;

  if (root.contains("degree")) doc.degree = read_unsigned(root["degree"], "degree", 1);

  if (root.contains("degrees")) {
    const json& d = require_array(root["degrees"], "degrees");
    if (doc.cls == FunctionClass::Semialgebraic) {
      for (std::size_t i = 0; i < d.size(); ++i) {
        const std::string p = "degrees[" + std::to_string(i) + "]";
        require_array(d[i], p);
        if (d[i].empty()) fail(p, "every union member needs at least one inequality");
        std::vector<unsigned> row;
        for (std::size_t k = 0; k < d[i].size(); ++k) row.push_back(read_unsigned(d[i][k], p + "[" + std::to_string(k) + "]", 1));
        doc.ineq_degrees.push_back(std::move(row));
      }
    } else if (doc.cls == FunctionClass::QuasiPoly) {
      for (std::size_t i = 0; i < d.size(); ++i) doc.term_degrees.push_back(read_unsigned(d[i], "degrees[" + std::to_string(i) + "]"));
    } else {
      fail("degrees", "only used by the quasipoly and semialgebraic classes");
    }
  }

  if (root.contains("frequencies")) {
    const json& f = require_array(root["frequencies"], "frequencies");
    for (std::size_t i = 0; i < f.size(); ++i) doc.frequencies.push_back(read_vector(f[i], "frequencies[" + std::to_string(i) + "]", n));
  }
  if (root.contains("degree_sums")) {
    const json& f = require_array(root["degree_sums"], "degree_sums");
    for (std::size_t i = 0; i < f.size(); ++i) doc.degree_sums.push_back(read_unsigned(f[i], "degree_sums[" + std::to_string(i) + "]"));
  }
  if (root.contains("m")) doc.m = read_unsigned(root["m"], "m");
  if (root.contains("lambda_hat")) {
    doc.lambda_hat = read_double(root["lambda_hat"], "lambda_hat");
    if (*doc.lambda_hat < 0) fail("lambda_hat", "must be nonnegative");
  }
  if (root.contains("real")) {
    if (!root["real"].is_boolean()) fail("real", "expected true or false");
    doc.real = root["real"].get<bool>();
  }
  if (root.contains("cube_side")) {
    doc.cube_side = read_rational(root["cube_side"], "cube_side");
    if (doc.cube_side < 0) fail("cube_side", "must be nonnegative");
  }
  if (root.contains("interval_length")) {
    doc.interval_length = read_rational(root["interval_length"], "interval_length");
    if (doc.interval_length <= 0) fail("interval_length", "must be positive");
  }

  if (root.contains("terms")) {
    const json& t = root["terms"];
    switch (doc.cls) {
      case FunctionClass::Polynomial:
      case FunctionClass::MultiDegree:
      case FunctionClass::Laurent:
        doc.poly = read_monomials(t, "terms", n);
        if (doc.cls != FunctionClass::Laurent && doc.poly->has_negative_exponents()) {
          fail("terms", "negative exponents need class \"laurent\"");
        }
        break;
      case FunctionClass::QuasiPoly: {
        require_array(t, "terms");
        std::vector<QuasiTerm> terms;
        for (std::size_t i = 0; i < t.size(); ++i) {
          const std::string p = "terms[" + std::to_string(i) + "]";
          if (!t[i].is_object() || !t[i].contains("poly")) fail(p, "expected {\"poly\": [...], \"a\": [...], \"b\": [...]}");
          QuasiTerm q;
          q.poly = read_monomials(t[i]["poly"], p + ".poly", n);
          q.a = t[i].contains("a") ? read_vector(t[i]["a"], p + ".a", n) : std::vector<double>(n, 0.0);
          q.b = t[i].contains("b") ? read_vector(t[i]["b"], p + ".b", n) : std::vector<double>(n, 0.0);
          terms.push_back(std::move(q));
        }
        try {
          doc.quasi = QuasiPoly(n, std::move(terms));
        } catch (const InputError& e) {
          fail("terms", e.what());
        }
        break;
      }
      case FunctionClass::ExpoPoly: {
        require_array(t, "terms");
        std::vector<ExpoTerm> terms;
        for (std::size_t i = 0; i < t.size(); ++i) {
          const std::string p = "terms[" + std::to_string(i) + "]";
          if (!t[i].is_object() || !t[i].contains("c") || !t[i].contains("lambda")) {
            fail(p, "expected {\"c\": ..., \"lambda\": ...}");
          }
          terms.push_back({read_complex(t[i]["c"], p + ".c"), read_complex(t[i]["lambda"], p + ".lambda")});
        }
        if (terms.empty()) fail("terms", "exponential polynomial needs at least one term");
        doc.expo = ExpoPoly(std::move(terms));
        break;
      }
      case FunctionClass::Semialgebraic:
        fail("terms", "semialgebraic documents are described by their degree matrix only");
    }
  }

  if (root.contains("newton")) {
    const json& nv = require_array(root["newton"], "newton");
    for (std::size_t i = 0; i < nv.size(); ++i) {
      const std::string p = "newton[" + std::to_string(i) + "]";
      require_array(nv[i], p);
      if (nv[i].size() != n) fail(p, "expected " + std::to_string(n) + " coordinates");
      LatticePoint pt;
      for (std::size_t k = 0; k < n; ++k) pt.coords.push_back(read_integer(nv[i][k], p + "[" + std::to_string(k) + "]", -1000000, 1000000));
      doc.newton.push_back(std::move(pt));
    }
  }

  if (root.contains("rho")) doc.rho = read_rational(root["rho"], "rho");
  if (root.contains("epsilons")) {
    const json& e = require_array(root["epsilons"], "epsilons");
    for (std::size_t i = 0; i < e.size(); ++i) {
      const std::string p = "epsilons[" + std::to_string(i) + "]";
      Rational eps = read_rational(e[i], p);
      try {
        cells_for_epsilon(eps);
      } catch (const InputError& err) {
        fail(p, err.what());
      }
      doc.epsilons.push_back(eps);
    }
  }
  if (root.contains("samples_per_axis")) {
    doc.samples_per_axis = read_unsigned(root["samples_per_axis"], "samples_per_axis", 1);
  }
  if (root.contains("sections")) {
    const json& s = require_array(root["sections"], "sections");
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::string p = "sections[" + std::to_string(i) + "]";
      if (!s[i].is_object()) fail(p, "expected an object");
      SectionRequest req;
      req.spec.n = n;
      for (auto it = s[i].begin(); it != s[i].end(); ++it) {
        if (it.key() != "fixed" && it.key() != "mode" && it.key() != "resolution") fail(p + "." + it.key(), "unknown field");
      }
      if (s[i].contains("fixed")) {
        const json& f = require_array(s[i]["fixed"], p + ".fixed");
        for (std::size_t k = 0; k < f.size(); ++k) {
          const std::string fp = p + ".fixed[" + std::to_string(k) + "]";
          if (!f[k].is_array() || f[k].size() != 2) fail(fp, "expected [axis, value] with a 1-based axis");
          auto axis = static_cast<std::size_t>(read_integer(f[k][0], fp + "[0]", 1, static_cast<long long>(n)));
          req.spec.fixed.emplace_back(axis - 1, read_rational(f[k][1], fp + "[1]"));
        }
      }
      if (s[i].contains("mode")) {
        const json& m = s[i]["mode"];
        if (m == "boundary") {
          req.mode = SectionMode::Boundary;
        } else if (m == "sublevel") {
          req.mode = SectionMode::Sublevel;
        } else {
          fail(p + ".mode", "expected \"boundary\" or \"sublevel\"");
        }
      }
      if (s[i].contains("resolution")) req.resolution = read_unsigned(s[i]["resolution"], p + ".resolution", 4);
      try {
        validate(req.spec);
      } catch (const InputError& e) {
        fail(p, e.what());
      }
      doc.sections.push_back(std::move(req));
    }
  }
  if (root.contains("mu")) {
    doc.mu = read_rational(root["mu"], "mu");
    if (doc.mu < 0 || doc.mu > 1) fail("mu", "must lie in [0, 1]");
  }
  if (root.contains("orthant_clip")) {
    if (!root["orthant_clip"].is_boolean()) fail("orthant_clip", "expected true or false");
    doc.orthant_clip = root["orthant_clip"].get<bool>();
  }
  if (root.contains("origin")) doc.origin = read_rational(root["origin"], "origin");
  if (root.contains("chat_override")) {
    const json& c = require_array(root["chat_override"], "chat_override");
    if (c.size() != n + 1) fail("chat_override", "expected " + std::to_string(n + 1) + " entries (s = 0..n)");
    std::vector<BoundPair> chat;
    for (std::size_t i = 0; i < c.size(); ++i) chat.push_back(read_bound_pair(c[i], "chat_override[" + std::to_string(i) + "]"));
    doc.chat_override = std::move(chat);
  }

  // Class-specific completeness.
  switch (doc.cls) {
    case FunctionClass::Polynomial:
    case FunctionClass::MultiDegree:
      if (!doc.degree && !doc.poly) fail("degree", "needs degree or terms");
      if (doc.poly && doc.poly->is_zero() && !doc.degree) fail("terms", "zero polynomial");
      break;
    case FunctionClass::Laurent:
      if (!doc.poly && doc.newton.empty()) fail("newton", "needs newton or terms");
      if (doc.poly && doc.poly->is_zero()) fail("terms", "zero polynomial");
      break;
    case FunctionClass::QuasiPoly:
      if (!doc.quasi) {
        if (doc.term_degrees.empty()) fail("degrees", "needs terms or degrees with frequencies");
        if (doc.frequencies.size() != doc.term_degrees.size()) fail("frequencies", "needs one frequency vector per degree");
      }
      break;
    case FunctionClass::ExpoPoly:
      if (!doc.expo && (!doc.m || !doc.lambda_hat)) fail("terms", "needs terms or m with lambda_hat");
      break;
    case FunctionClass::Semialgebraic:
      if (doc.ineq_degrees.empty()) fail("degrees", "needs the inequality degree matrix");
      break;
  }
  return doc;
}

std::string normalize(const ProblemDocument& doc) {
  json j;
  j["class"] = std::string(class_name(doc.cls));
  j["n"] = doc.n;
  if (doc.degree) j["degree"] = *doc.degree;
  if (doc.cls == FunctionClass::Semialgebraic) j["degrees"] = doc.ineq_degrees;
  if (doc.cls == FunctionClass::QuasiPoly && !doc.term_degrees.empty()) j["degrees"] = doc.term_degrees;
  if (!doc.frequencies.empty()) j["frequencies"] = doc.frequencies;
  if (!doc.degree_sums.empty()) j["degree_sums"] = doc.degree_sums;
  if (doc.m) j["m"] = *doc.m;
  if (doc.lambda_hat) j["lambda_hat"] = *doc.lambda_hat;
  if (doc.real) j["real"] = *doc.real;
  if (doc.cls == FunctionClass::QuasiPoly) j["cube_side"] = rational_json(doc.cube_side);
  if (doc.cls == FunctionClass::ExpoPoly) j["interval_length"] = rational_json(doc.interval_length);
  if (doc.poly) j["terms"] = monomials_json(*doc.poly);
  if (doc.quasi) {
    json arr = json::array();
    for (const auto& t : doc.quasi->terms()) arr.push_back({{"poly", monomials_json(t.poly)}, {"a", t.a}, {"b", t.b}});
    j["terms"] = arr;
  }
  if (doc.expo) {
    json arr = json::array();
    for (const auto& t : doc.expo->terms()) arr.push_back({{"c", complex_json(t.c)}, {"lambda", complex_json(t.lambda)}});
    j["terms"] = arr;
  }
  if (!doc.newton.empty()) {
    json arr = json::array();
    for (const auto& p : doc.newton) arr.push_back(p.coords);
    j["newton"] = arr;
  }
  if (doc.rho) j["rho"] = rational_json(*doc.rho);
  json eps = json::array();
  for (const auto& e : doc.epsilons) eps.push_back(rational_json(e));
  j["epsilons"] = eps;
  j["samples_per_axis"] = doc.samples_per_axis;
  if (!doc.sections.empty()) {
    json arr = json::array();
    for (const auto& s : doc.sections) {
      json fixed = json::array();
      for (const auto& [axis, value] : s.spec.fixed) fixed.push_back(json::array({axis + 1, rational_json(value)}));
      arr.push_back({{"fixed", fixed},
                     {"mode", s.mode == SectionMode::Boundary ? "boundary" : "sublevel"},
                     {"resolution", s.resolution}});
    }
    j["sections"] = arr;
  }
  j["mu"] = rational_json(doc.mu);
  if (doc.orthant_clip) j["orthant_clip"] = *doc.orthant_clip;
  if (doc.origin) j["origin"] = rational_json(*doc.origin);
  if (doc.chat_override) {
    json arr = json::array();
    for (const auto& b : *doc.chat_override) {
      arr.push_back({{"paper", rational_json(b.paper_bound)}, {"safe", rational_json(b.safe_bound)}});
    }
    j["chat_override"] = arr;
  }
  return j.dump(2) + "\n";
}

bool default_clip(const ProblemDocument& doc) {
  if (doc.orthant_clip) return *doc.orthant_clip;
  return !make_laurent_diagram(document_polytope(doc)).laurent;
}

LatticePolytope document_polytope(const ProblemDocument& doc) {
  if (doc.poly) {
    if (doc.poly->is_zero()) throw InputError("zero polynomial has no Newton polytope");
    return newton_polytope(*doc.poly);
  }
  if (!doc.newton.empty()) return convex_hull(doc.newton);
  if (doc.degree && (doc.cls == FunctionClass::Polynomial || doc.cls == FunctionClass::MultiDegree)) {
    const auto d = static_cast<std::int64_t>(*doc.degree);
    std::vector<LatticePoint> pts;
    if (doc.cls == FunctionClass::Polynomial) {
      pts.emplace_back(std::vector<std::int64_t>(doc.n, 0));
      for (std::size_t i = 0; i < doc.n; ++i) {
        std::vector<std::int64_t> e(doc.n, 0);
        e[i] = d;
        pts.emplace_back(std::move(e));
      }
    } else {
      for (std::size_t mask = 0; mask < (std::size_t{1} << doc.n); ++mask) {
        std::vector<std::int64_t> e(doc.n, 0);
        for (std::size_t i = 0; i < doc.n; ++i)
          if (mask & (std::size_t{1} << i)) e[i] = d;
        pts.emplace_back(std::move(e));
      }
    }
    return convex_hull(pts);
  }
  throw InputError("document has no polynomial terms or Newton polytope");
}

BoundProfile build_profile(const ProblemDocument& doc) {
  BoundProfile profile;
  profile.n = doc.n;
  profile.mu = doc.mu;
  if (doc.chat_override) {
    profile.chat = *doc.chat_override;
    return profile;
  }
  profile.chat.push_back({Rational(1), Rational(1), false});
  switch (doc.cls) {
    case FunctionClass::Polynomial: {
      PolyDiagram d{doc.n, doc.degree.value_or(std::max(1u, doc.poly ? doc.poly->total_degree() : 1u))};
      if (doc.poly && doc.poly->total_degree() > d.degree) throw InputError("terms exceed the declared degree");
      for (std::size_t s = 1; s <= doc.n; ++s) profile.chat.push_back(chat_bezout(d, s));
      break;
    }
    case FunctionClass::MultiDegree: {
      MultiDegreeDiagram d{doc.n, doc.degree.value_or(std::max(1u, doc.poly ? doc.poly->max_variable_degree() : 1u))};
      if (doc.poly && doc.poly->max_variable_degree() > d.degree) throw InputError("terms exceed the declared degree");
      for (std::size_t s = 1; s <= doc.n; ++s) profile.chat.push_back(chat_multidegree(d, s));
      break;
    }
    case FunctionClass::Laurent: {
      LaurentDiagram d = make_laurent_diagram(document_polytope(doc));
      d.clip_override = doc.orthant_clip;
      for (std::size_t s = 1; s <= doc.n; ++s) profile.chat.push_back(chat_newton(d, s));
      break;
    }
    case FunctionClass::QuasiPoly: {
      QuasiPolyDiagram d = doc.quasi ? derive_q_diagram(*doc.quasi)
                                     : make_quasi_diagram(doc.n, doc.term_degrees, doc.frequencies);
      d.equation_degree_sums = doc.degree_sums;
      for (std::size_t s = 1; s <= doc.n; ++s) profile.chat.push_back(chat_quasipoly(d, s, to_double(doc.cube_side)));
      break;
    }
    case FunctionClass::ExpoPoly: {
      ExpoPolyDiagram d;
      if (doc.expo) {
        d = make_expo_diagram(*doc.expo);
      } else {
        d.m = *doc.m;
        d.lambda_hat = *doc.lambda_hat;
        d.real_coeffs = doc.real.value_or(false);
      }
      profile.chat.push_back(chat_exponential(d, to_double(doc.interval_length)));
      break;
    }
    case FunctionClass::Semialgebraic: {
      SemialgebraicDiagram d{doc.n, doc.ineq_degrees};
      for (std::size_t l = 1; l <= doc.n; ++l) {
        Rational c = chat_semialgebraic(d, l);
        profile.chat.push_back({c, c, false});
      }
      break;
    }
  }
  return profile;
}

RealFunction build_function(const ProblemDocument& doc) {
  if (!doc.rho) throw InputError("field 'rho': required for empirical runs");
  const double rho = to_double(*doc.rho);
  std::optional<RealFunction> f;
  switch (doc.cls) {
    case FunctionClass::Polynomial:
    case FunctionClass::MultiDegree:
    case FunctionClass::Laurent:
      if (!doc.poly) throw InputError("field 'terms': empirical runs need explicit monomials");
      f = RealFunction::polynomial(*doc.poly, rho);
      break;
    case FunctionClass::QuasiPoly:
      if (!doc.quasi) throw InputError("field 'terms': empirical runs need explicit quasi-polynomial terms");
      f = RealFunction::quasi_squared_modulus(*doc.quasi, rho);
      break;
    case FunctionClass::ExpoPoly:
      if (!doc.expo) throw InputError("field 'terms': empirical runs need explicit exponential terms");
      f = RealFunction::expo_modulus(*doc.expo, rho);
      break;
    case FunctionClass::Semialgebraic:
      throw InputError("field 'class': semialgebraic documents carry no evaluable function");
  }
  if (doc.origin) f->set_origin(to_double(*doc.origin));
  return *f;
}

}  // namespace vitushkin::cli
