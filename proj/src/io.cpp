#include "thetaq/io.hpp"

#include <charconv>
#include <cmath>

#include "thetaq/error.hpp"

namespace thetaq {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

double parse_number(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  // integers exactly, anything else as a decimal
  long long i = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), i);
  if (ec == std::errc() && p == s.data() + s.size()) return static_cast<double>(i);
  double d = 0;
  auto [q, ec2] = std::from_chars(s.data(), s.data() + s.size(), d);
  if (ec2 != std::errc() || q != s.data() + s.size()) bad("not a number: '" + std::string(s) + "'");
  return d;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::vector<Complex> parse_coefficients(const Json& j, int degree) {
  if (!j.is_array()) bad("coefficients must be an array");
  if (j.size() != TernaryForm::monomial_count(degree))
    bad("degree " + std::to_string(degree) + " needs " + std::to_string(TernaryForm::monomial_count(degree)) +
        " coefficients, got " + std::to_string(j.size()));
  std::vector<Complex> c;
  for (auto& e : j) c.push_back(parse_complex(e));
  return c;
}

TernaryForm parse_form(const Json& j) {
  const Json& d = field(j, "degree");
  if (!d.is_number_integer() || d.get<int>() < 0) bad("degree must be a non-negative integer");
  int degree = d.get<int>();
  return TernaryForm(degree, parse_coefficients(field(j, "coefficients"), degree));
}

Json form_json(const TernaryForm& f) {
  Json c = Json::array();
  for (auto& x : f.coefficients()) c.push_back(to_json(x));
  return {{"degree", f.degree()}, {"coefficients", c}};
}

Json type_json(const ThetaLine& l) {
  if (!l.typed) return nullptr;
  switch (l.type) {
    case LineType::type0: return 0;
    case LineType::type1: return 1;
    case LineType::type2: return 2;
    case LineType::component: return "component";
  }
  return nullptr;
}

}  // namespace

double parse_real(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_string()) bad("expected a number or a rational string");
  std::string s = j.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) return parse_number(s);
  double q = parse_number(std::string_view(s).substr(slash + 1));
  if (q == 0.0) bad("zero denominator in '" + s + "'");
  return parse_number(std::string_view(s).substr(0, slash)) / q;
}

Complex parse_complex(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) bad("complex entries are [re, im]");
    return {parse_real(j[0]), parse_real(j[1])};
  }
  return {parse_real(j), 0.0};
}

Json to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Json to_json(const Vec3& v) { return Json::array({to_json(v(0)), to_json(v(1)), to_json(v(2))}); }

Vec3 parse_vec3(const Json& j) {
  if (!j.is_array() || j.size() != 3) bad("expected three homogeneous coordinates");
  return Vec3(parse_complex(j[0]), parse_complex(j[1]), parse_complex(j[2]));
}

CurveFile curve_from_json(const Json& j) {
  CurveFile cf{parse_form(j), {}};
  if (j.contains("components") && !j.at("components").is_null()) {
    const Json& comps = j.at("components");
    if (!comps.is_array() || comps.empty()) bad("components must be a non-empty array");
    TernaryForm prod(0, {1.0});
    for (auto& c : comps) {
      cf.components.push_back(parse_form(c));
      prod = prod * cf.components.back();
    }
    if (prod.degree() != cf.form.degree()) bad("component degrees do not add up to the curve degree");
    if ((prod - cf.form).norm() > 1e-10 * cf.form.norm())
      bad("product of the components differs from the curve");
  }
  return cf;
}

Json curve_to_json(const TernaryForm& f, const std::vector<TernaryForm>& components) {
  Json j = form_json(f);
  if (!components.empty()) {
    Json c = Json::array();
    for (auto& g : components) c.push_back(form_json(g));
    j["components"] = c;
  }
  return j;
}

ThetaConfig config_from_json(const Json& j) {
  ThetaConfig cfg;
  const Json& lines = field(j, "lines");
  if (!lines.is_array()) bad("lines must be an array");
  int total = 0;
  for (auto& e : lines) {
    Vec3 v = parse_vec3(field(e, "dual"));
    if (v.norm() == 0.0) bad("zero dual coordinates");
    ThetaLine l{ProjLine(v)};
    const Json& m = field(e, "multiplicity");
    if (!m.is_number_integer() || m.get<int>() < 1) bad("multiplicity must be a positive integer");
    l.multiplicity = m.get<int>();
    total += l.multiplicity;
    const Json t = e.value("type", Json(nullptr));
    if (t.is_null()) {
      l.typed = false;
    } else if (t.is_number_integer() && t.get<int>() >= 0 && t.get<int>() <= 2) {
      l.type = static_cast<LineType>(t.get<int>());
    } else if (t.is_string() && t.get<std::string>() == "component") {
      l.type = LineType::component;
    } else {
      bad("type must be 0, 1, 2, \"component\" or null");
    }
    if (e.contains("contacts") && !e.at("contacts").is_null())
      for (auto& c : e.at("contacts")) l.contacts.emplace_back(parse_vec3(c));
    cfg.lines.push_back(std::move(l));
  }
  if (total != 28)
    throw Error(ErrorCode::MultiplicitySumMismatch, "multiplicities sum to " + std::to_string(total) + ", not 28");
  if (j.contains("tol")) cfg.tol = parse_real(j.at("tol"));
  return cfg;
}

Json config_to_json(const ThetaConfig& cfg) {
  Json lines = Json::array();
  for (auto& l : cfg.lines) {
    Json e = {{"dual", to_json(l.line.coords())}, {"multiplicity", l.multiplicity}, {"type", type_json(l)}};
    if (!l.contacts.empty()) {
      Json c = Json::array();
      for (auto& p : l.contacts) c.push_back(to_json(p.coords()));
      e["contacts"] = c;
    }
    lines.push_back(e);
  }
  return {{"lines", lines}, {"tol", cfg.tol}};
}

FamilyFile family_from_json(const Json& j) {
  FamilyFile f;
  f.f0 = curve_from_json(field(j, "F0")).form;
  f.g = curve_from_json(field(j, "G")).form;
  if (j.contains("t_start")) f.t_start = parse_real(j.at("t_start"));
  if (j.contains("t_end")) f.t_end = parse_real(j.at("t_end"));
  if (j.contains("steps")) {
    if (!j.at("steps").is_number_integer()) bad("steps must be an integer");
    f.steps = j.at("steps").get<int>();
  }
  return f;
}

Json to_json(const IncidenceReport& r) {
  Json pts = Json::array();
  for (auto& p : r.points)
    if (p.lines.size() > 2) pts.push_back({{"point", to_json(p.point.coords())}, {"multiplicity", p.multiplicity},
                                           {"lines", p.lines}});
  return {{"support_lines", r.lines.size()},
          {"max_line_multiplicity", r.max_line_multiplicity()},
          {"max_point_multiplicity", r.max_point_multiplicity()},
          {"concurrences", pts}};
}

Json to_json(const GitVerdict& v) {
  Json j = {{"verdict", to_string(v.verdict)}, {"witness", nullptr}};
  if (v.witness) {
    Json w = {{"kind", v.witness->is_line ? "line" : "point"}, {"multiplicity", v.witness->multiplicity}};
    if (v.witness->line) w["dual"] = to_json(v.witness->line->coords());
    if (v.witness->point) w["point"] = to_json(v.witness->point->coords());
    j["witness"] = w;
  }
  return j;
}

Json to_json(const MatchResult& m) {
  Json j = {{"success", m.success}, {"max_distance", m.max_distance}, {"mapping", m.mapping}};
  if (!m.reason.empty()) j["reason"] = m.reason;
  return j;
}

Json to_json(const Recognition& r) {
  Json nodes = Json::array();
  for (auto& n : r.nodes) nodes.push_back(to_json(n.coords()));
  return {{"class", to_string(r.curve_class)}, {"nodes", nodes}};
}

Json to_json(const ReconstructionResult& r) {
  // scale the first component so that the product is the curve itself
  std::vector<TernaryForm> comps = r.components;
  if (!comps.empty()) {
    TernaryForm prod(0, {1.0});
    for (auto& c : comps) prod = prod * c;
    Complex num = 0, den = 0;
    for (std::size_t k = 0; k < prod.coefficients().size(); ++k) {
      num += std::conj(prod.coefficients()[k]) * r.curve.coefficients()[k];
      den += std::norm(prod.coefficients()[k]);
    }
    comps[0] = comps[0] * (num / den);
  }
  Json j = curve_to_json(r.curve, comps);
  j["residual"] = r.residual;
  j["certificate"] = to_json(r.certificate);
  return j;
}

Json to_json(const ImmersionReport& r) { return {{"rank", r.rank}, {"singular_values", r.singular_values}}; }

Json to_json(const PropertyReport& r) {
  Json j = {{"class", to_string(r.curve_class)}, {"method", r.method}, {"verified", r.verified}};
  if (r.method == "reconstruction") j["distance"] = r.distance;
  if (r.method == "local search") {
    j["heuristic"] = true;
    j["rank"] = r.rank;
    j["restarts"] = r.restarts;
    j["returned"] = r.returned;
    j["degenerate"] = r.degenerate;
    j["failed"] = r.failed;
  }
  return j;
}

Json to_json(const FamilyPath& p) {
  Json tracks = Json::array();
  for (auto& t : p.tracks) {
    Json s = Json::array();
    for (auto& x : t.samples) s.push_back({{"t", x.t}, {"dual", to_json(x.line.coords())}, {"residual", x.residual}});
    tracks.push_back({{"lost", t.lost}, {"samples", s}});
  }
  return {{"F0", form_json(p.f0)}, {"G", form_json(p.g)}, {"schedule", p.schedule},
          {"refinements", p.refinements}, {"tracks", tracks}};
}

Json to_json(const CollisionReport& r) {
  Json lines = Json::array();
  for (auto& l : r.lines)
    lines.push_back({{"dual", to_json(l.target.line.coords())},
                     {"type", type_json(l.target)},
                     {"multiplicity", l.target.multiplicity},
                     {"count", l.tracks.size()},
                     {"tracks", l.tracks},
                     {"exponent", l.tracks.empty() ? Json(nullptr) : Json(l.exponent)},
                     {"estimate", to_json(l.estimate.coords())}});
  return {{"total", r.total()}, {"lines", lines}};
}

}  // namespace thetaq
