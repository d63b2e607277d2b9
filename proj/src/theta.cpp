#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "thetaq/bivariate.hpp"
#include "thetaq/degenerate.hpp"
#include "thetaq/error.hpp"
#include "thetaq/numeric.hpp"
#include "thetaq/random.hpp"
#include "thetaq/roots.hpp"
#include "thetaq/tangency.hpp"
#include "thetaq/theta.hpp"

namespace thetaq {

std::string_view to_string(LineType t) {
  switch (t) {
    case LineType::type0: return "type0";
    case LineType::type1: return "type1";
    case LineType::type2: return "type2";
    case LineType::component: return "component";
  }
  return "?";
}

std::optional<LineType> line_type_from_string(std::string_view s) {
  if (s == "type0") return LineType::type0;
  if (s == "type1") return LineType::type1;
  if (s == "type2") return LineType::type2;
  if (s == "component") return LineType::component;
  return std::nullopt;
}

int ThetaConfig::total_multiplicity() const {
  int s = 0;
  for (auto& l : lines) s += l.multiplicity;
  return s;
}

std::map<int, int> ThetaConfig::multiplicity_histogram() const {
  std::map<int, int> h;
  for (auto& l : lines) h[l.multiplicity] += 1;
  return h;
}

void ThetaConfig::sort_lines() {
  std::stable_sort(lines.begin(), lines.end(), [](const ThetaLine& a, const ThetaLine& b) { return a.line < b.line; });
}

int theta_line_multiplicity(LineType type, std::span<const SingularKind> through, bool tacnodal_tangent) {
  auto count = [&](SingularKind k) { return std::count(through.begin(), through.end(), k); };
  switch (type) {
    case LineType::type0:
      if (!through.empty()) break;
      return 1;
    case LineType::type1:
      if (through.size() != 1) break;
      if (through[0] == SingularKind::node) return 2;
      if (through[0] == SingularKind::cusp) return 3;
      return tacnodal_tangent ? 6 : 4;
    case LineType::type2: {
      if (through.size() != 2) break;
      auto n = count(SingularKind::node), c = count(SingularKind::cusp), t = count(SingularKind::tacnode);
      if (n == 2) return 4;
      if (c == 2) return 9;
      if (n == 1 && c == 1) return 6;
      if (t == 1 && n == 1) return 8;
      if (t == 1 && c == 1) return 12;
      throw Error(ErrorCode::InfiniteStabilizer, "line joining two tacnodes");
    }
    case LineType::component:
      return count(SingularKind::tacnode) > 0 ? 6 : 4;
  }
  throw Error(ErrorCode::InvalidInput, "inconsistent theta-line type and singular points");
}

Mat3 adjugate(const Mat3& m) {
  Mat3 a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      a(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  return a;
}

namespace {

constexpr double kIncidence = 1e-7;

bool on_line(const ProjPoint& p, const ProjLine& l, double tol = kIncidence) { return incidence_residual(p, l) < tol; }

std::vector<SingularKind> kinds_of(std::span<const SingularPoint> s, const std::vector<std::size_t>& idx) {
  std::vector<SingularKind> k;
  for (auto i : idx) k.push_back(s[i].kind);
  return k;
}

void add_unique(std::vector<ThetaLine>& out, ThetaLine l) {
  for (auto& o : out)
    if (distance(o.line, l.line) < 1e-7) return;
  out.push_back(std::move(l));
}

}  // namespace

std::vector<ThetaLine> type1_lines(const TernaryForm& f_in, std::span<const SingularPoint> singular, std::size_t index,
                                   double tol, std::uint64_t seed) {
  TernaryForm f = f_in.normalized();
  const SingularPoint& s = singular[index];
  Vec3 p = s.location.coords();
  auto [a, b] = orthonormal_complement(p);
  Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
  double th = 2.0 * 3.141592653589793 * rng.uniform();
  Complex ph = std::polar(1.0, 2.0 * 3.141592653589793 * rng.uniform());
  Vec3 u1 = std::cos(th) * a + std::sin(th) * ph * b;
  Vec3 u2 = -std::sin(th) * std::conj(ph) * a + std::cos(th) * b;

  BinaryForm probe = restrict_along(f, p, u1);
  if (std::abs(probe[0]) > 1e-8 || std::abs(probe[1]) > 1e-8)
    throw Error(ErrorCode::DegeneratePencil, "point is not a double point of the curve");

  const int n = 16;
  std::vector<Complex> vals(n);
  for (int j = 0; j < n; ++j) {
    Vec3 w = u1 + root_of_unity(j, n) * u2;
    BinaryForm g = restrict_along(f, p, w);
    vals[j] = g[3] * g[3] - 4.0 * g[2] * g[4];
  }
  auto disc = interpolate_unit_circle(vals);
  disc.resize(7);  // degree 6 exactly; the rest is rounding
  double dn = 0.0;
  for (auto& c : disc) dn = std::max(dn, std::abs(c));
  if (dn < 1e-12) throw Error(ErrorCode::DegeneratePencil, "discriminant of the pencil vanishes identically");

  // polish simple roots on the directly evaluated discriminant; large
  // roots in the chart u2 + mu u1
  auto polish = [&](Complex lam, bool inv) {
    auto h = [&](Complex x) {
      BinaryForm g = restrict_along(f, p, inv ? Vec3(u2 + x * u1) : Vec3(u1 + x * u2));
      return g[3] * g[3] - 4.0 * g[2] * g[4];
    };
    Complex v = h(lam);
    for (int it = 0; it < 8; ++it) {
      const double d = 1e-6;
      Complex dh = (h(lam + d) - h(lam - d)) / (2.0 * d);
      if (dh == Complex(0.0)) break;
      Complex next = lam - v / dh;
      Complex vn = h(next);
      if (!(std::abs(vn) < std::abs(v))) break;
      lam = next, v = vn;
    }
    return inv ? Vec3(u2 + lam * u1) : Vec3(u1 + lam * u2);
  };
  std::vector<Vec3> dirs;
  int finite = 0;
  for (auto& r : univariate_roots(disc, 1e-6)) {
    finite += r.multiplicity;
    if (r.multiplicity > 1)
      dirs.push_back(u1 + r.value * u2);
    else if (std::abs(r.value) <= 1.0)
      dirs.push_back(polish(r.value, false));
    else
      dirs.push_back(polish(1.0 / r.value, true));
  }
  if (finite < 6) dirs.push_back(polish(0.0, true));

  std::vector<ThetaLine> out;
  for (auto& w : dirs) {
    ProjLine l = join(s.location, ProjPoint(w));
    bool tac = false;
    if (s.kind == SingularKind::tacnode && distance(l, s.tangent_cone[0]) < 1e-4) {
      l = s.tangent_cone[0];
      tac = true;
    }
    BinaryForm g = restrict_to_line(f, l);
    if (g.norm() < 1e-10) continue;  // component
    // roots of high multiplicity (joins through a tacnode) split widely,
    // hence the loose radius
    bool other = false;
    for (std::size_t k = 0; k < singular.size(); ++k)
      if (k != index && on_line(singular[k].location, l, 1e-3)) other = true;
    if (other) continue;
    if (!is_perfect_square(g, std::max(tol, 1e-7)).accepted) continue;
    ThetaLine t{l};
    t.type = LineType::type1;
    t.singular_points = {index};
    t.tacnodal_tangent = tac;
    t.multiplicity = theta_line_multiplicity(LineType::type1, kinds_of(singular, t.singular_points), tac);
    for (auto& c : contact_points(f, l))
      if (distance(c, s.location) > 1e-5) t.contacts.push_back(c);
    for (auto& c : t.contacts)
      for (auto& o : singular)
        if (distance(c, o.location) < 1e-3) other = true;
    if (other) continue;
    add_unique(out, std::move(t));
  }
  std::sort(out.begin(), out.end(), [](const ThetaLine& x, const ThetaLine& y) { return x.line < y.line; });
  return out;
}

std::vector<ThetaLine> type2_lines(std::span<const SingularPoint> singular) {
  std::vector<ThetaLine> out;
  for (std::size_t i = 0; i < singular.size(); ++i)
    for (std::size_t j = i + 1; j < singular.size(); ++j) {
      ProjLine l = join(singular[i].location, singular[j].location);
      for (std::size_t k = 0; k < singular.size(); ++k)
        if (k != i && k != j && on_line(singular[k].location, l, 1e-6))
          throw Error(ErrorCode::LineThroughThreeSingularPoints, "a line passes through three singular points");
      ThetaLine t{l};
      t.type = LineType::type2;
      t.singular_points = {i, j};
      t.multiplicity = theta_line_multiplicity(LineType::type2, kinds_of(singular, t.singular_points));
      out.push_back(std::move(t));
    }
  return out;
}

namespace {

std::vector<SingularPoint> singular_or_outside(const TernaryForm& f, const ThetaOptions& opt) {
  if (!is_reduced(f, opt.seed + 1)) throw Error(ErrorCode::OutsideV, "curve is not reduced");
  try {
    return singular_points(f, opt.tol, opt.seed);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnsupportedSingularity) throw Error(ErrorCode::OutsideV, e.what());
    throw;
  }
}

// Endpoints of the 28 tracks of F + tG near t = 0, polished on F.
std::vector<ProjLine> type0_by_continuation(const TernaryForm& f, const ThetaOptions& opt) {
  Rng rng(opt.seed * 7919 + 3);
  TrackOptions topt;
  topt.seed = opt.seed;
  topt.jobs = opt.jobs;
  for (int attempt = 0; attempt < 3; ++attempt) {
    try {
      FamilyPath path = track_family(f, random_form(4, rng), 0.05, 1e-7, 60, topt);
      std::vector<ProjLine> out;
      for (auto& tr : path.tracks) {
        if (tr.lost || tr.samples.empty()) continue;
        auto fit = refine_bitangent(f, tr.samples.back().line.coords());
        if (fit.converged) out.emplace_back(fit.line);
      }
      return out;
    } catch (const Error&) {
    }
  }
  return {};
}

void check_sum(const ThetaConfig& c) {
  int s = c.total_multiplicity();
  if (s != 28)
    throw Error(ErrorCode::MultiplicitySumMismatch, "theta-lines have total multiplicity " + std::to_string(s));
}

}  // namespace

namespace {

// Singular points sent to coordinate points, completed orthonormally.
std::optional<Mat3> singular_frame(std::span<const SingularPoint> sing) {
  if (sing.size() < 2) return std::nullopt;
  Mat3 t;
  for (std::size_t i = 0; i < std::min<std::size_t>(3, sing.size()); ++i) t.col(i) = sing[i].location.coords();
  if (sing.size() == 2) t.col(2) = cross(t.col(0), t.col(1)).conjugate().normalized();
  Eigen::JacobiSVD<Mat3> svd(t);
  if (svd.singularValues()(2) < 1e-8) return std::nullopt;
  return t;
}

ThetaConfig theta_irreducible(const TernaryForm& f_in, const ThetaOptions& opt, bool reframe);

}  // namespace

ThetaConfig theta_curve(const TernaryForm& f_in, const ThetaOptions& opt) { return theta_irreducible(f_in, opt, true); }

namespace {

ThetaConfig theta_irreducible(const TernaryForm& f_in, const ThetaOptions& opt, bool reframe) {
  if (f_in.degree() != 4) throw Error(ErrorCode::InvalidInput, "expected a quartic");
  TernaryForm f = f_in.normalized();
  ThetaConfig cfg;
  cfg.tol = opt.tol;
  cfg.singular = singular_or_outside(f, opt);
  if (cfg.singular.empty()) {
    cfg.lines = bitangents_smooth(f, opt);
    cfg.sort_lines();
    check_sum(cfg);
    return cfg;
  }
  const auto& sing = cfg.singular;
  for (std::size_t i = 0; i < sing.size(); ++i)
    for (std::size_t j = i + 1; j < sing.size(); ++j)
      if (restrict_to_line(f, join(sing[i].location, sing[j].location)).norm() < 1e-10)
        throw Error(ErrorCode::NeedsDecomposition, "curve contains a line; supply its components");

  // clustered singular points make everything ill-conditioned; work where
  // they are the coordinate points and map back
  if (auto t = reframe ? singular_frame(sing) : std::nullopt) {
    ThetaConfig c = theta_irreducible(f.compose(*t), opt, false);
    Mat3 lt = t->inverse().transpose();
    for (auto& l : c.lines) {
      l.line = ProjLine(lt * l.line.coords());
      for (auto& p : l.contacts) p = ProjPoint(*t * p.coords());
    }
    for (auto& s : c.singular) {
      s.location = ProjPoint(*t * s.location.coords());
      for (auto& l : s.tangent_cone) l = ProjLine(lt * l.coords());
    }
    c.sort_lines();
    return c;
  }

  std::vector<ThetaLine> special = type2_lines(sing);
  for (std::size_t i = 0; i < sing.size(); ++i)
    for (auto& t : type1_lines(f, sing, i, opt.tol, opt.seed)) add_unique(special, t);

  auto type0 = [&](const ProjLine& l) -> std::optional<ThetaLine> {
    for (auto& s : sing)
      if (on_line(s.location, l, 1e-5)) return std::nullopt;
    for (auto& t : special)
      if (distance(t.line, l) < 1e-4) return std::nullopt;
    BinaryForm g = restrict_to_line(f, l);
    if (g.norm() <= 1e-13 || !is_perfect_square(g, opt.tol).accepted) return std::nullopt;
    ThetaLine t{l};
    t.contacts = contact_points(f, l, &t.hyperflex);
    // a line crossing both branches of a tacnode at distance d meets them
    // O(d^2) apart, so near singular points the square test is blind
    for (auto& c : t.contacts)
      for (auto& s : sing)
        if (distance(c, s.location) < 1e-2) return std::nullopt;
    return t;
  };
  std::vector<ThetaLine> plain;
  for (auto& l : perfect_square_lines(f, opt))
    if (auto t = type0(l)) add_unique(plain, *t);

  // the resultant is badly conditioned next to the special lines; if the
  // count disagrees with the table, take the type-0 lines as limits of
  // bitangents of F + tG instead
  std::optional<std::size_t> expected;
  try {
    expected = theta_type_counts(profile_of(sing)).b0;
  } catch (const Error&) {
  }
  if (expected && plain.size() != *expected) {
    std::vector<ThetaLine> limits;
    for (auto& l : type0_by_continuation(f, opt))
      if (auto t = type0(l)) add_unique(limits, *t);
    if (limits.size() == *expected)
      plain = std::move(limits);
    else
      for (auto& t : limits) add_unique(plain, t);
  }

  std::vector<ThetaLine> lines = special;
  for (auto& t : plain) lines.push_back(std::move(t));
  cfg.lines = std::move(lines);
  cfg.sort_lines();
  check_sum(cfg);
  return cfg;
}

}  // namespace

ThetaConfig theta_curve(const TernaryForm& f, std::span<const TernaryForm> components, const ThetaOptions& opt) {
  if (components.empty()) return theta_curve(f, opt);
  TernaryForm prod(0, {1.0});
  for (auto& c : components) prod = prod * c;
  if (prod.degree() != f.degree() || form_distance(prod, f) > 1e-10)
    throw Error(ErrorCode::InvalidInput, "product of the components does not match the curve");
  return theta_reducible(components, opt);
}

namespace {

const std::vector<CatalogCase>& catalog() {
  static const std::vector<CatalogCase> c = {
      {1, {2, 2}, {4, 0, 0}, {{1, 4}, {4, 6}}},
      {2, {2, 2}, {2, 0, 1}, {{1, 2}, {4, 1}, {6, 1}, {8, 2}}},
      {3, {1, 3}, {3, 0, 0}, {{2, 12}, {4, 1}}},
      {4, {1, 3}, {4, 0, 0}, {{2, 6}, {4, 4}}},
      {5, {1, 3}, {3, 1, 0}, {{2, 3}, {4, 1}, {6, 3}}},
      {6, {1, 3}, {1, 0, 1}, {{2, 3}, {4, 4}, {6, 1}}},
      {7, {1, 3}, {2, 0, 1}, {{2, 1}, {4, 3}, {6, 1}, {8, 1}}},
      {8, {1, 3}, {1, 1, 1}, {{4, 1}, {6, 2}, {12, 1}}},
      {9, {1, 1, 2}, {5, 0, 0}, {{2, 2}, {4, 6}}},
      {10, {1, 1, 2}, {3, 0, 1}, {{2, 1}, {4, 1}, {6, 1}, {8, 2}}},
      {11, {1, 1, 1, 1}, {6, 0, 0}, {{4, 7}}},
  };
  return c;
}

}  // namespace

std::span<const CatalogCase> reducible_catalog() { return catalog(); }

const CatalogCase* find_catalog_case(std::vector<int> degrees, const SingularityProfile& p) {
  std::sort(degrees.begin(), degrees.end());
  for (auto& c : catalog())
    if (c.degrees == degrees && c.profile == p) return &c;
  return nullptr;
}

ThetaConfig theta_reducible(std::span<const TernaryForm> components, const ThetaOptions& opt) {
  std::vector<int> degrees;
  int total = 0;
  for (auto& c : components) {
    if (c.degree() < 1 || c.degree() > 3) throw Error(ErrorCode::InvalidInput, "components must have degree 1, 2 or 3");
    if (c.norm() == 0.0) throw Error(ErrorCode::DegenerateInput, "zero component");
    degrees.push_back(c.degree());
    total += c.degree();
  }
  if (total != 4 || components.size() < 2)
    throw Error(ErrorCode::InvalidInput, "components must be at least two forms of total degree 4");
  std::sort(degrees.begin(), degrees.end());
  TernaryForm f(0, {1.0});
  for (auto& c : components) f = f * c.normalized();
  f = f.normalized();

  ThetaConfig cfg;
  cfg.tol = opt.tol;
  cfg.singular = singular_or_outside(f, opt);
  const auto& sing = cfg.singular;
  SingularityProfile prof = profile_of(sing);
  const CatalogCase* cc = find_catalog_case(degrees, prof);
  if (!cc) {
    if (prof.tau >= 2) throw Error(ErrorCode::InfiniteStabilizer, "curve has an infinite stabilizer");
    throw Error(ErrorCode::UnrecognizedCase, "component degrees and singularities match no reducible case");
  }
  cfg.catalog_case = cc->id;

  std::vector<ThetaLine> lines;
  std::vector<ProjLine> comp_lines;
  for (auto& c : components) {
    if (c.degree() != 1) continue;
    ProjLine l(Vec3(c.coefficient(1, 0), c.coefficient(0, 1), c.coefficient(0, 0)));
    comp_lines.push_back(l);
    ThetaLine t{l};
    t.type = LineType::component;
    for (std::size_t i = 0; i < sing.size(); ++i)
      if (on_line(sing[i].location, l, 1e-6)) t.singular_points.push_back(i);
    t.multiplicity = theta_line_multiplicity(LineType::component, kinds_of(sing, t.singular_points));
    lines.push_back(std::move(t));
  }
  auto is_component = [&](const ProjLine& l) {
    for (auto& c : comp_lines)
      if (distance(c, l) < 1e-6) return true;
    return false;
  };
  for (std::size_t i = 0; i < sing.size(); ++i)
    for (std::size_t j = i + 1; j < sing.size(); ++j) {
      ProjLine l = join(sing[i].location, sing[j].location);
      if (is_component(l)) continue;
      for (std::size_t k = 0; k < sing.size(); ++k)
        if (k != i && k != j && on_line(sing[k].location, l, 1e-6))
          throw Error(ErrorCode::LineThroughThreeSingularPoints, "a line passes through three singular points");
      ThetaLine t{l};
      t.type = LineType::type2;
      t.singular_points = {i, j};
      t.multiplicity = theta_line_multiplicity(LineType::type2, kinds_of(sing, t.singular_points));
      add_unique(lines, std::move(t));
    }
  for (std::size_t i = 0; i < sing.size(); ++i)
    for (auto& t : type1_lines(f, sing, i, opt.tol, opt.seed)) add_unique(lines, t);

  if (degrees == std::vector<int>{2, 2}) {
    // common tangents: intersections of the dual conics
    std::vector<TernaryForm> duals;
    std::vector<Mat3> mats;
    for (auto& c : components) {
      Mat3 m = c.normalized().conic_matrix();
      mats.push_back(m);
      duals.push_back(TernaryForm::quadratic(adjugate(m)));
    }
    for (auto& p : intersect_curves(duals[0], duals[1], opt.seed + 17, 1e-8)) {
      ProjLine l(p.coords());
      bool bad = false;
      for (auto& s : sing)
        if (on_line(s.location, l, 1e-5)) bad = true;
      if (bad) continue;
      ThetaLine t{l};
      for (auto& m : mats) t.contacts.emplace_back(adjugate(m) * l.coords());
      add_unique(lines, std::move(t));
    }
  }
  cfg.lines = std::move(lines);
  cfg.sort_lines();
  check_sum(cfg);
  if (cfg.multiplicity_histogram() != cc->histogram)
    throw Error(ErrorCode::VerificationFailed,
                "multiplicities do not match reducible case " + std::to_string(cc->id));
  return cfg;
}

}  // namespace thetaq
