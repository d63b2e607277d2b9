#include <algorithm>
#include <cmath>
#include <optional>

#include <Eigen/SVD>

#include "thetaq/bivariate.hpp"
#include "thetaq/error.hpp"
#include "thetaq/numeric.hpp"
#include "thetaq/quartic.hpp"
#include "thetaq/random.hpp"
#include "thetaq/roots.hpp"

namespace thetaq {

std::string_view to_string(SingularKind k) {
  switch (k) {
    case SingularKind::node: return "node";
    case SingularKind::cusp: return "cusp";
    case SingularKind::tacnode: return "tacnode";
  }
  return "?";
}

bool is_reduced(const TernaryForm& f, std::uint64_t seed) {
  TernaryForm g = f.normalized();
  Rng rng(seed);
  for (int i = 0; i < 3; ++i) {
    ProjLine l(rng.complex_vector());
    BinaryForm h = restrict_to_line(g, l);
    if (h.norm() < 1e-12) continue;  // line is a component
    h = h.transformed(dominant_rotation(h));
    h = h * Complex(1.0 / h.norm());
    // chordal separation of the roots; a double root splits by ~sqrt(eps)
    auto r = univariate_roots(h.coefficients(), 1e-12);
    if (static_cast<int>(r.size()) != h.degree()) continue;
    double sep = 1.0;
    for (std::size_t a = 0; a < r.size(); ++a)
      for (std::size_t b = a + 1; b < r.size(); ++b)
        sep = std::min(sep, std::abs(r[a].value - r[b].value) / std::sqrt((1.0 + std::norm(r[a].value)) *
                                                                           (1.0 + std::norm(r[b].value))));
    if (sep > 1e-5) return true;
  }
  return false;
}

namespace {

// Derivative forms of a fixed quartic, reused by the refinement systems.
struct Jet {
  TernaryForm g;
  TernaryForm gx, gy, gz, gxx, gxy, gyy;
  explicit Jet(TernaryForm f)
      : g(std::move(f)),
        gx(g.derivative(0)),
        gy(g.derivative(1)),
        gz(g.derivative(2)),
        gxx(gx.derivative(0)),
        gxy(gx.derivative(1)),
        gyy(gy.derivative(1)) {}
  Eigen::Matrix2cd hessian(const Vec3& p) const {
    Eigen::Matrix2cd h;
    h << gxx(p), gxy(p), gxy(p), gyy(p);
    return h;
  }
  // coefficient of s^3 in g(p + s v)
  Complex cubic(const Vec3& p, const Vec3& v) const { return restrict_along(g, p, v)[3]; }
};

Mat3 frame_along(const Vec3& p, const Vec3& dir) {
  Vec3 c = canonical(p);
  Vec3 e = dir - c * (c.adjoint() * dir)(0);
  e /= e.norm();
  Vec3 f = cross(c, e).conjugate();
  f /= f.norm();
  Mat3 m;
  m.col(0) = e;
  m.col(1) = f;
  m.col(2) = c;
  return m;
}

Vec3 point_refine(const Jet& j, const Mat3& m) {
  auto res = [&](const VectorXc& z) {
    Vec3 p(z(0), z(1), 1.0);
    VectorXc r(3);
    r << j.gx(p), j.gy(p), j.gz(p);
    return r;
  };
  NewtonOptions opt;
  opt.max_iterations = 60;
  auto sol = gauss_newton(res, VectorXc::Zero(2), opt);
  return m * Vec3(sol.z(0), sol.z(1), 1.0);
}

struct DegenerateSolution {
  Vec3 point;     // in the original coordinates
  Vec3 direction; // kernel direction of the Hessian, original coordinates
  double residual;
};

// Solves grad = 0, H v = 0, r.v = 1 (and optionally D^3[v,v,v] = 0) near a
// point; the augmented system is regular at cusps (resp. tacnodes).
std::optional<DegenerateSolution> degenerate_refine(const TernaryForm& f, const Vec3& p0, const Vec3& dir0,
                                                     bool tacnode) {
  Mat3 m = frame_with_last(p0);
  Jet j(f.compose(m).normalized());
  Eigen::Vector2cd v0;
  {
    Vec3 local = m.adjoint() * dir0;
    v0 << local(0), local(1);
    v0 /= v0.norm();
  }
  Eigen::Vector2cd r = v0.conjugate();
  auto res = [&](const VectorXc& z) {
    Vec3 p(z(0), z(1), 1.0);
    Eigen::Vector2cd v(z(2), z(3));
    Eigen::Vector2cd hv = j.hessian(p) * v;
    VectorXc out(tacnode ? 7 : 6);
    out(0) = j.gx(p);
    out(1) = j.gy(p);
    out(2) = j.gz(p);
    out(3) = hv(0);
    out(4) = hv(1);
    out(5) = r(0) * v(0) + r(1) * v(1) - 1.0;
    if (tacnode) out(6) = j.cubic(p, Vec3(v(0), v(1), 0.0));
    return out;
  };
  VectorXc z(4);
  z << 0.0, 0.0, v0(0), v0(1);
  NewtonOptions opt;
  opt.max_iterations = 80;
  auto sol = gauss_newton(res, z, opt);
  if (sol.residual > 1e-9) return std::nullopt;
  Vec3 p = m * Vec3(sol.z(0), sol.z(1), 1.0);
  Vec3 d = m * Vec3(sol.z(2), sol.z(3), 0.0);
  return DegenerateSolution{p, d, sol.residual};
}

std::vector<ProjLine> node_tangents(const TernaryForm& gc, const Mat3& m, const Vec3& p) {
  BinaryForm q({gc.coefficient(0, 2), gc.coefficient(1, 1), gc.coefficient(2, 0)});
  // q(s, t) with s ~ Y, t ~ X: coefficient k multiplies Y^(2-k) X^k
  std::vector<ProjLine> out;
  for (auto& r : binary_roots(q, 1e-9)) {
    Vec3 dir = m * Vec3(r.t, r.s, 0.0);
    out.push_back(join(ProjPoint(p), ProjPoint(dir)));
  }
  return out;
}

std::optional<SingularPoint> classify(const TernaryForm& f, const Vec3& guess) {
  Mat3 m0 = frame_with_last(guess);
  Jet j0(f.compose(m0).normalized());
  Vec3 p = point_refine(j0, m0);

  Mat3 m = frame_with_last(p);
  TernaryForm gc = f.compose(m).normalized();
  double lin = std::abs(gc.coefficient(0, 0)) + std::abs(gc.coefficient(1, 0)) + std::abs(gc.coefficient(0, 1));
  Complex q20 = gc.coefficient(2, 0), q11 = gc.coefficient(1, 1), q02 = gc.coefficient(0, 2);
  double qn = std::sqrt(std::norm(q20) + std::norm(q11) + std::norm(q02));
  double disc = std::abs(q11 * q11 - 4.0 * q20 * q02) / (qn * qn + 1e-300);

  if (disc > 1e-3 && lin < 1e-8 && qn > 1e-6) {
    ProjPoint loc(p);
    return SingularPoint{loc, SingularKind::node, node_tangents(gc, m, loc.coords())};
  }
  if (qn < 1e-6 && lin < 1e-8)
    throw Error(ErrorCode::UnsupportedSingularity, "singular point of multiplicity three or more");

  // kernel of the local Hessian as the starting direction
  Jet jc(gc);
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(jc.hessian(Vec3(0, 0, 1)), Eigen::ComputeFullV);
  Eigen::Vector2cd k = svd.matrixV().col(1);
  Vec3 dir0 = m * Vec3(k(0), k(1), 0.0);

  auto cusp = degenerate_refine(f, p, dir0, false);
  if (!cusp) {
    if (lin < 1e-8 && disc > 1e-9 && qn > 1e-6) {
      ProjPoint loc(p);
      return SingularPoint{loc, SingularKind::node, node_tangents(gc, m, loc.coords())};
    }
    if (lin < 1e-8)
      throw Error(ErrorCode::UnsupportedSingularity, "could not resolve the local structure of a singular point");
    return std::nullopt;
  }

  auto local = [&](const DegenerateSolution& s) { return f.compose(frame_along(s.point, s.direction)).normalized(); };
  TernaryForm g = local(*cusp);
  Complex lam = g.coefficient(0, 2);
  if (std::abs(lam) < 1e-6)
    throw Error(ErrorCode::UnsupportedSingularity, "singular point of multiplicity three or more");
  if (std::abs(g.coefficient(3, 0)) > 1e-4 * std::abs(lam)) {
    ProjPoint loc(cusp->point);
    Mat3 fr = frame_along(cusp->point, cusp->direction);
    return SingularPoint{loc, SingularKind::cusp, {join(loc, ProjPoint(fr.col(0)))}};
  }
  auto tac = degenerate_refine(f, cusp->point, cusp->direction, true);
  if (!tac) {
    if (std::abs(g.coefficient(3, 0)) > 1e-7 * std::abs(lam)) {
      ProjPoint loc(cusp->point);
      Mat3 fr = frame_along(cusp->point, cusp->direction);
      return SingularPoint{loc, SingularKind::cusp, {join(loc, ProjPoint(fr.col(0)))}};
    }
    throw Error(ErrorCode::UnsupportedSingularity, "degenerate double point of unsupported type");
  }
  g = local(*tac);
  lam = g.coefficient(0, 2);
  Complex c21 = g.coefficient(2, 1), c40 = g.coefficient(4, 0);
  double scale = std::norm(c21) + std::abs(lam * c40);
  if (scale < 1e-10 || std::abs(c21 * c21 - 4.0 * lam * c40) < 1e-6 * scale)
    throw Error(ErrorCode::UnsupportedSingularity, "double point worse than a tacnode");
  ProjPoint loc(tac->point);
  Mat3 fr = frame_along(tac->point, tac->direction);
  return SingularPoint{loc, SingularKind::tacnode, {join(loc, ProjPoint(fr.col(0)))}};
}

}  // namespace

std::vector<SingularPoint> singular_points(const TernaryForm& f_in, double tol, std::uint64_t seed) {
  if (f_in.degree() < 2) return {};
  TernaryForm f = f_in.normalized();
  if (!is_reduced(f, seed + 1))
    throw Error(ErrorCode::UnsupportedSingularity, "curve has a repeated component");
  // partials are taken in random frames: in special coordinates two of them
  // can share a factor (e.g. xyz(x+y+z))
  Rng rng(seed);
  std::vector<Vec3> cands;
  for (std::uint64_t s = 0; s < 2; ++s) {
    Mat3 u = random_unitary(rng);
    TernaryForm g = f.compose(u);
    TernaryForm gx = g.derivative(0), gy = g.derivative(1), gz = g.derivative(2);
    for (auto& p : intersect_curves(gx, gy, seed * 7919 + s, 1e-9)) {
      Vec3 v = p.coords();
      if (std::abs(gz(v)) < 1e-6 && std::abs(g(v)) < 1e-6) cands.push_back(u * v);
    }
  }
  // cluster candidates (tacnodes give tight clusters)
  std::vector<Vec3> reps;
  for (auto& c : cands) {
    bool dup = false;
    for (auto& r : reps)
      if (projective_distance(r, c) < 1e-4) dup = true;
    if (!dup) reps.push_back(c);
  }
  std::vector<SingularPoint> out;
  for (auto& r : reps) {
    auto sp = classify(f, r);
    if (!sp) continue;
    if (f.gradient(sp->location.coords()).norm() > std::max(tol, 1e-10) * 100.0) continue;
    bool dup = false;
    for (auto& o : out)
      if (distance(o.location, sp->location) < 1e-6) dup = true;
    if (!dup) out.push_back(*sp);
  }
  std::sort(out.begin(), out.end(),
            [](const SingularPoint& a, const SingularPoint& b) { return a.location < b.location; });
  return out;
}

SingularityProfile profile_of(std::span<const SingularPoint> pts) {
  SingularityProfile p;
  for (auto& s : pts) {
    if (s.kind == SingularKind::node) ++p.delta;
    if (s.kind == SingularKind::cusp) ++p.kappa;
    if (s.kind == SingularKind::tacnode) ++p.tau;
  }
  return p;
}

SingularityProfile singularity_profile(const TernaryForm& f, double tol, std::uint64_t seed) {
  auto pts = singular_points(f, tol, seed);
  return profile_of(pts);
}

std::string_view to_string(QuarticGitClass c) {
  switch (c) {
    case QuarticGitClass::stable: return "stable";
    case QuarticGitClass::semistable_boundary: return "semistable_boundary";
    case QuarticGitClass::outside_V: return "outside_V";
  }
  return "?";
}

QuarticGitClass quartic_git_class(const TernaryForm& f, double tol, std::uint64_t seed) {
  if (f.degree() != 4) throw Error(ErrorCode::InvalidInput, "expected a quartic");
  if (!is_reduced(f, seed + 1)) return QuarticGitClass::outside_V;
  std::vector<SingularPoint> pts;
  try {
    pts = singular_points(f, tol, seed);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnsupportedSingularity) return QuarticGitClass::outside_V;
    throw;
  }
  for (auto& s : pts)
    if (s.kind == SingularKind::tacnode) return QuarticGitClass::semistable_boundary;
  return QuarticGitClass::stable;
}

}  // namespace thetaq
