#include "thetaq/reconstruct.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "thetaq/error.hpp"
#include "thetaq/numeric.hpp"
#include "thetaq/random.hpp"
#include "thetaq/tangency.hpp"

namespace thetaq {

namespace {

bool form_less(const TernaryForm& a, const TernaryForm& b) {
  auto ca = a.coefficients(), cb = b.coefficients();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i].real() != cb[i].real()) return ca[i].real() < cb[i].real();
    if (ca[i].imag() != cb[i].imag()) return ca[i].imag() < cb[i].imag();
  }
  return false;
}

double verify_against(const ThetaConfig& input, const ThetaConfig& got, double tol) {
  MatchResult m = match_configs(input, got, tol);
  if (!m.success)
    throw Error(ErrorCode::VerificationFailed,
                "theta-curve of the reconstruction does not match (" + m.reason + ", distance " +
                    std::to_string(m.max_distance) + ")");
  return m.max_distance;
}

// roots (mu, lambda) of p0 mu^2 + p1 mu lambda + p2 lambda^2
std::array<std::pair<Complex, Complex>, 2> binary_quadratic_roots(Complex p0, Complex p1, Complex p2) {
  double scale = std::max({std::abs(p0), std::abs(p1), std::abs(p2)});
  if (scale == 0.0) throw Error(ErrorCode::DegenerateDiscriminant, "pencil discriminant vanishes identically");
  p0 /= scale, p1 /= scale, p2 /= scale;
  Complex d = std::sqrt(p1 * p1 - 4.0 * p0 * p2);
  if (std::abs(d) < 1e-8) throw Error(ErrorCode::DegenerateDiscriminant, "double root in the pencil");
  bool mu_free = std::abs(p0) >= std::abs(p2);  // solve for mu/lambda, else lambda/mu
  Complex a = mu_free ? p0 : p2, c = mu_free ? p2 : p0;
  Complex q = std::abs(p1 + d) >= std::abs(p1 - d) ? -(p1 + d) / 2.0 : -(p1 - d) / 2.0;
  Complex r1 = q / a, r2 = c / q;
  if (mu_free) return {{{r1, 1.0}, {r2, 1.0}}};
  return {{{1.0, r1}, {1.0, r2}}};
}

// (A, B, C) of the restriction A s^2 + B s t + C t^2
std::array<Complex, 3> quad_coeffs(const TernaryForm& q, const ProjLine& l) {
  BinaryForm g = restrict_to_line(q, l);
  return {g[0], g[1], g[2]};
}

Recognition require_class(const ThetaConfig& cfg, CurveClass want, double tol) {
  Recognition r = recognize_class(cfg, tol);
  if (r.curve_class != want)
    throw Error(ErrorCode::VerificationFailed, "configuration is recognized as " + std::string(to_string(r.curve_class)) +
                                                   ", not " + std::string(to_string(want)));
  return r;
}

}  // namespace

Vec3 cremona(const Vec3& p) { return Vec3(p(1) * p(2), p(2) * p(0), p(0) * p(1)); }

Vec3 cremona_line(const Vec3& l, int k) {
  switch (k) {
    case 0: return Vec3(0, l(2), l(1));
    case 1: return Vec3(l(2), 0, l(0));
    case 2: return Vec3(l(1), l(0), 0);
  }
  throw Error(ErrorCode::InvalidInput, "base point index out of range");
}

ReconstructionResult reconstruct_split(const ThetaConfig& cfg, double tol) {
  ReconstructionResult res;
  res.certificate = require_class(cfg, CurveClass::split, tol);
  const auto& n = res.certificate.nodes;
  auto e = [&](int i, int j) { return TernaryForm::linear(join(n[i], n[j]).coords()); };
  TernaryForm q0 = e(0, 1) * e(2, 3), q1 = e(0, 2) * e(1, 3);

  IncidenceReport rep = incidence(cfg, tol);
  const SupportLine* simple = nullptr;
  for (auto& l : rep.lines)
    if (l.multiplicity == 1) {
      simple = &l;
      break;
    }
  if (!simple) throw Error(ErrorCode::VerificationFailed, "no simple line");
  auto [a0, b0, c0] = quad_coeffs(q0, simple->line);
  auto [a1, b1, c1] = quad_coeffs(q1, simple->line);
  auto roots = binary_quadratic_roots(b0 * b0 - 4.0 * a0 * c0, 2.0 * b0 * b1 - 4.0 * (a0 * c1 + a1 * c0),
                                      b1 * b1 - 4.0 * a1 * c1);
  for (auto& [mu, lambda] : roots) res.components.push_back((q0 * mu + q1 * lambda).canonical());
  std::sort(res.components.begin(), res.components.end(), form_less);
  res.curve = (res.components[0] * res.components[1]).canonical();

  ThetaConfig got;
  try {
    got = theta_reducible(res.components);
  } catch (const Error& err) {
    throw Error(ErrorCode::VerificationFailed, std::string("reconstructed pair rejected: ") + err.what());
  }
  res.residual = verify_against(cfg, got, tol);
  return res;
}

ReconstructionResult reconstruct_trinodal(const ThetaConfig& cfg, double tol) {
  ReconstructionResult res;
  res.certificate = require_class(cfg, CurveClass::trinodal, tol);
  const auto& n = res.certificate.nodes;
  Mat3 t;
  for (int i = 0; i < 3; ++i) t.col(i) = n[i].coords();

  IncidenceReport rep = incidence(cfg, tol);
  Eigen::Matrix<Complex, 6, 6> m;
  int row = 0;
  for (auto& sl : rep.lines) {
    if (sl.multiplicity != 2) continue;
    Vec3 l = t.transpose() * sl.line.coords();
    l /= l.norm();
    int k = 0;
    for (int i = 1; i < 3; ++i)
      if (std::abs(l(i)) < std::abs(l(k))) k = i;
    l(k) = 0.0;
    Vec3 u = canonical(cremona_line(l, k));
    m.row(row++) << u(0) * u(0), u(1) * u(1), u(2) * u(2), u(0) * u(1), u(0) * u(2), u(1) * u(2);
  }
  Eigen::JacobiSVD<Eigen::Matrix<Complex, 6, 6>> svd(m, Eigen::ComputeFullV);
  auto s = svd.singularValues();
  if (s(4) < 1e-9 * s(0)) throw Error(ErrorCode::RankDeficient, "dual conic fit has rank below 5");
  if (s(5) >= 1e-4 * s(4)) throw Error(ErrorCode::InconsistentSixthLine, "the six image lines are not tangent to a conic");
  auto v = svd.matrixV().col(5);
  Mat3 d;
  d << v(0), v(3) / 2.0, v(4) / 2.0, v(3) / 2.0, v(1), v(5) / 2.0, v(4) / 2.0, v(5) / 2.0, v(2);
  TernaryForm conic = TernaryForm::quadratic(adjugate(d));
  if (conic.norm() < 1e-12) throw Error(ErrorCode::RankDeficient, "fitted dual conic is a double line");
  TernaryForm pulled = conic.normalized().substitute(
      {TernaryForm::monomial(2, 0, 1), TernaryForm::monomial(2, 1, 0), TernaryForm::monomial(2, 1, 1)});
  res.curve = pulled.compose(t.inverse()).canonical();

  ThetaConfig got;
  try {
    got = theta_curve(res.curve);
  } catch (const Error& err) {
    throw Error(ErrorCode::VerificationFailed, std::string("reconstructed curve rejected: ") + err.what());
  }
  res.residual = verify_against(cfg, got, tol);
  return res;
}

namespace {

// affine coordinates of a line in the chart dividing by entry k
Eigen::Vector2cd chart_coords(const Vec3& l, int k) {
  Eigen::Vector2cd c;
  int j = 0;
  for (int i = 0; i < 3; ++i)
    if (i != k) c(j++) = l(i) / l(k);
  return c;
}

std::vector<Vec3> follow(const TernaryForm& f, const std::vector<Vec3>& lines) {
  TernaryForm g = f.normalized();
  std::vector<Vec3> out;
  for (auto& l : lines) {
    BitangentFit fit = refine_bitangent(g, l);
    if (!fit.converged) throw Error(ErrorCode::MatchingFailed, "bitangent lost under perturbation");
    out.push_back(fit.line);
  }
  Eigen::MatrixXd cost(lines.size(), lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = 0; j < lines.size(); ++j) cost(i, j) = projective_distance(lines[i], out[j]);
  auto assign = min_cost_assignment(cost);
  for (std::size_t i = 0; i < assign.size(); ++i)
    if (assign[i] != static_cast<int>(i)) throw Error(ErrorCode::MatchingFailed, "perturbation permutes bitangents");
  return out;
}

struct Base {
  TernaryForm f;
  std::vector<Vec3> lines;
  std::vector<int> chart;
};

Base smooth_base(const TernaryForm& f, std::uint64_t seed) {
  Base b{f.normalized(), {}, {}};
  ThetaOptions opt;
  opt.seed = seed;
  for (auto& t : bitangents_smooth(b.f, opt)) {
    if (t.hyperflex) throw Error(ErrorCode::InvalidInput, "curve has a hyperflex");
    Vec3 v = t.line.coords();
    int k = 0;
    for (int i = 1; i < 3; ++i)
      if (std::abs(v(i)) > std::abs(v(k))) k = i;
    b.lines.push_back(v);
    b.chart.push_back(k);
  }
  return b;
}

Eigen::VectorXcd derivative(const Base& b, const TernaryForm& dir, double step) {
  auto plus = follow(b.f + dir * step, b.lines);
  auto minus = follow(b.f - dir * step, b.lines);
  Eigen::VectorXcd col(2 * b.lines.size());
  for (std::size_t j = 0; j < b.lines.size(); ++j)
    col.segment<2>(2 * j) = (chart_coords(plus[j], b.chart[j]) - chart_coords(minus[j], b.chart[j])) / (2.0 * step);
  return col;
}

}  // namespace

ImmersionReport immersion_rank(const TernaryForm& f, double step, double tol, std::uint64_t seed, unsigned jobs) {
  Base b = smooth_base(f, seed);
  const std::size_t nc = TernaryForm::monomial_count(4);
  Eigen::MatrixXcd jac(2 * b.lines.size(), nc);
  parallel_for(nc, jobs, [&](std::size_t i) {
    std::vector<Complex> c(nc, 0.0);
    c[i] = 1.0;
    jac.col(i) = derivative(b, TernaryForm(4, c), step);
  });
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(jac);
  ImmersionReport rep;
  auto s = svd.singularValues();
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    rep.singular_values.push_back(s(i));
    if (s(i) > tol * s(0)) ++rep.rank;
  }
  return rep;
}

double bitangent_derivative(const TernaryForm& f, const TernaryForm& g, double step, std::uint64_t seed) {
  Base b = smooth_base(f, seed);
  // direction relative to the normalized base
  auto col = derivative(b, g * (1.0 / f.norm()), step);
  return col.cwiseAbs().maxCoeff();
}

namespace {

// Curves G sharing the 28 bitangents of F: unknowns are the coefficients of
// G and a square root (b1, b0) per line; residuals are the tangency
// equations plus <F, G> = 1.
class SharedBitangents {
 public:
  SharedBitangents(const TernaryForm& f, const std::vector<Vec3>& lines) : f_(f.normalized()) {
    const std::size_t nc = TernaryForm::monomial_count(4);
    for (auto& l : lines) {
      LineChart chart(l, f_);
      Eigen::Matrix<Complex, 5, Eigen::Dynamic> r(5, nc);
      for (std::size_t i = 0; i < nc; ++i) {
        std::vector<Complex> c(nc, 0.0);
        c[i] = 1.0;
        auto a = chart.restriction(TernaryForm(4, c), l);
        for (int k = 0; k < 5; ++k) r(k, i) = a[k];
      }
      restrict_.push_back(r);
    }
  }

  std::size_t unknowns() const { return 15 + 2 * restrict_.size(); }

  Eigen::VectorXcd start(const TernaryForm& g) const {
    Eigen::VectorXcd z(unknowns());
    auto c = g.coefficients();
    for (int i = 0; i < 15; ++i) z(i) = c[i];
    for (std::size_t j = 0; j < restrict_.size(); ++j) {
      Eigen::Matrix<Complex, 5, 1> a = restrict_[j] * z.head(15);
      auto [b1, b0] = square_root_guess({a(0), a(1), a(2), a(3), a(4)});
      z(15 + 2 * j) = b1;
      z(16 + 2 * j) = b0;
    }
    return z;
  }

  void evaluate(const Eigen::VectorXcd& z, Eigen::VectorXcd& r, Eigen::MatrixXcd& jac) const {
    const std::size_t m = restrict_.size();
    r.setZero(4 * m + 1);
    jac.setZero(4 * m + 1, unknowns());
    auto g = z.head(15);
    for (std::size_t j = 0; j < m; ++j) {
      Eigen::Matrix<Complex, 5, 1> a = restrict_[j] * g;
      Complex b1 = z(15 + 2 * j), b0 = z(16 + 2 * j);
      Complex s[4] = {b0 * b0, 2.0 * b1 * b0, b1 * b1 + 2.0 * b0, 2.0 * b1};
      Complex ds1[4] = {0.0, 2.0 * b0, 2.0 * b1, 2.0};
      Complex ds0[4] = {2.0 * b0, 2.0 * b1, 2.0, 0.0};
      for (int k = 0; k < 4; ++k) {
        std::size_t row = 4 * j + k;
        r(row) = a(k) - a(4) * s[k];
        jac.row(row).head(15) = restrict_[j].row(k) - s[k] * restrict_[j].row(4);
        jac(row, 15 + 2 * j) = -a(4) * ds1[k];
        jac(row, 16 + 2 * j) = -a(4) * ds0[k];
      }
    }
    auto fc = f_.coefficients();
    for (int i = 0; i < 15; ++i) {
      r(4 * m) += std::conj(fc[i]) * g(i);
      jac(4 * m, i) = std::conj(fc[i]);
    }
    r(4 * m) -= 1.0;
  }

  // Gauss-Newton; returns the final residual norm
  double solve(Eigen::VectorXcd& z, int max_iterations) const {
    Eigen::VectorXcd r;
    Eigen::MatrixXcd jac;
    evaluate(z, r, jac);
    double res = r.norm();
    for (int it = 0; it < max_iterations && res > 1e-13; ++it) {
      Eigen::VectorXcd dz = jac.colPivHouseholderQr().solve(-r);
      double lambda = 1.0;
      bool moved = false;
      for (int bt = 0; bt < 12; ++bt, lambda /= 2) {
        Eigen::VectorXcd zn = z + lambda * dz;
        Eigen::VectorXcd rn;
        Eigen::MatrixXcd jn;
        evaluate(zn, rn, jn);
        if (rn.allFinite() && rn.norm() < res) {
          z = zn, r = rn, jac = jn, res = rn.norm();
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
    return res;
  }

  const TernaryForm& base() const { return f_; }

 private:
  TernaryForm f_;
  std::vector<Eigen::Matrix<Complex, 5, Eigen::Dynamic>> restrict_;
};

}  // namespace

PropertyReport verify_theta_property(const TernaryForm& f, std::span<const TernaryForm> components, double tol,
                                     std::uint64_t seed, int restarts, unsigned jobs) {
  PropertyReport rep;
  ThetaOptions opt;
  opt.seed = seed;
  opt.jobs = jobs;
  ThetaConfig cfg = components.empty() ? theta_curve(f, opt) : theta_curve(f, components, opt);
  rep.curve_class = recognize_class(cfg, tol).curve_class;

  if (rep.curve_class == CurveClass::split || rep.curve_class == CurveClass::trinodal) {
    rep.method = "reconstruction";
    auto r = rep.curve_class == CurveClass::split ? reconstruct_split(cfg, tol) : reconstruct_trinodal(cfg, tol);
    rep.distance = form_distance(r.curve, f);
    if (rep.distance > tol)
      throw Error(ErrorCode::PropertyViolationWitness, "reconstruction differs from the input curve");
    rep.verified = true;
    return rep;
  }
  if (rep.curve_class != CurveClass::smooth) {
    rep.method = "none";
    return rep;
  }

  rep.method = "local search";
  rep.rank = immersion_rank(f, 1e-6, 1e-6, seed, jobs).rank;
  std::vector<Vec3> lines;
  for (auto& t : cfg.lines) lines.push_back(t.line.coords());
  SharedBitangents sys(f, lines);
  rep.restarts = restarts;

  enum Outcome { returned, degenerate, failed, distinct };
  std::vector<Outcome> outcome(restarts, failed);
  std::vector<TernaryForm> found(restarts);
  parallel_for(restarts, jobs, [&](std::size_t i) {
    Rng rng(seed * 1000003 + i);
    double eps = 0.1 + 0.9 * rng.uniform();
    TernaryForm g0 = sys.base() + random_form(4, rng) * eps;
    Eigen::VectorXcd z = sys.start(g0);
    double res = sys.solve(z, 60);
    if (!(res < 1e-9)) return;
    std::vector<Complex> c(z.data(), z.data() + 15);
    TernaryForm g(4, c);
    if (form_distance(g, sys.base()) < 1e-6) {
      outcome[i] = returned;
      return;
    }
    if (quartic_git_class(g) == QuarticGitClass::outside_V) {
      outcome[i] = degenerate;
      return;
    }
    outcome[i] = distinct;
    found[i] = g;
  });
  for (int i = 0; i < restarts; ++i) {
    if (outcome[i] == distinct)
      throw Error(ErrorCode::PropertyViolationWitness, "a distinct curve shares the 28 bitangents (restart " +
                                                           std::to_string(i) + ")");
    rep.returned += outcome[i] == returned;
    rep.degenerate += outcome[i] == degenerate;
    rep.failed += outcome[i] == failed;
  }
  rep.verified = rep.rank == 14;
  return rep;
}

}  // namespace thetaq
