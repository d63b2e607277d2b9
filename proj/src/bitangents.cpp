#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "thetaq/bivariate.hpp"
#include "thetaq/error.hpp"
#include "thetaq/numeric.hpp"
#include "thetaq/random.hpp"
#include "thetaq/roots.hpp"
#include "thetaq/tangency.hpp"
#include "thetaq/theta.hpp"

namespace thetaq {

namespace {

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// a_k(u, v): coefficients of t^k in G(1, t, -u - v t)
std::array<Bivariate, 5> chart_coefficients(const TernaryForm& g) {
  std::array<Eigen::MatrixXcd, 5> c;
  for (auto& m : c) m = Eigen::MatrixXcd::Zero(5, 5);
  for (int a = 4; a >= 0; --a)
    for (int b = 4 - a; b >= 0; --b) {
      int e = 4 - a - b;
      Complex coef = g.coefficient(a, b);
      if (coef == Complex(0.0)) continue;
      double sign = (e % 2 == 0) ? 1.0 : -1.0;
      for (int j = 0; j <= e; ++j) c[b + j](e - j, j) += coef * sign * binom(e, j);
    }
  std::array<Bivariate, 5> out;
  for (int k = 0; k < 5; ++k) out[k] = Bivariate(c[k]);
  return out;
}

struct Candidate {
  Vec3 line;
  double residual;
};

std::vector<Candidate> frame_candidates(const TernaryForm& f, const Mat3& u) {
  TernaryForm g = f.compose(u).normalized();
  auto a = chart_coefficients(g);
  Bivariate r1 = a[4] * a[4] * a[1] * Complex(8.0) - a[4] * a[3] * a[2] * Complex(4.0) + a[3] * a[3] * a[3];
  Bivariate q = a[4] * a[2] * Complex(4.0) - a[3] * a[3];
  Bivariate r2 = a[4] * a[4] * a[4] * a[0] * Complex(64.0) - q * q;

  // Res_u(R1, R2)(v) = a4(v)^8 B(v) with deg B = 28
  const int n = 64;
  std::vector<Complex> raw(n), defl(n);
  for (int j = 0; j < n; ++j) {
    Complex v = root_of_unity(j, n);
    std::vector<Complex> p1(4, 0.0), p2(5, 0.0);
    auto c1 = r1.in_x(v);
    auto c2 = r2.in_x(v);
    for (std::size_t i = 0; i < c1.size() && i < 4; ++i) p1[i] = c1[i];
    for (std::size_t i = 0; i < c2.size() && i < 5; ++i) p2[i] = c2[i];
    raw[j] = sylvester_resultant(p1, p2);
    Complex a4 = a[4](0.0, v);
    defl[j] = raw[j] / std::pow(a4, 8);
  }
  auto coeffs = interpolate_unit_circle(defl);
  double head = 0.0, tail = 0.0;
  for (int k = 0; k < n; ++k) (k <= 28 ? head : tail) = std::max(k <= 28 ? head : tail, std::abs(coeffs[k]));
  std::vector<Complex> poly;
  if (tail <= 1e-8 * head) {
    poly.assign(coeffs.begin(), coeffs.begin() + 29);
  } else {
    poly = interpolate_unit_circle(raw);
  }

  std::vector<Candidate> out;
  Mat3 back = u.conjugate();  // lines transform by U^{-T}
  for (auto& vr : univariate_roots(poly, 1e-10)) {
    std::vector<Complex> c1 = r1.in_x(vr.value);
    for (auto& ur : univariate_roots(c1, 1e-10)) {
      Vec3 l = back * Vec3(ur.value, vr.value, 1.0);
      auto fit = refine_bitangent(f, l);
      if (fit.converged) out.push_back({fit.line, fit.residual});
    }
  }
  return out;
}

}  // namespace

std::vector<ProjLine> perfect_square_lines(const TernaryForm& f_in, const ThetaOptions& opt) {
  TernaryForm f = f_in.normalized();
  Rng rng(opt.seed);
  std::vector<Mat3> frames;
  for (int i = 0; i < opt.frames; ++i) frames.push_back(random_unitary(rng));
  std::vector<std::vector<Candidate>> per(frames.size());
  parallel_for(frames.size(), opt.jobs, [&](std::size_t i) { per[i] = frame_candidates(f, frames[i]); });

  std::vector<Candidate> all;
  for (auto& v : per) all.insert(all.end(), v.begin(), v.end());
  std::stable_sort(all.begin(), all.end(), [](const Candidate& a, const Candidate& b) { return a.residual < b.residual; });
  std::vector<ProjLine> out;
  for (auto& c : all) {
    bool dup = false;
    for (auto& o : out)
      if (projective_distance(o.coords(), c.line) < 1e-6) {
        dup = true;
        break;
      }
    if (dup) continue;
    ProjLine l(c.line);
    BinaryForm g = restrict_to_line(f, l);
    if (g.norm() <= 1e-13) continue;
    if (is_perfect_square(g, opt.tol).accepted) out.push_back(l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ProjPoint> contact_points(const TernaryForm& f, const ProjLine& l, bool* hyperflex) {
  auto [p0, p1] = line_basis(l);
  auto ps = is_perfect_square(restrict_to_line(f, l), 1.0);
  std::vector<ProjPoint> pts;
  for (auto& r : binary_roots(ps.root, 1e-6))
    for (int k = 0; k < r.multiplicity; ++k) pts.emplace_back(r.s * p0 + r.t * p1);
  if (hyperflex) *hyperflex = pts.size() == 2 && distance(pts[0], pts[1]) < 1e-6;
  return pts;
}

std::vector<ThetaLine> bitangents_smooth(const TernaryForm& f_in, const ThetaOptions& opt) {
  if (f_in.degree() != 4) throw Error(ErrorCode::InvalidInput, "expected a quartic");
  TernaryForm f = f_in.normalized();
  std::vector<SingularPoint> sing;
  try {
    sing = singular_points(f, opt.tol, opt.seed);
  } catch (const Error&) {
    throw Error(ErrorCode::NearSingularInput, "curve is singular");
  }
  if (!sing.empty()) throw Error(ErrorCode::NearSingularInput, "curve is singular");
  auto lines = perfect_square_lines(f, opt);
  if (lines.size() != 28)
    throw Error(ErrorCode::CountMismatch, "found " + std::to_string(lines.size()) + " bitangents, expected 28");
  std::vector<ThetaLine> out;
  for (auto& l : lines) {
    ThetaLine t{l};
    t.contacts = contact_points(f, l, &t.hyperflex);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace thetaq
