#include "thetaq/tangency.hpp"

#include <cmath>
#include <numbers>

#include "thetaq/numeric.hpp"

namespace thetaq {

LineChart::LineChart(const Vec3& center, const TernaryForm& reference) {
  c_ = center / center.norm();
  auto [a, b] = orthonormal_complement(c_);
  u1_ = a;
  u2_ = b;
  // det(C, U1, U2) is unimodular, so L x U1 and L x U2 span L near C
  Vec3 w0 = u1_, w1 = u2_;
  double best = -1.0;
  for (int j = 0; j < 8; ++j) {
    double th = std::numbers::pi * j / 8.0;
    Vec3 cand1 = -std::sin(th) * w0 + std::cos(th) * w1;
    double v = std::abs(reference(cross(c_, cand1)));
    if (v > best * (1.0 + 1e-12)) {
      best = v;
      w0_ = std::cos(th) * w0 + std::sin(th) * w1;
      w1_ = cand1;
    }
  }
}

std::array<Complex, 5> LineChart::restriction(const TernaryForm& f, const Vec3& line) const {
  BinaryForm g = restrict_along(f, cross(line, w0_), cross(line, w1_));
  return {g[0], g[1], g[2], g[3], g[4]};
}

Eigen::Vector4cd tangency_equations(const std::array<Complex, 5>& a, Complex b1, Complex b0) {
  Eigen::Vector4cd r;
  r(0) = a[0] - a[4] * b0 * b0;
  r(1) = a[1] - a[4] * 2.0 * b1 * b0;
  r(2) = a[2] - a[4] * (b1 * b1 + 2.0 * b0);
  r(3) = a[3] - a[4] * 2.0 * b1;
  return r;
}

std::pair<Complex, Complex> square_root_guess(const std::array<Complex, 5>& a) {
  Complex b1 = a[3] / (2.0 * a[4]);
  Complex b0 = (a[2] / a[4] - b1 * b1) / 2.0;
  return {b1, b0};
}

BitangentFit refine_bitangent(const TernaryForm& f, const Vec3& guess, int max_iterations) {
  BitangentFit out;
  Vec3 center = guess / guess.norm();
  for (int pass = 0; pass < 2; ++pass) {
    LineChart chart(center, f);
    auto a0 = chart.restriction(f, center);
    double scale = 0.0;
    for (auto& x : a0) scale += std::norm(x);
    scale = std::sqrt(scale);
    auto [b1, b0] = square_root_guess(a0);
    auto res = [&](const VectorXc& z) -> VectorXc {
      auto a = chart.restriction(f, chart.line(z(0), z(1)));
      return tangency_equations(a, z(2), z(3)) / scale;
    };
    VectorXc z(4);
    z << 0.0, 0.0, b1, b0;
    NewtonOptions opt;
    opt.max_iterations = max_iterations;
    opt.residual_tolerance = 1e-15;
    auto sol = gauss_newton(res, z, opt);
    Vec3 l = chart.line(sol.z(0), sol.z(1));
    if (!l.allFinite() || l.norm() == 0.0) {
      out.converged = false;
      return out;
    }
    center = l / l.norm();
    out.line = center;
    out.residual = sol.residual;
    out.converged = sol.residual < 1e-11;
    if (!out.converged) return out;
  }
  return out;
}

}  // namespace thetaq
