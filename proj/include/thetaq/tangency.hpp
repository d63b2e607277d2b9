#pragma once

#include <array>

#include <Eigen/Core>

#include "thetaq/projective.hpp"
#include "thetaq/ternary_form.hpp"

namespace thetaq {

/// Holomorphic chart of the dual plane around a line C: lines are
/// C + alpha U1 + beta U2, and the points of a line L are parametrized as
/// s (L x W0) + t (L x W1), with W0, W1 fixed so that the top coefficient of
/// the restriction of the reference form at C is dominant.
class LineChart {
 public:
  LineChart(const Vec3& center, const TernaryForm& reference);

  const Vec3& center() const { return c_; }
  Vec3 line(Complex alpha, Complex beta) const { return c_ + alpha * u1_ + beta * u2_; }
  std::array<Complex, 5> restriction(const TernaryForm& f, const Vec3& line) const;

 private:
  Vec3 c_, u1_, u2_, w0_, w1_;
};

/// a_k - a_4 s_k(b1, b0), k = 0..3, where s are the coefficients of
/// (t^2 + b1 t + b0)^2.
Eigen::Vector4cd tangency_equations(const std::array<Complex, 5>& a, Complex b1, Complex b0);

/// Square-root guess (b1, b0) from the top three coefficients.
std::pair<Complex, Complex> square_root_guess(const std::array<Complex, 5>& a);

struct BitangentFit {
  Vec3 line;
  double residual = 0.0;  // relative to the restriction norm
  bool converged = false;
};

/// Newton refinement of an approximate bitangent of a unit-norm quartic in
/// the unknowns (alpha, beta, b1, b0).
BitangentFit refine_bitangent(const TernaryForm& f, const Vec3& guess, int max_iterations = 40);

}  // namespace thetaq
