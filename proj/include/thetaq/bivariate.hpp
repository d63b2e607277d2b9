#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "thetaq/projective.hpp"

namespace thetaq {

class TernaryForm;

/// Dense polynomial sum c(i, j) x^i y^j.
class Bivariate {
 public:
  Bivariate() : c_(Eigen::MatrixXcd::Zero(1, 1)) {}
  explicit Bivariate(Eigen::MatrixXcd c);

  /// Dehomogenization at z = 1.
  static Bivariate from_form(const TernaryForm& f);

  const Eigen::MatrixXcd& coefficients() const { return c_; }
  int degree_x() const;
  int degree_y() const;

  Complex operator()(Complex x, Complex y) const;
  std::vector<Complex> in_x(Complex y) const;  // univariate in x at fixed y
  std::vector<Complex> in_y(Complex x) const;

  Bivariate operator+(const Bivariate& o) const;
  Bivariate operator-(const Bivariate& o) const;
  Bivariate operator*(const Bivariate& o) const;
  Bivariate operator*(Complex s) const;

 private:
  Eigen::MatrixXcd c_;
};

enum class Variable { x, y };

/// Resultant of univariate polynomials with formal degrees size-1.
Complex sylvester_resultant(std::span<const Complex> f, std::span<const Complex> g);

/// Res_{eliminated}(e1, e2) as a polynomial in the other variable, by
/// evaluation on roots of unity and interpolation.
std::vector<Complex> resultant_eliminate(const Bivariate& e1, const Bivariate& e2, Variable eliminated);

/// All intersection points of two plane curves without common components,
/// found in a random unitary frame.
std::vector<ProjPoint> intersect_curves(const TernaryForm& a, const TernaryForm& b, std::uint64_t seed,
                                        double residual_tol = 1e-9);

}  // namespace thetaq
