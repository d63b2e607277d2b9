#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "thetaq/projective.hpp"

namespace thetaq {

/// Binary form of fixed degree d; coefficient k multiplies s^(d-k) t^k.
/// A root at infinity shows up as a vanishing top coefficient.
class BinaryForm {
 public:
  BinaryForm() = default;
  explicit BinaryForm(std::vector<Complex> coefficients);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::span<const Complex> coefficients() const { return c_; }
  Complex operator[](int k) const { return c_[k]; }

  Complex operator()(Complex s, Complex t) const;
  Complex at(Complex t) const { return (*this)(1.0, t); }
  double norm() const;

  /// Derivative of the affine polynomial in t (degree d-1).
  BinaryForm derivative() const;
  /// g'(s, t) = g(M (s, t)^T).
  BinaryForm transformed(const Eigen::Matrix2cd& m) const;

  BinaryForm operator*(const BinaryForm& o) const;
  BinaryForm operator*(Complex s) const;
  BinaryForm operator-(const BinaryForm& o) const;

 private:
  std::vector<Complex> c_;
};

struct HomogeneousRoot {
  Complex s;
  Complex t;
  int multiplicity = 1;
};

/// Real rotation making the top coefficient of g o R as large as possible
/// among a fixed set of angles.
Eigen::Matrix2cd dominant_rotation(const BinaryForm& g);

/// Roots (s : t) with multiplicity, including roots at infinity.
std::vector<HomogeneousRoot> binary_roots(const BinaryForm& g, double cluster_tol = 1e-6);

/// psc_j of univariate polynomials (coefficients low to high), j = 0 .. min(m, n)-1.
std::vector<Complex> principal_subresultants(std::span<const Complex> f, std::span<const Complex> g);

/// Degree of gcd(f, g): the smallest j with |psc_j| > tol (inputs normalized).
int subresultant_gcd_degree(std::span<const Complex> f, std::span<const Complex> g, double tol);

struct PerfectSquare {
  bool accepted = false;
  BinaryForm root;      // monic-like quadratic q with g ~ scale * q^2
  Complex scale = 0.0;
  double residual = 0.0;  // |g/|g| - c q^2| after polishing
  double psc0 = 0.0;
  double psc1 = 0.0;
};

/// Tests whether a binary quartic is a constant times the square of a
/// quadratic. Throws DegenerateInput if |g| <= 1e-13 (restrictions of
/// unit-norm forms).
PerfectSquare is_perfect_square(const BinaryForm& g, double tol = 1e-8);

}  // namespace thetaq
