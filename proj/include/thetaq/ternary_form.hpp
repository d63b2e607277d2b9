#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "thetaq/binary_form.hpp"
#include "thetaq/projective.hpp"

namespace thetaq {

class Rng;

/// Homogeneous polynomial in (x, y, z). Coefficients are stored for
/// exponents (a, b, d-a-b), a from d down to 0, then b from d-a down to 0.
class TernaryForm {
 public:
  TernaryForm() : TernaryForm(0) {}
  explicit TernaryForm(int degree);  // zero form
  TernaryForm(int degree, std::vector<Complex> coefficients);

  static std::size_t monomial_count(int degree);
  static std::size_t index(int degree, int a, int b);
  static TernaryForm linear(const Vec3& l);
  static TernaryForm monomial(int degree, int a, int b, Complex c = 1.0);
  /// x^T A x for a symmetric 3x3 matrix.
  static TernaryForm quadratic(const Mat3& a);

  int degree() const { return degree_; }
  std::span<const Complex> coefficients() const { return coeffs_; }
  Complex coefficient(int a, int b) const { return coeffs_[index(degree_, a, b)]; }
  void set_coefficient(int a, int b, Complex c) { coeffs_[index(degree_, a, b)] = c; }

  Complex operator()(const Vec3& p) const;
  TernaryForm derivative(int var) const;
  Vec3 gradient(const Vec3& p) const;

  /// G(v) = F(T v).
  TernaryForm compose(const Mat3& t) const;
  /// F(q0, q1, q2) for forms of a common degree.
  TernaryForm substitute(const std::array<TernaryForm, 3>& q) const;

  /// Symmetric matrix of a quadratic form.
  Mat3 conic_matrix() const;

  double norm() const;
  bool is_zero() const { return norm() == 0.0; }
  TernaryForm normalized() const;
  /// Unit norm with the first coefficient of modulus > 1e-8 real positive.
  TernaryForm canonical() const;

  TernaryForm operator+(const TernaryForm& o) const;
  TernaryForm operator-(const TernaryForm& o) const;
  TernaryForm operator*(const TernaryForm& o) const;
  TernaryForm operator*(Complex s) const;

 private:
  int degree_;
  std::vector<Complex> coeffs_;
};

TernaryForm random_form(int degree, Rng& rng);

/// Projective distance between coefficient vectors of equal degree.
double form_distance(const TernaryForm& f, const TernaryForm& g);

/// g(s, t) = F(s p + t q).
BinaryForm restrict_along(const TernaryForm& f, const Vec3& p, const Vec3& q);
/// Restriction in the canonical basis of the line.
BinaryForm restrict_to_line(const TernaryForm& f, const ProjLine& l);

}  // namespace thetaq
