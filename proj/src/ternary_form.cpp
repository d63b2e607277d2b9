#include "thetaq/ternary_form.hpp"

#include <cmath>
#include <string>

#include "thetaq/error.hpp"
#include "thetaq/numeric.hpp"
#include "thetaq/random.hpp"

namespace thetaq {

namespace {

std::vector<Complex> powers(Complex v, int d) {
  std::vector<Complex> p(d + 1);
  p[0] = 1.0;
  for (int i = 1; i <= d; ++i) p[i] = p[i - 1] * v;
  return p;
}

template <class Fn>
void for_each_monomial(int d, Fn&& fn) {
  std::size_t k = 0;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) fn(k++, a, b, d - a - b);
}

}  // namespace

TernaryForm::TernaryForm(int degree) : degree_(degree) {
  if (degree < 0) throw Error(ErrorCode::InvalidInput, "negative degree");
  coeffs_.assign(monomial_count(degree), Complex(0.0));
}

TernaryForm::TernaryForm(int degree, std::vector<Complex> coefficients)
    : degree_(degree), coeffs_(std::move(coefficients)) {
  if (degree < 0) throw Error(ErrorCode::InvalidInput, "negative degree");
  if (coeffs_.size() != monomial_count(degree))
    throw Error(ErrorCode::InvalidInput,
                "degree " + std::to_string(degree) + " needs " + std::to_string(monomial_count(degree)) +
                    " coefficients, got " + std::to_string(coeffs_.size()));
  for (auto& c : coeffs_)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw Error(ErrorCode::InvalidInput, "non-finite coefficient");
}

std::size_t TernaryForm::monomial_count(int d) {
  return static_cast<std::size_t>((d + 1) * (d + 2) / 2);
}

std::size_t TernaryForm::index(int d, int a, int b) {
  int r = d - a;
  return static_cast<std::size_t>(r * (r + 1) / 2 + (r - b));
}

TernaryForm TernaryForm::linear(const Vec3& l) {
  return TernaryForm(1, {l(0), l(1), l(2)});
}

TernaryForm TernaryForm::monomial(int degree, int a, int b, Complex c) {
  TernaryForm f(degree);
  f.set_coefficient(a, b, c);
  return f;
}

TernaryForm TernaryForm::quadratic(const Mat3& m) {
  TernaryForm f(2);
  f.set_coefficient(2, 0, m(0, 0));
  f.set_coefficient(0, 2, m(1, 1));
  f.set_coefficient(0, 0, m(2, 2));
  f.set_coefficient(1, 1, m(0, 1) + m(1, 0));
  f.set_coefficient(1, 0, m(0, 2) + m(2, 0));
  f.set_coefficient(0, 1, m(1, 2) + m(2, 1));
  return f;
}

Mat3 TernaryForm::conic_matrix() const {
  if (degree_ != 2) throw Error(ErrorCode::InvalidInput, "conic_matrix needs a quadratic form");
  Mat3 m;
  m(0, 0) = coefficient(2, 0);
  m(1, 1) = coefficient(0, 2);
  m(2, 2) = coefficient(0, 0);
  m(0, 1) = m(1, 0) = coefficient(1, 1) / 2.0;
  m(0, 2) = m(2, 0) = coefficient(1, 0) / 2.0;
  m(1, 2) = m(2, 1) = coefficient(0, 1) / 2.0;
  return m;
}

Complex TernaryForm::operator()(const Vec3& p) const {
  auto px = powers(p(0), degree_), py = powers(p(1), degree_), pz = powers(p(2), degree_);
  Complex s = 0.0;
  for_each_monomial(degree_, [&](std::size_t k, int a, int b, int e) { s += coeffs_[k] * px[a] * py[b] * pz[e]; });
  return s;
}

TernaryForm TernaryForm::derivative(int var) const {
  if (degree_ == 0) return TernaryForm(0);
  TernaryForm d(degree_ - 1);
  for_each_monomial(degree_, [&](std::size_t k, int a, int b, int e) {
    int ex[3] = {a, b, e};
    if (ex[var] == 0) return;
    Complex c = coeffs_[k] * static_cast<double>(ex[var]);
    ex[var] -= 1;
    d.set_coefficient(ex[0], ex[1], d.coefficient(ex[0], ex[1]) + c);
  });
  return d;
}

Vec3 TernaryForm::gradient(const Vec3& p) const {
  return Vec3(derivative(0)(p), derivative(1)(p), derivative(2)(p));
}

TernaryForm TernaryForm::substitute(const std::array<TernaryForm, 3>& q) const {
  int k = q[0].degree();
  if (q[1].degree() != k || q[2].degree() != k)
    throw Error(ErrorCode::InvalidInput, "substitute needs forms of equal degree");
  std::array<std::vector<TernaryForm>, 3> pw;
  for (int i = 0; i < 3; ++i) {
    pw[i].push_back(TernaryForm(0, {1.0}));
    for (int e = 1; e <= degree_; ++e) pw[i].push_back(pw[i].back() * q[i]);
  }
  TernaryForm out(degree_ * k);
  for_each_monomial(degree_, [&](std::size_t idx, int a, int b, int e) {
    if (coeffs_[idx] == Complex(0.0)) return;
    out = out + pw[0][a] * pw[1][b] * pw[2][e] * coeffs_[idx];
  });
  return out;
}

TernaryForm TernaryForm::compose(const Mat3& t) const {
  std::array<TernaryForm, 3> q = {linear(t.row(0).transpose()), linear(t.row(1).transpose()),
                                  linear(t.row(2).transpose())};
  return substitute(q);
}

double TernaryForm::norm() const {
  double s = 0.0;
  for (auto& c : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

TernaryForm TernaryForm::normalized() const {
  double n = norm();
  if (n == 0.0) throw Error(ErrorCode::DegenerateInput, "zero form");
  return *this * Complex(1.0 / n);
}

TernaryForm TernaryForm::canonical() const {
  TernaryForm f = normalized();
  for (auto& c : f.coeffs_) {
    if (std::abs(c) > 1e-8) {
      Complex ph = std::conj(c) / std::abs(c);
      for (auto& d : f.coeffs_) d *= ph;
      break;
    }
  }
  return f;
}

TernaryForm TernaryForm::operator+(const TernaryForm& o) const {
  if (o.degree_ != degree_) throw Error(ErrorCode::InvalidInput, "degree mismatch in sum");
  TernaryForm r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

TernaryForm TernaryForm::operator-(const TernaryForm& o) const { return *this + o * Complex(-1.0); }

TernaryForm TernaryForm::operator*(const TernaryForm& o) const {
  TernaryForm r(degree_ + o.degree_);
  for_each_monomial(degree_, [&](std::size_t i, int a, int b, int) {
    if (coeffs_[i] == Complex(0.0)) return;
    for_each_monomial(o.degree_, [&](std::size_t j, int a2, int b2, int) {
      std::size_t k = index(r.degree_, a + a2, b + b2);
      r.coeffs_[k] += coeffs_[i] * o.coeffs_[j];
    });
  });
  return r;
}

TernaryForm TernaryForm::operator*(Complex s) const {
  TernaryForm r = *this;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

TernaryForm random_form(int degree, Rng& rng) {
  std::vector<Complex> c(TernaryForm::monomial_count(degree));
  for (auto& x : c) x = rng.complex_normal();
  return TernaryForm(degree, std::move(c)).normalized();
}

double form_distance(const TernaryForm& f, const TernaryForm& g) {
  if (f.degree() != g.degree()) return 1.0;
  auto a = f.coefficients();
  auto b = g.coefficients();
  double na = f.norm(), nb = g.norm();
  Complex ip = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) ip += std::conj(a[i]) * b[i];
  ip /= na * nb;
  // sine of the angle as the norm of the rejection of b from a
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(b[i] / nb - ip * a[i] / na);
  return std::min(1.0, std::sqrt(s));
}

BinaryForm restrict_along(const TernaryForm& f, const Vec3& p, const Vec3& q) {
  int n = f.degree() + 1;
  std::vector<Complex> vals(n);
  for (int j = 0; j < n; ++j) vals[j] = f(p + root_of_unity(j, n) * q);
  return BinaryForm(interpolate_unit_circle(vals));
}

BinaryForm restrict_to_line(const TernaryForm& f, const ProjLine& l) {
  auto [p0, p1] = line_basis(l);
  return restrict_along(f, p0, p1);
}

}  // namespace thetaq
