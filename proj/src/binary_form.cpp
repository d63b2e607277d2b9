#include "thetaq/binary_form.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/LU>
#include <Eigen/QR>

#include "thetaq/error.hpp"
#include "thetaq/numeric.hpp"
#include "thetaq/roots.hpp"

namespace thetaq {

BinaryForm::BinaryForm(std::vector<Complex> coefficients) : c_(std::move(coefficients)) {
  if (c_.empty()) throw Error(ErrorCode::InvalidInput, "binary form needs at least one coefficient");
}

Complex BinaryForm::operator()(Complex s, Complex t) const {
  const int d = degree();
  Complex sum = 0.0, tp = 1.0;
  std::vector<Complex> sp(d + 1);
  sp[0] = 1.0;
  for (int i = 1; i <= d; ++i) sp[i] = sp[i - 1] * s;
  for (int k = 0; k <= d; ++k) {
    sum += c_[k] * sp[d - k] * tp;
    tp *= t;
  }
  return sum;
}

double BinaryForm::norm() const {
  double s = 0.0;
  for (auto& c : c_) s += std::norm(c);
  return std::sqrt(s);
}

BinaryForm BinaryForm::derivative() const {
  if (degree() == 0) return BinaryForm({0.0});
  std::vector<Complex> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<double>(k);
  return BinaryForm(std::move(d));
}

BinaryForm BinaryForm::transformed(const Eigen::Matrix2cd& m) const {
  const int n = degree() + 1;
  std::vector<Complex> vals(n);
  for (int j = 0; j < n; ++j) {
    Complex t = root_of_unity(j, n);
    vals[j] = (*this)(m(0, 0) + m(0, 1) * t, m(1, 0) + m(1, 1) * t);
  }
  return BinaryForm(interpolate_unit_circle(vals));
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
  std::vector<Complex> r(c_.size() + o.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return BinaryForm(std::move(r));
}

BinaryForm BinaryForm::operator*(Complex s) const {
  BinaryForm r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const {
  if (o.degree() != degree()) throw Error(ErrorCode::InvalidInput, "degree mismatch");
  BinaryForm r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

Eigen::Matrix2cd dominant_rotation(const BinaryForm& g) {
  double best = -1.0;
  Eigen::Matrix2cd out = Eigen::Matrix2cd::Identity();
  for (int j = 0; j < 8; ++j) {
    double th = std::numbers::pi * j / 8.0;
    double c = std::cos(th), s = std::sin(th);
    double v = std::abs(g(-s, c));
    if (v > best * (1.0 + 1e-12)) {
      best = v;
      out << c, -s, s, c;
    }
  }
  return out;
}

std::vector<HomogeneousRoot> binary_roots(const BinaryForm& g, double cluster_tol) {
  if (g.norm() == 0.0) throw Error(ErrorCode::DegenerateInput, "zero binary form");
  Eigen::Matrix2cd r = dominant_rotation(g);
  BinaryForm h = g.transformed(r) * Complex(1.0 / g.norm());
  std::vector<HomogeneousRoot> out;
  for (auto& rc : univariate_roots(h.coefficients(), cluster_tol)) {
    Eigen::Vector2cd st = r * Eigen::Vector2cd(1.0, rc.value);
    st /= st.norm();
    out.push_back({st(0), st(1), rc.multiplicity});
  }
  return out;
}

std::vector<Complex> principal_subresultants(std::span<const Complex> f, std::span<const Complex> g) {
  const int m = static_cast<int>(f.size()) - 1;
  const int n = static_cast<int>(g.size()) - 1;
  std::vector<Complex> psc;
  for (int j = 0; j < std::min(m, n); ++j) {
    const int sz = m + n - 2 * j;
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(sz, sz);
    // column c holds degree m+n-j-1-c
    auto col = [&](int deg) { return m + n - j - 1 - deg; };
    int row = 0;
    for (int i = n - j - 1; i >= 0; --i, ++row)
      for (int k = 0; k <= m; ++k) {
        int c = col(i + k);
        if (c >= 0 && c < sz) s(row, c) = f[k];
      }
    for (int i = m - j - 1; i >= 0; --i, ++row)
      for (int k = 0; k <= n; ++k) {
        int c = col(i + k);
        if (c >= 0 && c < sz) s(row, c) = g[k];
      }
    psc.push_back(s.determinant());
  }
  return psc;
}

int subresultant_gcd_degree(std::span<const Complex> f, std::span<const Complex> g, double tol) {
  auto psc = principal_subresultants(f, g);
  for (std::size_t j = 0; j < psc.size(); ++j)
    if (std::abs(psc[j]) > tol) return static_cast<int>(j);
  return static_cast<int>(psc.size());
}

PerfectSquare is_perfect_square(const BinaryForm& g, double tol) {
  if (g.degree() != 4) throw Error(ErrorCode::InvalidInput, "perfect-square test expects a binary quartic");
  double gn = g.norm();
  // callers pass restrictions of unit-norm forms
  if (gn <= 1e-13) throw Error(ErrorCode::DegenerateInput, "restriction vanishes identically");
  Eigen::Matrix2cd rot = dominant_rotation(g);
  BinaryForm h = g.transformed(rot);
  h = h * Complex(1.0 / h.norm());

  PerfectSquare out;
  auto psc = principal_subresultants(h.coefficients(), h.derivative().coefficients());
  out.psc0 = std::abs(psc[0]);
  out.psc1 = std::abs(psc[1]);

  Complex c = h[4];
  Complex b1 = h[3] / (2.0 * h[4]);
  Complex b0 = (h[2] / h[4] - b1 * b1) / 2.0;
  auto residual = [&](Complex cc, Complex p1, Complex p0) {
    Eigen::Matrix<Complex, 5, 1> s;
    s << p0 * p0, 2.0 * p1 * p0, p1 * p1 + 2.0 * p0, 2.0 * p1, 1.0;
    Eigen::Matrix<Complex, 5, 1> r;
    for (int k = 0; k < 5; ++k) r(k) = h[k] - cc * s(k);
    return r;
  };
  auto r = residual(c, b1, b0);
  for (int it = 0; it < 12; ++it) {
    Eigen::Matrix<Complex, 5, 3> j;
    j.col(0) << b0 * b0, 2.0 * b1 * b0, b1 * b1 + 2.0 * b0, 2.0 * b1, 1.0;
    j.col(1) << 0.0, 2.0 * b0 * c, 2.0 * b1 * c, 2.0 * c, 0.0;
    j.col(2) << 2.0 * b0 * c, 2.0 * b1 * c, 2.0 * c, 0.0, 0.0;
    Eigen::Vector3cd d = j.colPivHouseholderQr().solve(r);
    auto rn = residual(c + d(0), b1 + d(1), b0 + d(2));
    if (!(rn.norm() < r.norm())) break;
    c += d(0);
    b1 += d(1);
    b0 += d(2);
    r = rn;
  }
  out.residual = r.norm();
  out.accepted = out.psc0 <= tol && out.psc1 <= tol && out.residual <= tol;

  BinaryForm q({b0, b1, 1.0});
  Eigen::Matrix2cd inv = rot.transpose();  // rotation inverse
  out.root = q.transformed(inv);
  double qn = out.root.norm();
  out.root = out.root * Complex(1.0 / qn);
  BinaryForm q2 = out.root * out.root;
  Complex num = 0.0;
  double den = 0.0;
  for (int k = 0; k <= 4; ++k) {
    num += std::conj(q2[k]) * g[k];
    den += std::norm(q2[k]);
  }
  out.scale = num / den;
  return out;
}

}  // namespace thetaq
