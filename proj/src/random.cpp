#include "thetaq/random.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

namespace thetaq {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  while (u1 <= 0.0) u1 = uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double th = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(th);
  has_spare_ = true;
  return r * std::cos(th);
}

Complex Rng::complex_normal() {
  double a = normal();
  double b = normal();
  return Complex(a, b) / std::sqrt(2.0);
}

Vec3 Rng::complex_vector() {
  Vec3 v;
  for (int i = 0; i < 3; ++i) v(i) = complex_normal();
  return v;
}

Mat3 random_matrix(Rng& rng) {
  Mat3 m;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) m(i, j) = rng.complex_normal();
  return m;
}

Mat3 random_unitary(Rng& rng) {
  Mat3 a = random_matrix(rng);
  Eigen::HouseholderQR<Mat3> qr(a);
  Mat3 q = qr.householderQ();
  Mat3 r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix column phases so the distribution does not depend on the QR convention
  for (int j = 0; j < 3; ++j) {
    Complex d = r(j, j);
    double m = std::abs(d);
    if (m > 0) q.col(j) *= d / m;
  }
  return q;
}

}  // namespace thetaq
