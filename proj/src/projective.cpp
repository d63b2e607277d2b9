#include "thetaq/projective.hpp"

#include <cmath>

#include "thetaq/error.hpp"

namespace thetaq {

Vec3 canonical(const Vec3& v) {
  double n = v.norm();
  if (!(n > 1e-300) || !std::isfinite(n))
    throw Error(ErrorCode::DegenerateInput, "zero or non-finite homogeneous vector");
  // already canonical up to rounding: keep the bits
  if (std::abs(n - 1.0) < 4e-16) {
    for (int i = 0; i < 3; ++i)
      if (std::abs(v(i)) > 1e-8) {
        if (v(i).imag() == 0.0 && v(i).real() > 0.0) return v;
        break;
      }
  }
  Vec3 u = v / n;
  for (int i = 0; i < 3; ++i) {
    double m = std::abs(u(i));
    if (m > 1e-8) {
      u *= std::conj(u(i)) / m;
      u(i) = Complex(u(i).real(), 0.0);
      break;
    }
  }
  return u;
}

double projective_distance(const Vec3& a, const Vec3& b) {
  Vec3 ah = a / a.norm(), bh = b / b.norm();
  double s = cross(ah, bh).norm();
  return s > 1.0 ? 1.0 : s;
}

bool canonical_less(const Vec3& a, const Vec3& b) {
  for (int i = 0; i < 3; ++i) {
    if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
    if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
  }
  return false;
}

std::pair<Vec3, Vec3> orthonormal_complement(const Vec3& n_in) {
  Vec3 n = n_in / n_in.norm();
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(n(i)) < std::abs(n(k))) k = i;
  Vec3 a = -n * std::conj(n(k));
  a(k) += 1.0;
  a /= a.norm();
  Vec3 b = cross(n, a).conjugate();
  b /= b.norm();
  return {a, b};
}

Mat3 frame_with_last(const Vec3& p) {
  Vec3 c = canonical(p);
  auto [a, b] = orthonormal_complement(c);
  Mat3 m;
  m.col(0) = a;
  m.col(1) = b;
  m.col(2) = c;
  return m;
}

Complex pairing(const ProjPoint& p, const ProjLine& l) {
  return p.coords().transpose() * l.coords();
}

double incidence_residual(const ProjPoint& p, const ProjLine& l) {
  return std::abs(pairing(p, l));
}

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  return ProjLine(cross(p.coords(), q.coords()));
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  return ProjPoint(cross(l.coords(), m.coords()));
}

std::pair<Vec3, Vec3> line_basis(const ProjLine& l) {
  return orthonormal_complement(l.coords().conjugate());
}

}  // namespace thetaq
