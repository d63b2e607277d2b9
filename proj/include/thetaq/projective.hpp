#pragma once

#include <complex>
#include <utility>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace thetaq {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3cd;
using Mat3 = Eigen::Matrix3cd;

/// Bilinear cross product (Eigen's cross conjugates complex results).
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return Vec3(a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0));
}

/// Unit-norm representative whose first entry of modulus above 1e-8 is real
/// and positive. Throws DegenerateInput on the zero vector.
Vec3 canonical(const Vec3& v);

/// Sine of the Hermitian angle between two nonzero vectors; zero iff they
/// span the same projective point.
double projective_distance(const Vec3& a, const Vec3& b);

/// Lexicographic order on (re, im) of canonical coordinates.
bool canonical_less(const Vec3& a, const Vec3& b);

/// Hermitian-orthonormal basis (a, b) of the complement of n.
std::pair<Vec3, Vec3> orthonormal_complement(const Vec3& n);

/// Unitary matrix whose last column is the canonical form of p.
Mat3 frame_with_last(const Vec3& p);

template <class Tag>
class Homogeneous {
 public:
  explicit Homogeneous(const Vec3& v) : v_(canonical(v)) {}

  const Vec3& coords() const { return v_; }
  Complex operator[](int i) const { return v_(i); }

 private:
  Vec3 v_;
};

struct PointTag {};
struct LineTag {};
using ProjPoint = Homogeneous<PointTag>;
using ProjLine = Homogeneous<LineTag>;

template <class Tag>
double distance(const Homogeneous<Tag>& a, const Homogeneous<Tag>& b) {
  return projective_distance(a.coords(), b.coords());
}

template <class Tag>
bool operator<(const Homogeneous<Tag>& a, const Homogeneous<Tag>& b) {
  return canonical_less(a.coords(), b.coords());
}

/// Bilinear pairing p . L of unit representatives.
Complex pairing(const ProjPoint& p, const ProjLine& l);
double incidence_residual(const ProjPoint& p, const ProjLine& l);

ProjLine join(const ProjPoint& p, const ProjPoint& q);
ProjPoint meet(const ProjLine& l, const ProjLine& m);

/// Two points spanning the line: (P0, P1) with P0 = e_k - n(n^H e_k)
/// normalized, k the index of the smallest |L_k|, n = conj(L), and
/// P1 = conj(n x P0).
std::pair<Vec3, Vec3> line_basis(const ProjLine& l);

}  // namespace thetaq
