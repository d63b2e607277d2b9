#pragma once

#include <array>
#include <initializer_list>
#include <utility>

#include "thetaq/random.hpp"
#include "thetaq/ternary_form.hpp"

namespace fixtures {

using thetaq::Complex;
using thetaq::TernaryForm;

inline TernaryForm form(int d, std::initializer_list<std::pair<std::pair<int, int>, Complex>> terms) {
  TernaryForm f(d);
  for (auto& [e, c] : terms) f.set_coefficient(e.first, e.second, f.coefficient(e.first, e.second) + c);
  return f;
}

inline TernaryForm klein() { return form(4, {{{3, 1}, 1.0}, {{0, 3}, 1.0}, {{1, 0}, 1.0}}); }
inline TernaryForm fermat() { return form(4, {{{4, 0}, 1.0}, {{0, 4}, 1.0}, {{0, 0}, 1.0}}); }

inline TernaryForm zeroed(TernaryForm f, std::initializer_list<std::pair<int, int>> es) {
  for (auto& [a, b] : es) f.set_coefficient(a, b, 0.0);
  return f;
}

// node at e3
inline TernaryForm uninodal(thetaq::Rng& rng) {
  return zeroed(thetaq::random_form(4, rng), {{0, 0}, {1, 0}, {0, 1}});
}
// nodes at e3, e1
inline TernaryForm binodal(thetaq::Rng& rng) {
  return zeroed(uninodal(rng), {{4, 0}, {3, 1}, {3, 0}});
}
// nodes at e1, e2, e3
inline TernaryForm trinodal_coordinate(thetaq::Rng& rng) {
  return zeroed(binodal(rng), {{0, 4}, {1, 3}, {0, 3}});
}
inline TernaryForm trinodal_symmetric() { return form(4, {{{2, 2}, 1.0}, {{0, 2}, 1.0}, {{2, 0}, 1.0}}); }

// cusp at e3 with tangent y = 0
inline TernaryForm cuspidal(thetaq::Rng& rng) {
  TernaryForm f = zeroed(thetaq::random_form(4, rng), {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}});
  f.set_coefficient(0, 2, 1.0);
  return f;
}
// tacnode at e3 with tangent y = 0
inline TernaryForm tacnodal(thetaq::Rng& rng) {
  TernaryForm f = cuspidal(rng);
  f.set_coefficient(3, 0, 0.0);
  return f;
}
// tacnode at e3 (tangent y = 0) and a cusp at e2
inline TernaryForm tacnode_cusp(thetaq::Rng& rng) {
  TernaryForm f = zeroed(tacnodal(rng), {{0, 4}, {1, 3}, {0, 3}});
  Complex beta = std::sqrt(f.coefficient(0, 2));
  Complex alpha = rng.complex_normal();
  f.set_coefficient(2, 2, alpha * alpha);
  f.set_coefficient(1, 2, 2.0 * alpha * beta);
  return f;
}

inline TernaryForm line(Complex a, Complex b, Complex c) { return TernaryForm::linear(thetaq::Vec3(a, b, c)); }

inline TernaryForm conic(Complex xx, Complex yy, Complex zz, Complex xy, Complex xz, Complex yz) {
  return form(2, {{{2, 0}, xx}, {{0, 2}, yy}, {{0, 0}, zz}, {{1, 1}, xy}, {{1, 0}, xz}, {{0, 1}, yz}});
}

// (x^2+y^2-z^2)(x^2+xy+y^2-z^2)
inline std::pair<TernaryForm, TernaryForm> split_pair() {
  return {conic(1, 1, -1, 0, 0, 0), conic(1, 1, -1, 1, 0, 0)};
}

// two conics tangent at (0:0:1), transversal at (1:1:1) and (-2:1:4)
inline std::pair<TernaryForm, TernaryForm> tangent_conics() {
  return {conic(1, 0, 0, 0, 0, -1), conic(1, -4, 0, 2, 0, 1)};
}

// cuspidal cubic y^2 z - x^3 and a line tangent to it at (1:1:1)
inline std::pair<TernaryForm, TernaryForm> cuspidal_cubic_tangent_line() {
  TernaryForm c = form(3, {{{0, 2}, 1.0}, {{3, 0}, -1.0}});
  return {line(-3, 2, 1), c};
}

// conic C pulled back by the quadratic transformation, then moved by a
// random projectivity
inline TernaryForm random_trinodal(thetaq::Rng& rng) {
  TernaryForm c = thetaq::random_form(2, rng);
  TernaryForm x = c.substitute({TernaryForm::monomial(2, 0, 1), TernaryForm::monomial(2, 1, 0),
                                TernaryForm::monomial(2, 1, 1)});
  return x.compose(thetaq::random_matrix(rng)).canonical();
}

// two conics of the pencil through four random points
inline std::pair<TernaryForm, TernaryForm> random_split(thetaq::Rng& rng) {
  std::array<thetaq::Vec3, 4> p;
  for (auto& v : p) v = rng.complex_vector();
  auto join = [&](int i, int j) { return TernaryForm::linear(thetaq::cross(p[i], p[j])); };
  TernaryForm q0 = join(0, 1) * join(2, 3), q1 = join(0, 2) * join(1, 3);
  return {(q0 * rng.complex_normal() + q1 * rng.complex_normal()).canonical(),
          (q0 * rng.complex_normal() + q1 * rng.complex_normal()).canonical()};
}

}  // namespace fixtures
