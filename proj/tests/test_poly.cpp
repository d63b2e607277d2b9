#include <doctest.h>

#include <cmath>

#include "thetaq/binary_form.hpp"
#include "thetaq/bivariate.hpp"
#include "thetaq/error.hpp"
#include "thetaq/random.hpp"
#include "thetaq/roots.hpp"
#include "thetaq/ternary_form.hpp"

using namespace thetaq;

namespace {

// naive evaluation straight from the exponent list, independent of the
// production evaluator
Complex naive_eval(const TernaryForm& f, const Vec3& p) {
  Complex s = 0.0;
  int d = f.degree();
  std::size_t k = 0;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b, ++k)
      s += f.coefficients()[k] * std::pow(p(0), a) * std::pow(p(1), b) * std::pow(p(2), d - a - b);
  return s;
}

BinaryForm from_roots(std::vector<Complex> roots, Complex lead = 1.0) {
  BinaryForm g({lead});
  for (auto r : roots) g = g * BinaryForm({-r, 1.0});
  return g;
}

}  // namespace

TEST_CASE("monomial order") {
  CHECK(TernaryForm::monomial_count(4) == 15);
  CHECK(TernaryForm::index(4, 4, 0) == 0);
  CHECK(TernaryForm::index(4, 3, 1) == 1);
  CHECK(TernaryForm::index(4, 3, 0) == 2);
  CHECK(TernaryForm::index(4, 2, 2) == 3);
  CHECK(TernaryForm::index(4, 0, 0) == 14);
}

TEST_CASE("evaluation and Euler relation") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    TernaryForm f = random_form(4, rng);
    Vec3 p = rng.complex_vector();
    CHECK(std::abs(f(p) - naive_eval(f, p)) < 1e-12);
    Complex lam = rng.complex_normal();
    CHECK(std::abs(f(lam * p) - std::pow(lam, 4) * f(p)) < 1e-11 * (1 + std::abs(std::pow(lam, 4) * f(p))));
    Vec3 g = f.gradient(p);
    CHECK(std::abs(p.dot(g.conjugate()).real() * 0 + (p.transpose() * g)(0) - 4.0 * f(p)) < 1e-11);
  }
}

TEST_CASE("composition") {
  Rng rng(5);
  TernaryForm f = random_form(4, rng);
  Mat3 t = random_matrix(rng);
  TernaryForm g = f.compose(t);
  for (int i = 0; i < 5; ++i) {
    Vec3 p = rng.complex_vector();
    CHECK(std::abs(g(p) - f(t * p)) < 1e-10);
  }
}

TEST_CASE("restriction examples") {
  // x^4 + y^4 + z^4 on z = 0
  TernaryForm f(4);
  f.set_coefficient(4, 0, 1.0);
  f.set_coefficient(0, 4, 1.0);
  f.set_coefficient(0, 0, 1.0);
  BinaryForm g = restrict_to_line(f, ProjLine(Vec3(0, 0, 1)));
  // the canonical basis of z=0 is orthonormal in the (x, y) plane, so g is
  // (s p + t q)_x^4 + (...)_y^4; check against direct evaluation
  auto [p0, p1] = line_basis(ProjLine(Vec3(0, 0, 1)));
  CHECK(std::abs(p0(2)) < 1e-15);
  CHECK(std::abs(p1(2)) < 1e-15);
  for (int j = 0; j < 4; ++j) {
    Complex t(0.3 * j, -0.2);
    CHECK(std::abs(g.at(t) - f(p0 + t * p1)) < 1e-13);
  }

  // (x+y+z)^4 restricted to x+y+z=0 vanishes
  TernaryForm l = TernaryForm::linear(Vec3(1, 1, 1));
  TernaryForm l4 = l * l * l * l;
  BinaryForm z = restrict_to_line(l4, ProjLine(Vec3(1, 1, 1)));
  CHECK(z.norm() < 1e-14);
  CHECK_THROWS_AS(is_perfect_square(z), Error);
}

TEST_CASE("restriction is linear in F") {
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    TernaryForm f = random_form(4, rng), g = random_form(4, rng);
    Complex a = rng.complex_normal(), b = rng.complex_normal();
    ProjLine l(rng.complex_vector());
    BinaryForm lhs = restrict_to_line(f * a + g * b, l);
    BinaryForm rhs1 = restrict_to_line(f, l), rhs2 = restrict_to_line(g, l);
    for (int k = 0; k <= 4; ++k) CHECK(std::abs(lhs[k] - a * rhs1[k] - b * rhs2[k]) < 1e-12);
  }
}

TEST_CASE("projective normalization") {
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    Vec3 v = rng.complex_vector();
    ProjPoint p(v);
    ProjPoint q(p.coords());
    CHECK((p.coords() - q.coords()).norm() < 1e-15);
    ProjPoint r(v * rng.complex_normal());
    CHECK((p.coords() - r.coords()).norm() < 1e-12);
    CHECK(std::abs(p.coords().norm() - 1.0) < 1e-15);
  }
  CHECK_THROWS_AS(ProjPoint(Vec3::Zero()), Error);
}

TEST_CASE("perfect square examples") {
  // (t^2 + 1)^2 with roots +-i
  auto ps = is_perfect_square(BinaryForm({1.0, 0.0, 2.0, 0.0, 1.0}));
  CHECK(ps.accepted);
  auto rts = binary_roots(ps.root);
  REQUIRE(rts.size() == 2);
  for (auto& r : rts) CHECK(std::abs(r.t / r.s * (r.t / r.s) + 1.0) < 1e-12);

  // t^4 - 1 has four simple roots
  CHECK_FALSE(is_perfect_square(BinaryForm({-1.0, 0.0, 0.0, 0.0, 1.0})).accepted);
  // (t-1)^2 (t-2)(t-3)
  CHECK_FALSE(is_perfect_square(from_roots({1.0, 1.0, 2.0, 3.0})).accepted);
  // (t-1)^3 (t-2) passes the subresultant test but is not a square
  CHECK_FALSE(is_perfect_square(from_roots({1.0, 1.0, 1.0, 2.0})).accepted);
  // hyperflex type: (t-a)^4
  CHECK(is_perfect_square(from_roots({0.5, 0.5, 0.5, 0.5}, Complex(0.0, 2.0))).accepted);
  // root at infinity: s^2 t^2 (degree drop)
  CHECK(is_perfect_square(BinaryForm({0.0, 0.0, 1.0, 0.0, 0.0})).accepted);
  // s^2 (s - t)^2 has a double root at infinity... no: roots t=inf is absent;
  // s t^2 (s - t) is not a square
  CHECK_FALSE(is_perfect_square(BinaryForm({0.0, 0.0, 1.0, -1.0, 0.0})).accepted);
}

TEST_CASE("perfect square on random squares and non-squares") {
  Rng rng(17);
  int false_neg = 0, false_pos = 0;
  for (int i = 0; i < 1000; ++i) {
    Complex r1 = rng.complex_normal(), r2 = rng.complex_normal();
    BinaryForm sq = from_roots({r1, r1, r2, r2}, rng.complex_normal());
    if (!is_perfect_square(sq).accepted) ++false_neg;
    BinaryForm gen = from_roots({r1, r2, rng.complex_normal(), rng.complex_normal()}, rng.complex_normal());
    if (is_perfect_square(gen).accepted) ++false_pos;
  }
  CHECK(false_neg == 0);
  CHECK(false_pos == 0);
}

TEST_CASE("univariate roots examples") {
  std::vector<Complex> sq = {4.0, -4.0, 1.0};  // (t-2)^2
  auto r = univariate_roots(sq);
  REQUIRE(r.size() == 1);
  CHECK(r[0].multiplicity == 2);
  CHECK(std::abs(r[0].value - 2.0) < 1e-7);

  std::vector<Complex> cube = {-1e-6, 0.0, 0.0, 1.0};
  auto r3 = univariate_roots(cube, 1e-4);
  CHECK(r3.size() == 3);
  for (auto& x : r3) CHECK(std::abs(std::pow(x.value, 3) - 1e-6) < 1e-15);
}

TEST_CASE("roots reproduce random polynomials") {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Complex> rts;
    for (int i = 0; i < 8; ++i) rts.push_back(rng.complex_normal());
    BinaryForm g = from_roots(rts);
    auto found = univariate_roots(g.coefficients(), 1e-9);
    REQUIRE(found.size() == 8);
    for (auto& x : rts) {
      double best = 1e9;
      for (auto& y : found) best = std::min(best, std::abs(x - y.value));
      CHECK(best < 1e-8);
    }
  }
}

TEST_CASE("gcd degree from subresultants") {
  Rng rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    int shared = trial % 3;
    std::vector<Complex> common, fa, ga;
    for (int i = 0; i < shared; ++i) common.push_back(rng.complex_normal());
    fa = common;
    ga = common;
    for (int i = 0; i < 4 - shared; ++i) fa.push_back(rng.complex_normal());
    for (int i = 0; i < 3 - shared; ++i) ga.push_back(rng.complex_normal());
    BinaryForm f = from_roots(fa), g = from_roots(ga);
    CHECK(subresultant_gcd_degree(f.coefficients(), g.coefficients(), 1e-9) == shared);
  }
}

TEST_CASE("resultant elimination examples") {
  // variables: x = c (eliminated), y = m
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(2, 2), b = Eigen::MatrixXcd::Zero(2, 2);
  a(1, 0) = 1.0;  // c
  a(0, 1) = -1.0; // -m   -> m - c up to sign: use c - m
  b(1, 0) = 1.0;
  b(0, 1) = 1.0;  // c + m
  auto r = resultant_eliminate(Bivariate(a), Bivariate(b), Variable::x);
  auto roots = univariate_roots(r);
  REQUIRE(roots.size() == 1);
  CHECK(std::abs(roots[0].value) < 1e-12);

  Eigen::MatrixXcd e1 = Eigen::MatrixXcd::Zero(3, 2), e2 = Eigen::MatrixXcd::Zero(2, 1);
  e1(2, 0) = 1.0;
  e1(0, 1) = -1.0;  // c^2 - m
  e2(1, 0) = 1.0;
  e2(0, 0) = -1.0;  // c - 1
  auto r2 = resultant_eliminate(Bivariate(e1), Bivariate(e2), Variable::x);
  auto roots2 = univariate_roots(r2);
  REQUIRE(roots2.size() == 1);
  CHECK(std::abs(roots2[0].value - 1.0) < 1e-12);
}

TEST_CASE("curve intersection: Bezout count for random cubics") {
  Rng rng(31);
  TernaryForm a = random_form(3, rng), b = random_form(3, rng);
  auto pts = intersect_curves(a, b, 99);
  CHECK(pts.size() == 9);
  for (auto& p : pts) {
    CHECK(std::abs(a(p.coords())) < 1e-9);
    CHECK(std::abs(b(p.coords())) < 1e-9);
  }
}
