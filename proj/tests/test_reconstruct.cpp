#include <doctest.h>

#include "fixtures.hpp"
#include "thetaq/error.hpp"
#include "thetaq/reconstruct.hpp"

using namespace thetaq;
using namespace fixtures;

namespace {

double pair_distance(const ReconstructionResult& r, const TernaryForm& a, const TernaryForm& b) {
  REQUIRE(r.components.size() == 2);
  double straight = std::max(form_distance(r.components[0], a), form_distance(r.components[1], b));
  double swapped = std::max(form_distance(r.components[0], b), form_distance(r.components[1], a));
  return std::min(straight, swapped);
}

ThetaConfig split_theta(const TernaryForm& a, const TernaryForm& b) {
  std::vector<TernaryForm> comps{a, b};
  return theta_reducible(comps);
}

}  // namespace

TEST_CASE("quadratic transformation") {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    Vec3 p = rng.complex_vector();
    CHECK(projective_distance(cremona(cremona(p)), p) < 1e-14);
    // a line through e_k maps to a line
    for (int k = 0; k < 3; ++k) {
      Vec3 l = rng.complex_vector();
      l(k) = 0.0;
      Vec3 img = cremona_line(l, k);
      for (int j = 0; j < 5; ++j) {
        auto [u, v] = orthonormal_complement(l.conjugate());
        Vec3 q = u * rng.complex_normal() + v * rng.complex_normal();
        REQUIRE(std::abs(Complex(l.transpose() * q)) < 1e-12);
        Vec3 s = cremona(q);
        CHECK(std::abs(Complex(img.transpose() * s)) < 1e-12 * img.norm() * s.norm());
      }
    }
  }
}

TEST_CASE("split reconstruction") {
  auto [a, b] = split_pair();
  auto r = reconstruct_split(split_theta(a, b));
  CHECK(pair_distance(r, a, b) < 1e-10);
  CHECK(form_distance(r.curve, a * b) < 1e-10);
  CHECK(r.residual < 1e-10);
  CHECK(r.certificate.curve_class == CurveClass::split);
  CHECK(r.certificate.nodes.size() == 4);

  Rng rng(17);
  for (int i = 0; i < 5; ++i) {
    auto [c, d] = random_split(rng);
    auto rr = reconstruct_split(split_theta(c, d));
    CHECK(pair_distance(rr, c, d) < 1e-6);
  }
}

TEST_CASE("split reconstruction rejects perturbed input") {
  auto [a, b] = split_pair();
  auto cfg = split_theta(a, b);
  for (auto& l : cfg.lines)
    if (l.multiplicity == 4) {
      Vec3 v = l.line.coords();
      auto [u, w] = orthonormal_complement(v);
      l.line = ProjLine(v + 1e-3 * u);
      break;
    }
  bool rejected = false;
  try {
    auto r = reconstruct_split(cfg);
    rejected = r.residual > 1e-6;
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::VerificationFailed;
  }
  CHECK(rejected);
}

TEST_CASE("trinodal reconstruction") {
  TernaryForm f = trinodal_symmetric();
  auto r = reconstruct_trinodal(theta_curve(f));
  CHECK(form_distance(r.curve, f) < 1e-8);
  CHECK(r.residual < 1e-8);
  CHECK(r.certificate.nodes.size() == 3);

  Rng rng(23);
  for (int i = 0; i < 5; ++i) {
    TernaryForm x = random_trinodal(rng);
    auto rr = reconstruct_trinodal(theta_curve(x));
    CHECK(form_distance(rr.curve, x) < 1e-6);
  }
}

TEST_CASE("trinodal reconstruction needs con-conic lines") {
  Rng rng(29);
  TernaryForm f = random_trinodal(rng);
  auto cfg = theta_curve(f);
  // replace each double line by another line through the same node
  for (auto& l : cfg.lines) {
    if (l.multiplicity != 2) continue;
    REQUIRE(l.singular_points.size() == 1);
    Vec3 node = cfg.singular[l.singular_points[0]].location.coords();
    l.line = ProjLine(cross(node, rng.complex_vector()));
  }
  CHECK_THROWS_WITH_AS(reconstruct_trinodal(cfg), doctest::Contains("not tangent"), Error);
  try {
    reconstruct_trinodal(cfg);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InconsistentSixthLine);
  }
}

TEST_CASE("reconstruction refuses the wrong class") {
  auto [a, b] = split_pair();
  CHECK_THROWS_AS(reconstruct_trinodal(split_theta(a, b)), Error);
  CHECK_THROWS_AS(reconstruct_split(theta_curve(trinodal_symmetric())), Error);
}

TEST_CASE("immersion rank") {
  auto r = immersion_rank(klein());
  CHECK(r.rank == 14);
  REQUIRE(r.singular_values.size() == 15);
  CHECK(r.singular_values[14] < 1e-6 * r.singular_values[0]);
  CHECK(immersion_rank(klein(), 5e-7).rank == 14);

  Rng rng(41);
  for (int i = 0; i < 3; ++i) {
    TernaryForm f = random_form(4, rng);
    CHECK(immersion_rank(f).rank == 14);
  }

  // scaling does not move the lines, a generic direction does
  CHECK(bitangent_derivative(klein(), klein()) < 1e-5);
  CHECK(bitangent_derivative(klein(), random_form(4, rng)) > 1e-2);
}

TEST_CASE("immersion rank rejects a step that loses the lines") {
  CHECK_THROWS_AS(immersion_rank(klein(), 0.5), Error);
}

TEST_CASE("theta-property evidence") {
  SUBCASE("trinodal") {
    auto rep = verify_theta_property(trinodal_symmetric(), {});
    CHECK(rep.curve_class == CurveClass::trinodal);
    CHECK(rep.method == "reconstruction");
    CHECK(rep.verified);
  }
  SUBCASE("split") {
    auto [a, b] = split_pair();
    std::vector<TernaryForm> comps{a, b};
    auto rep = verify_theta_property(a * b, comps);
    CHECK(rep.curve_class == CurveClass::split);
    CHECK(rep.verified);
  }
  SUBCASE("smooth") {
    Rng rng(43);
    auto rep = verify_theta_property(random_form(4, rng), {}, 1e-6, 1, 10);
    CHECK(rep.curve_class == CurveClass::smooth);
    CHECK(rep.method == "local search");
    CHECK(rep.rank == 14);
    CHECK(rep.returned + rep.degenerate + rep.failed == 10);
    CHECK(rep.verified);
  }
  SUBCASE("uninodal is out of reach") {
    Rng rng(47);
    auto rep = verify_theta_property(uninodal(rng), {});
    CHECK(rep.curve_class == CurveClass::uninodal);
    CHECK_FALSE(rep.verified);
  }
}
