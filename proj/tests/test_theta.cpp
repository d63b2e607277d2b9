#include <doctest.h>

#include <chrono>

#include "fixtures.hpp"
#include "thetaq/error.hpp"
#include "thetaq/theta.hpp"

using namespace thetaq;
using namespace fixtures;

TEST_CASE("Klein quartic bitangents") {
  auto lines = bitangents_smooth(klein());
  REQUIRE(lines.size() == 28);
  TernaryForm f = klein().normalized();
  for (auto& l : lines) {
    CHECK(l.multiplicity == 1);
    CHECK(l.type == LineType::type0);
    REQUIRE(l.contacts.size() == 2);
    CHECK_FALSE(l.hyperflex);
    for (auto& c : l.contacts) {
      CHECK(std::abs(f(c.coords())) < 1e-10);
      CHECK(incidence_residual(c, l.line) < 1e-10);
      // tangency: gradient proportional to the line
      CHECK(projective_distance(f.gradient(c.coords()), l.line.coords()) < 1e-7);
    }
  }
}

TEST_CASE("Fermat quartic: twelve hyperflex lines") {
  auto lines = bitangents_smooth(fermat());
  REQUIRE(lines.size() == 28);
  int hyper = 0;
  for (auto& l : lines) hyper += l.hyperflex ? 1 : 0;
  CHECK(hyper == 12);
}

TEST_CASE("random smooth quartics have 28 bitangents") {
  Rng rng(1234);
  for (int i = 0; i < 5; ++i) {
    TernaryForm f = random_form(4, rng);
    ThetaOptions opt;
    opt.seed = 10 + i;
    CHECK(bitangents_smooth(f, opt).size() == 28);
  }
}

TEST_CASE("bitangents are equivariant") {
  Rng rng(77);
  TernaryForm f = random_form(4, rng);
  Mat3 t = random_matrix(rng);
  auto a = bitangents_smooth(f);
  // lines of f o T^{-1} are T^{-T} L
  auto b = bitangents_smooth(f.compose(t.inverse()));
  Mat3 m = t.inverse().transpose();
  for (auto& l : a) {
    double best = 1.0;
    for (auto& k : b) best = std::min(best, projective_distance(k.line.coords(), m * l.line.coords()));
    CHECK(best < 1e-8);
  }
}

TEST_CASE("bitangents reject singular curves") {
  Rng rng(5);
  CHECK_THROWS_AS(bitangents_smooth(uninodal(rng)), Error);
}

TEST_CASE("multiplicity lookup") {
  using K = SingularKind;
  CHECK(theta_line_multiplicity(LineType::type0, {}) == 1);
  std::vector<K> n{K::node}, c{K::cusp}, t{K::tacnode};
  CHECK(theta_line_multiplicity(LineType::type1, n) == 2);
  CHECK(theta_line_multiplicity(LineType::type1, c) == 3);
  CHECK(theta_line_multiplicity(LineType::type1, t) == 4);
  CHECK(theta_line_multiplicity(LineType::type1, t, true) == 6);
  std::vector<K> nn{K::node, K::node}, cc{K::cusp, K::cusp}, nc{K::node, K::cusp}, tn{K::tacnode, K::node},
      tc{K::tacnode, K::cusp};
  CHECK(theta_line_multiplicity(LineType::type2, nn) == 4);
  CHECK(theta_line_multiplicity(LineType::type2, cc) == 9);
  CHECK(theta_line_multiplicity(LineType::type2, nc) == 6);
  CHECK(theta_line_multiplicity(LineType::type2, tn) == 8);
  CHECK(theta_line_multiplicity(LineType::type2, tc) == 12);
  CHECK(theta_line_multiplicity(LineType::component, nn) == 4);
  CHECK(theta_line_multiplicity(LineType::component, tn) == 6);
}

TEST_CASE("type-1 lines") {
  Rng rng(11);
  TernaryForm f = uninodal(rng);
  auto sing = singular_points(f);
  REQUIRE(sing.size() == 1);
  auto t1 = type1_lines(f, sing, 0);
  CHECK(t1.size() == 6);
  for (auto& l : t1) {
    CHECK(l.multiplicity == 2);
    CHECK(incidence_residual(sing[0].location, l.line) < 1e-10);
    // the tangency point away from the node
    CHECK(l.contacts.size() == 1);
  }

  TernaryForm tri = trinodal_symmetric();
  auto ts = singular_points(tri);
  REQUIRE(ts.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(type1_lines(tri, ts, i).size() == 2);

  TernaryForm cu = cuspidal(rng);
  auto cs = singular_points(cu);
  auto ct = type1_lines(cu, cs, 0);
  CHECK(ct.size() == 6);
  for (auto& l : ct) CHECK(l.multiplicity == 3);
}

TEST_CASE("type-2 lines") {
  auto ts = singular_points(trinodal_symmetric());
  auto t2 = type2_lines(ts);
  CHECK(t2.size() == 3);
  for (auto& l : t2) CHECK(l.multiplicity == 4);
  Rng rng(3);
  CHECK(type2_lines(singular_points(uninodal(rng))).empty());
}

TEST_CASE("theta curve of singular irreducible quartics matches the table") {
  Rng rng(2024);
  struct Fx {
    TernaryForm f;
    SingularityProfile p;
  };
  std::vector<Fx> cases = {
      {uninodal(rng), {1, 0, 0}},     {binodal(rng), {2, 0, 0}},  {trinodal_coordinate(rng), {3, 0, 0}},
      {trinodal_symmetric(), {3, 0, 0}}, {cuspidal(rng), {0, 1, 0}}, {tacnodal(rng), {0, 0, 1}},
      {tacnode_cusp(rng), {0, 1, 1}},
  };
  for (auto& c : cases) {
    INFO(c.p.delta << c.p.kappa << c.p.tau);
    auto cfg = theta_curve(c.f);
    CHECK(profile_of(cfg.singular) == c.p);
    CHECK(cfg.total_multiplicity() == 28);
    ThetaTypeCounts got;
    for (auto& l : cfg.lines) {
      if (l.type == LineType::type0) ++got.b0;
      if (l.type == LineType::type1) ++got.b1;
      if (l.type == LineType::type2) ++got.b2;
    }
    CHECK(got == theta_type_counts(c.p));
  }
}

TEST_CASE("reducible catalog: two conics") {
  auto [a, b] = split_pair();
  std::vector<TernaryForm> comps{a, b};
  auto cfg = theta_reducible(comps);
  CHECK(cfg.catalog_case == 1);
  CHECK(cfg.multiplicity_histogram() == std::map<int, int>{{1, 4}, {4, 6}});

  auto [c, d] = tangent_conics();
  std::vector<TernaryForm> comps2{c, d};
  auto cfg2 = theta_reducible(comps2);
  CHECK(cfg2.catalog_case == 2);
  CHECK(cfg2.multiplicity_histogram() == std::map<int, int>{{1, 2}, {4, 1}, {6, 1}, {8, 2}});
}

TEST_CASE("reducible catalog: four lines") {
  std::vector<TernaryForm> comps{line(1, 0, 0), line(0, 1, 0), line(0, 0, 1), line(1, 1, 1)};
  auto cfg = theta_reducible(comps);
  CHECK(cfg.catalog_case == 11);
  CHECK(cfg.lines.size() == 7);
  for (auto& l : cfg.lines) CHECK(l.multiplicity == 4);
}

TEST_CASE("reducible catalog: line and cubic") {
  Rng rng(99);
  TernaryForm cubic = random_form(3, rng);
  std::vector<TernaryForm> comps{line(1, 2, -1), cubic};
  auto cfg = theta_reducible(comps);
  CHECK(cfg.catalog_case == 3);
  CHECK(cfg.multiplicity_histogram() == std::map<int, int>{{2, 12}, {4, 1}});

  auto [l, c] = cuspidal_cubic_tangent_line();
  std::vector<TernaryForm> comps8{l, c};
  auto cfg8 = theta_reducible(comps8);
  CHECK(cfg8.catalog_case == 8);
  CHECK(cfg8.multiplicity_histogram() == std::map<int, int>{{4, 1}, {6, 2}, {12, 1}});
}

TEST_CASE("reducible catalog: two lines and a conic") {
  std::vector<TernaryForm> comps{line(1, 0, 0), line(0, 1, 0), conic(1, 2, -3, 0.5, 0.25, 1)};
  auto cfg = theta_reducible(comps);
  CHECK(cfg.catalog_case == 9);
  CHECK(cfg.multiplicity_histogram() == std::map<int, int>{{2, 2}, {4, 6}});
  // conic x^2 + y^2 - z^2 is tangent to x = z at (1:0:1)
  std::vector<TernaryForm> comps10{line(1, 0, -1), line(0, 1, 0), conic(1, 1, -1, 0, 0, 0)};
  CHECK_THROWS(theta_reducible(comps10));  // y = 0 meets the conic at (1:0:1) too: three curves concurrent
  std::vector<TernaryForm> comps10b{line(1, 0, -1), line(0, 1, 2), conic(1, 1, -1, 0, 0, 0)};
  auto c10 = theta_reducible(comps10b);
  CHECK(c10.catalog_case == 10);
}

TEST_CASE("reducible errors") {
  // conic + two tangent lines has two tacnodes
  std::vector<TernaryForm> two_tac{line(1, 0, -1), line(1, 0, 1), conic(1, 1, -1, 0, 0, 0)};
  try {
    theta_reducible(two_tac);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InfiniteStabilizer);
  }
  // theta_curve without the factorization of a curve with a line
  Rng rng(4);
  TernaryForm f = line(1, 2, 3) * random_form(3, rng);
  try {
    theta_curve(f);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NeedsDecomposition);
  }
  TernaryForm q = conic(1, 1, 1, 0, 0, 0);
  try {
    theta_curve(q * q);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutsideV);
  }
}
