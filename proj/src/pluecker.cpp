#include <array>
#include <string>

#include "thetaq/error.hpp"
#include "thetaq/quartic.hpp"

namespace thetaq {

int genus(const SingularityProfile& p) { return 3 - p.delta - p.kappa - 2 * p.tau; }

int pluecker_class(int d, const SingularityProfile& p) {
  return d * (d - 1) - 2 * p.delta - 3 * p.kappa - 4 * p.tau;
}

int pluecker_flexes(int d, const SingularityProfile& p) {
  return 3 * d * (d - 2) - 6 * p.delta - 8 * p.kappa - 12 * p.tau;
}

long long smooth_bitangent_count(int d) {
  long long D = d;
  return D * (D - 2) * (D * D - 9) / 2;
}

long long pluecker_bitangents(int d, const SingularityProfile& p) {
  long long D = d, dl = p.delta, k = p.kappa, t = p.tau;
  return smooth_bitangent_count(d) - (D + 2) * (D - 3) * (2 * dl + 3 * k + 4 * t) + 2 * dl * (dl - 1 + 4 * t) +
         6 * k * (dl + 2 * t) + 9 * k * (k - 1) / 2 + 2 * t * (4 * t - 3);
}

namespace {

constexpr std::array<SingularityProfile, 13> kAdmissible = {{
    {0, 0, 0},
    {1, 0, 0},
    {2, 0, 0},
    {3, 0, 0},
    {0, 1, 0},
    {0, 2, 0},
    {0, 3, 0},
    {1, 1, 0},
    {2, 1, 0},
    {1, 2, 0},
    {0, 0, 1},
    {1, 0, 1},
    {0, 1, 1},
}};

}  // namespace

std::span<const SingularityProfile> admissible_profiles() { return kAdmissible; }

ThetaTypeCounts theta_type_counts(const SingularityProfile& p) {
  bool ok = false;
  for (auto& a : kAdmissible) ok = ok || a == p;
  if (!ok)
    throw Error(ErrorCode::OutOfTable, "profile (" + std::to_string(p.delta) + "," + std::to_string(p.kappa) + "," +
                                           std::to_string(p.tau) + ") is not an irreducible quartic profile");
  const int g = genus(p);
  const int n = p.double_points();
  ThetaTypeCounts c;
  c.b2 = n * (n - 1) / 2;
  // lines through one singular point: 2g+2 minus the cusps other than that
  // point, plus one extra line per tacnode
  auto through = [&](bool is_cusp) { return 2 * g + 2 - (p.kappa - (is_cusp ? 1 : 0)); };
  c.b1 = p.delta * through(false) + p.kappa * through(true) + p.tau * through(false) + p.tau;
  c.b0 = static_cast<int>(pluecker_bitangents(4, p));
  return c;
}

}  // namespace thetaq
