#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "thetaq/projective.hpp"
#include "thetaq/ternary_form.hpp"

namespace thetaq {

enum class SingularKind { node, cusp, tacnode };
std::string_view to_string(SingularKind k);

struct SingularPoint {
  ProjPoint location;
  SingularKind kind;
  /// Two branch tangents for a node, the single tangent otherwise.
  std::vector<ProjLine> tangent_cone;
};

struct SingularityProfile {
  int delta = 0;  // nodes
  int kappa = 0;  // cusps
  int tau = 0;    // tacnodes
  auto operator<=>(const SingularityProfile&) const = default;
  int double_points() const { return delta + kappa + tau; }
};

/// False if F has a repeated factor (restrictions to random lines all have
/// a multiple root).
bool is_reduced(const TernaryForm& f, std::uint64_t seed = 11);

/// Singular points of a reduced plane quartic, refined to near machine
/// precision and classified as node, cusp or tacnode. Sorted canonically.
/// Throws UnsupportedSingularity for anything else (including non-reduced
/// input).
std::vector<SingularPoint> singular_points(const TernaryForm& f, double tol = 1e-8, std::uint64_t seed = 7);

SingularityProfile profile_of(std::span<const SingularPoint> pts);
SingularityProfile singularity_profile(const TernaryForm& f, double tol = 1e-8, std::uint64_t seed = 7);

/// Geometric genus 3 - delta - kappa - 2 tau; negative values are returned
/// for reducible curves.
int genus(const SingularityProfile& p);

int pluecker_class(int d, const SingularityProfile& p);
int pluecker_flexes(int d, const SingularityProfile& p);
long long smooth_bitangent_count(int d);
long long pluecker_bitangents(int d, const SingularityProfile& p);

struct ThetaTypeCounts {
  int b0 = 0;
  int b1 = 0;
  int b2 = 0;
  auto operator<=>(const ThetaTypeCounts&) const = default;
};

/// The thirteen admissible profiles of irreducible quartics.
std::span<const SingularityProfile> admissible_profiles();

/// Numbers of theta-lines of type 0, 1 and 2. Throws OutOfTable for a
/// profile outside the admissible list.
ThetaTypeCounts theta_type_counts(const SingularityProfile& p);

enum class QuarticGitClass { stable, semistable_boundary, outside_V };
std::string_view to_string(QuarticGitClass c);

QuarticGitClass quartic_git_class(const TernaryForm& f, double tol = 1e-8, std::uint64_t seed = 7);

}  // namespace thetaq
