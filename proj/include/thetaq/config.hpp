#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "thetaq/projective.hpp"
#include "thetaq/theta.hpp"

namespace thetaq {

struct SupportLine {
  ProjLine line;
  int multiplicity;
};

struct ConcurrencePoint {
  ProjPoint point;
  int multiplicity;                // sum over the participating lines
  std::vector<std::size_t> lines;  // indices into IncidenceReport::lines
};

struct IncidenceReport {
  std::vector<SupportLine> lines;  // entries closer than tol merged
  std::vector<ConcurrencePoint> points;

  int max_line_multiplicity() const;
  int max_point_multiplicity() const;
};

/// Pairwise meets of the support lines, clustered (single linkage) at
/// projective radius tol.
IncidenceReport incidence(const ThetaConfig& cfg, double tol = 1e-6);

enum class GitVerdictKind { stable, unstable };
std::string_view to_string(GitVerdictKind v);

struct GitWitness {
  bool is_line;
  int multiplicity;
  std::optional<ProjLine> line;
  std::optional<ProjPoint> point;
};

struct GitVerdict {
  GitVerdictKind verdict = GitVerdictKind::stable;
  std::optional<GitWitness> witness;
};

/// Stability of a configuration of 28 lines: unstable iff a line has
/// multiplicity >= 10 or a point has multiplicity >= 19. Line witnesses are
/// preferred.
GitVerdict git_classify_config(const ThetaConfig& cfg, double tol = 1e-6);

struct MatchResult {
  bool success = false;
  std::vector<int> mapping;  // entry of b matched to each entry of a
  double max_distance = 0.0;
  std::string reason;
};

/// Multiplicity-preserving bijection between the entries of two
/// configurations with all matched distances below tol.
MatchResult match_configs(const ThetaConfig& a, const ThetaConfig& b, double tol = 1e-6);

enum class CurveClass { smooth, uninodal, binodal, trinodal, split, other };
std::string_view to_string(CurveClass c);
std::optional<CurveClass> curve_class_from_string(std::string_view s);

struct Recognition {
  CurveClass curve_class = CurveClass::other;
  std::vector<ProjPoint> nodes;
};

/// Class of the curve behind a configuration, from its multiplicities and
/// concurrences. Throws Ambiguous if several patterns fit.
Recognition recognize_class(const ThetaConfig& cfg, double tol = 1e-6);

}  // namespace thetaq
