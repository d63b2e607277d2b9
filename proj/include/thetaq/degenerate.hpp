#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "thetaq/config.hpp"
#include "thetaq/theta.hpp"

namespace thetaq {

struct TrackSample {
  double t;
  ProjLine line;
  double residual;  // tangency residual relative to the restriction
};

struct Track {
  std::vector<TrackSample> samples;  // one per schedule entry reached
  bool lost = false;
};

/// Bitangents of F0 + t G followed from t_start down to t_end.
struct FamilyPath {
  TernaryForm f0, g;
  std::vector<double> schedule;  // geometric, decreasing
  std::vector<Track> tracks;     // positional: track i starts at bitangent i
  int refinements = 0;           // schedule doublings after a path crossing
};

struct TrackOptions {
  double tol = 1e-8;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  int max_halvings = 12;
};

FamilyPath track_family(const TernaryForm& f0, const TernaryForm& g, double t_start, double t_end, int steps,
                        const TrackOptions& opt = {});

struct LimitLine {
  ThetaLine target;              // line of the limit configuration
  std::vector<std::size_t> tracks;
  double exponent = 0.0;         // mean fitted slope of log distance vs log t
  ProjLine estimate;             // centroid of the tracks extrapolated to t = 0
};

struct CollisionReport {
  std::vector<LimitLine> lines;  // one per line of the limit configuration
  int total() const;
  /// Lines at the estimated positions, weighted by their track counts.
  ThetaConfig limit_config() const;
};

/// Assigns track endpoints to the nearest line of theta0 (UnassignedTrack
/// beyond `radius`) and fits convergence exponents over the last two decades
/// of the schedule.
CollisionReport limit_multiplicities(const FamilyPath& path, const ThetaConfig& theta0, double radius = 0.1);

struct IndependenceReport {
  std::vector<CollisionReport> reports;
  double max_distance = 0.0;  // worst match against the first direction
  bool matched = false;
};

/// Limits of the theta-curves along several directions G_i, compared by
/// match_configs at tol.
IndependenceReport limit_independence_check(const TernaryForm& f0, std::span<const TernaryForm> directions,
                                            double t_start, double t_end, int steps, double tol = 1e-5,
                                            const TrackOptions& opt = {});

}  // namespace thetaq
