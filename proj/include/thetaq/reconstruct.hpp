#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "thetaq/config.hpp"
#include "thetaq/theta.hpp"

namespace thetaq {

struct ReconstructionResult {
  TernaryForm curve;                    // canonical
  std::vector<TernaryForm> components;  // split: the two conics, canonical and sorted
  double residual = 0.0;                // max matched distance between theta(curve) and the input
  Recognition certificate;
};

/// Standard quadratic transformation (x:y:z) -> (yz:zx:xy).
Vec3 cremona(const Vec3& p);
/// Image under cremona() of a line through exactly the base point e_k.
Vec3 cremona_line(const Vec3& l, int k);

/// Two conics through the four nodes of a split theta-curve, cut out of the
/// pencil by tangency to a simple line.
ReconstructionResult reconstruct_split(const ThetaConfig& cfg, double tol = 1e-6);

/// Trinodal quartic from its theta-curve: the six double lines become
/// tangents of a conic after the quadratic transformation at the nodes.
ReconstructionResult reconstruct_trinodal(const ThetaConfig& cfg, double tol = 1e-6);

struct ImmersionReport {
  int rank = 0;
  std::vector<double> singular_values;  // descending
};

/// Numerical rank of the derivative of F -> (28 bitangents), from central
/// differences along the 15 coefficient directions.
ImmersionReport immersion_rank(const TernaryForm& f, double step = 1e-6, double tol = 1e-6, std::uint64_t seed = 1,
                               unsigned jobs = 1);

/// Largest change rate of the bitangents of F along the direction G.
double bitangent_derivative(const TernaryForm& f, const TernaryForm& g, double step = 1e-6, std::uint64_t seed = 1);

struct PropertyReport {
  CurveClass curve_class = CurveClass::other;
  std::string method;   // "reconstruction", "local search" or "none"
  bool verified = false;
  double distance = 0.0;  // reconstruction only
  int rank = 0;           // local search only
  int restarts = 0;
  int returned = 0;   // converged back to F
  int degenerate = 0; // converged to a curve outside V (double conics)
  int failed = 0;     // no convergence
};

/// Evidence that F is the only curve with its theta-curve. For smooth
/// curves this is a heuristic search (Newton from perturbed starts on the
/// tangency conditions with the 28 lines fixed). Throws
/// PropertyViolationWitness if a distinct curve in V is found.
PropertyReport verify_theta_property(const TernaryForm& f, std::span<const TernaryForm> components, double tol = 1e-6,
                                     std::uint64_t seed = 1, int restarts = 50, unsigned jobs = 1);

}  // namespace thetaq
