#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thetaq/config.hpp"
#include "thetaq/degenerate.hpp"
#include "thetaq/reconstruct.hpp"
#include "thetaq/theta.hpp"

namespace thetaq {

using Json = nlohmann::json;

/// A number, or an exact rational string "p/q" (or "p").
double parse_real(const Json& j);
/// [re, im], or a single real entry.
Complex parse_complex(const Json& j);
Json to_json(Complex c);
Json to_json(const Vec3& v);
Vec3 parse_vec3(const Json& j);

struct CurveFile {
  TernaryForm form;
  std::vector<TernaryForm> components;
};

/// Reads {degree, coefficients, components?}. The product of the
/// components must equal the form within 1e-10 relative error.
CurveFile curve_from_json(const Json& j);
Json curve_to_json(const TernaryForm& f, const std::vector<TernaryForm>& components = {});

/// Reads {lines: [{dual, multiplicity, type, contacts?}], tol}. Throws
/// MultiplicitySumMismatch unless the multiplicities sum to 28.
ThetaConfig config_from_json(const Json& j);
Json config_to_json(const ThetaConfig& cfg);

struct FamilyFile {
  TernaryForm f0, g;
  double t_start = 0.1;
  double t_end = 1e-6;
  int steps = 200;
};
FamilyFile family_from_json(const Json& j);

Json to_json(const IncidenceReport& r);
Json to_json(const GitVerdict& v);
Json to_json(const MatchResult& m);
Json to_json(const Recognition& r);
Json to_json(const ReconstructionResult& r);
Json to_json(const ImmersionReport& r);
Json to_json(const PropertyReport& r);
Json to_json(const FamilyPath& p);
Json to_json(const CollisionReport& r);

}  // namespace thetaq
