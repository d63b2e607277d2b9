#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "thetaq/projective.hpp"
#include "thetaq/quartic.hpp"
#include "thetaq/ternary_form.hpp"

namespace thetaq {

enum class LineType { type0, type1, type2, component };
std::string_view to_string(LineType t);
std::optional<LineType> line_type_from_string(std::string_view s);

struct ThetaLine {
  explicit ThetaLine(const ProjLine& l) : line(l) {}

  ProjLine line;
  LineType type = LineType::type0;
  int multiplicity = 1;
  std::vector<ProjPoint> contacts;
  std::vector<std::size_t> singular_points;  // indices into ThetaConfig::singular
  bool hyperflex = false;
  bool tacnodal_tangent = false;
  bool typed = true;  // false for lines read without a type
};

struct ThetaConfig {
  std::vector<ThetaLine> lines;
  double tol = 1e-6;
  std::vector<SingularPoint> singular;
  int catalog_case = 0;  // reducible curves only

  int total_multiplicity() const;
  std::map<int, int> multiplicity_histogram() const;
  void sort_lines();
};

struct ThetaOptions {
  double tol = 1e-8;
  std::uint64_t seed = 1;
  int frames = 3;
  unsigned jobs = 1;
};

/// Multiplicity of a theta-line from its type, the kinds of the singular
/// points on it, and whether it is the tangent at a tacnode.
int theta_line_multiplicity(LineType type, std::span<const SingularKind> through, bool tacnodal_tangent = false);

/// Lines whose restriction is a perfect square, from the resultant system
/// in several random frames. Each is refined by Newton and verified in the
/// frame-independent test at opt.tol.
std::vector<ProjLine> perfect_square_lines(const TernaryForm& f, const ThetaOptions& opt = {});

/// Points of tangency of a theta-line (two entries, equal for a hyperflex).
std::vector<ProjPoint> contact_points(const TernaryForm& f, const ProjLine& l, bool* hyperflex = nullptr);

/// The 28 bitangents of a smooth quartic. Throws NearSingularInput if the
/// curve is singular and CountMismatch if fewer or more lines are found.
std::vector<ThetaLine> bitangents_smooth(const TernaryForm& f, const ThetaOptions& opt = {});

/// Theta-lines through singular[index] that are tangent elsewhere (or the
/// tacnodal tangent). Joins with other singular points and line components
/// are excluded.
std::vector<ThetaLine> type1_lines(const TernaryForm& f, std::span<const SingularPoint> singular, std::size_t index,
                                   double tol = 1e-8, std::uint64_t seed = 1);

/// Joins of pairs of singular points. Throws if a join meets a third one.
std::vector<ThetaLine> type2_lines(std::span<const SingularPoint> singular);

/// Theta-configuration of a quartic in V. Reducible curves with a line
/// component need their factorization (NeedsDecomposition otherwise).
ThetaConfig theta_curve(const TernaryForm& f, const ThetaOptions& opt = {});
/// Same, with a factorization whose product must equal f up to scale.
ThetaConfig theta_curve(const TernaryForm& f, std::span<const TernaryForm> components, const ThetaOptions& opt = {});

struct CatalogCase {
  int id;
  std::vector<int> degrees;  // sorted component degrees
  SingularityProfile profile;
  std::map<int, int> histogram;  // multiplicity -> number of lines
};
std::span<const CatalogCase> reducible_catalog();
const CatalogCase* find_catalog_case(std::vector<int> degrees, const SingularityProfile& p);

/// Theta-configuration of a reducible quartic in V given by its factors.
ThetaConfig theta_reducible(std::span<const TernaryForm> components, const ThetaOptions& opt = {});

/// Adjugate (transpose of the cofactor matrix).
Mat3 adjugate(const Mat3& m);

}  // namespace thetaq
