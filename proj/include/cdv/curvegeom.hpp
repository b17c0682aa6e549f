// Rationality of exceptional components: cones over weighted plane curves,
// genus from interior points of the chart's Newton polygon, and the rule
// cascade that turns face data into a verdict.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cdv/newton.hpp"
#include "cdv/normalform.hpp"

namespace cdv {

struct ConeStructure {
  int missing_variable = 0;
  /// The other three variables in increasing index order, with their weights.
  std::array<int, 3> base_variables{};
  std::array<int, 3> base_weights{};
  /// Same polynomial as the component; it does not involve missing_variable.
  Polynomial base_equation;
};

/// None when every variable occurs. Several absent: the one of largest weight
/// (lowest index on ties) is taken as the cone vertex direction.
std::optional<ConeStructure> detect_cone(const Polynomial& component, const Weight& w);

/// Sets a weight-1 base variable to 1 (the highest-index one, so t before z)
/// and returns the primitive result. std::domain_error if no base weight is 1.
Polynomial chart_polynomial(const ConeStructure& c);
/// Index of the variable chart_polynomial specializes.
int chart_variable(const ConeStructure& c);

using LatticePoint = std::array<long, 2>;

struct LatticePolygon {
  /// Convex hull, counterclockwise from the lowest-then-leftmost vertex.
  /// One or two entries when the support is a point or collinear.
  std::vector<LatticePoint> vertices;
  /// Sorted.
  std::vector<LatticePoint> interior_points;
  long doubled_area = 0;
  long boundary_points = 0;
};

/// Hull of the given points with its interior lattice points.
LatticePolygon lattice_polygon(std::vector<LatticePoint> points);

/// Exponents of g in two coordinates: first the higher-index variable that
/// occurs, second the lower one (so (z, y) when g involves y and z).
std::vector<LatticePoint> plane_support(const Polynomial& g);

struct GenusResult {
  int genus = 0;
  LatticePolygon polygon;
};

/// Number of interior lattice points of the Newton polygon; 0 for a
/// collinear support. std::invalid_argument if g involves three or more variables.
GenusResult polygon_genus(const Polynomial& g);

/// Interior points collinear. Genus <= 1 gives true.
bool is_hyperelliptic(const LatticePolygon& p);

enum class Rationality { rational, non_rational, rational_by_plt, undecided };

std::string to_string(Rationality r);

/// Weight patterns whose blowup is plt for the type: (k, k-1, 2, 1) for cD,
/// (6,4,3,1) for cE6, (15,10,6,1) for cE8.
bool is_plt_weight(const SingularityType& type, const Weight& w);

struct RationalityInput {
  SingularityType type;
  Weight weight{{1, 1, 1, 1}};
  Polynomial face_polynomial;
  Polynomial component;
};

struct RationalityResult {
  Rationality verdict = Rationality::undecided;
  std::string rule;
  int face_dimension = 0;
  std::optional<ConeStructure> cone;
  std::optional<Polynomial> chart;
  std::optional<GenusResult> genus;
  std::optional<bool> hyperelliptic;
  bool hyperelliptic_by_convention = false;
  /// Chart non-degeneracy, when the cone rule was used.
  std::optional<Verdict> chart_check;
  std::vector<std::string> notes;
};

RationalityResult classify_rationality(const RationalityInput& in, const NondegeneracyOptions& opts = {});

}  // namespace cdv
