// Quadruple enumeration, the weight catalog, the full per-input pipeline and
// the seeded corpus used to test uniqueness of the non-rational divisor.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdv/blowup.hpp"
#include "cdv/curvegeom.hpp"
#include "cdv/normalform.hpp"

namespace cdv {

struct Quadruple {
  Rational a, b, c, d;
  /// w(f) for the hyperplane alpha/a + beta/b + gamma/c + delta/d = 1.
  long m = 0;
  /// (m/a, m/b, m/c, m/d).
  Weight derived_weight{{1, 1, 1, 1}};
  /// Affine dimension of the admissible normal-form monomials lying on the hyperplane.
  int face_dimension = -1;

  std::string to_string() const;
  friend bool operator==(const Quadruple& p, const Quadruple& q) { return p.derived_weight == q.derived_weight; }
};

/// Every quadruple meeting the type's inequality conditions and the
/// discrepancy-one identity with m <= max_m, before any face requirement.
/// std::invalid_argument unless the type is cD or cE.
std::vector<Quadruple> scan_quadruples(const SingularityType& type, int max_m = 32);

/// scan_quadruples restricted to hyperplanes that cut a face of dimension 2
/// or 3 out of the admissible support of the type's normal form. Sorted by
/// (m, derived weight).
std::vector<Quadruple> lemma_quadruples(const SingularityType& type, int max_m = 32);

/// Weights listed for the type in the catalog of non-rational candidates.
std::vector<Weight> candidate_weights(const SingularityType& type);

struct CatalogComparison {
  std::vector<Weight> in_both;
  /// Quadruple weights that are neither plt nor in the catalog.
  std::vector<Weight> scan_only;
  std::vector<Weight> catalog_only;
  std::vector<Weight> plt;
  std::vector<std::string> flags;
};

CatalogComparison compare_with_catalog(const SingularityType& type, int max_m = 32);

struct DivisorReport {
  Weight weight{{1, 1, 1, 1}};
  Polynomial face_polynomial;
  Polynomial component;
  int multiplicity = 1;
  long discrepancy = 0;
  /// True for toric components coming from monomial content of the face polynomial.
  bool coordinate_hyperplane = false;
  bool in_catalog = false;
  RationalityResult rationality;
  std::vector<std::string> warnings;
};

struct AnalysisOptions {
  std::optional<int> truncation_degree;
  std::optional<int> max_coord;
  std::uint64_t seed = 0;
  /// Run the face-by-face non-degeneracy check on the analyzed diagram.
  bool check_diagram = true;
};

struct CatalogStatus {
  Weight weight{{1, 1, 1, 1}};
  bool realized = false;
};

struct AnalysisSummary {
  /// Toric content (coordinate hyperplane components) is listed but not counted.
  int discrepancy_one_components = 0;
  int non_rational = 0;
  int undecided = 0;
  /// More than one non-rational discrepancy-one component on a cD/cE input.
  bool violation = false;
  std::vector<CatalogStatus> catalog;
};

struct Analysis {
  Polynomial input;
  SingularityType type;
  std::optional<NormalFormCertificate> certificate;
  /// The polynomial whose diagram was used: the reduced form when available.
  Polynomial analyzed;
  NewtonDiagram diagram;
  std::optional<Verdict> diagram_check;
  int max_coord = 0;
  bool boundary_touched = false;
  std::vector<Weight> weights;
  std::vector<DivisorReport> reports;
  AnalysisSummary summary;
  std::vector<std::string> warnings;
};

/// std::invalid_argument for zero input or nonzero constant term; all other
/// failures become warnings.
Analysis analyze(const Polynomial& f, const AnalysisOptions& opts = {});

struct CorpusInstance {
  std::string label;
  SingularityType intended;
  Polynomial polynomial;
};

/// cD(n) for n = 4..12 and the three cE forms; exponents at their smallest
/// admissible values raised by up to 0, 1 or 2 per term; three coefficient
/// draws for each. Instances flagged degenerate are redrawn.
std::vector<CorpusInstance> generate_corpus(std::uint64_t seed = 0);

struct CorpusOutcome {
  CorpusInstance instance;
  SingularityType classified;
  int non_rational = 0;
  int undecided = 0;
  bool violation = false;
  std::vector<Weight> non_rational_weights;
  std::vector<std::string> warnings;
};

std::vector<CorpusOutcome> run_corpus(const std::vector<CorpusInstance>& corpus, const AnalysisOptions& opts = {});

}  // namespace cdv
