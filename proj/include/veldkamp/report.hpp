#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "veldkamp/gf2space.hpp"
#include "veldkamp/labeling.hpp"
#include "veldkamp/tables.hpp"

namespace veld {

struct AnalysisOptions {
  std::optional<VertexLabeling> labeling;
  // The all-pairs full-line-size histogram is cubic in the catalog; skip it
  // above this size.
  int histogram_limit = 512;
  EnumerateOptions enumerate;
};

// Results of the Pauli-labeling verification suite. Steps that do not apply
// to a structure (no distinguished PG(3,2), no Y-only plane, ...) are left
// empty rather than reported as failures.
struct LabelingReport {
  VertexLabeling labeling;
  InducedLabeling induced;
  std::vector<int> line_product_violations;
  std::optional<bool> bijection_on_top;           // largest maximal subspace
  std::optional<bool> bijection_on_distinguished;
  std::optional<int> isotropic_line_count;        // within the distinguished space
  std::optional<bool> gq22;                       // its W(3,2) certification
  std::optional<MerminPeresResult> mermin_peres;
  std::optional<std::string> mermin_peres_error;
  std::vector<ProjectiveSubspace> y_only_fanos;
  std::optional<PaschConfiguration> pasch;        // from the unique Y-only plane
  std::optional<SubgroupReport> distinguished_subgroup;
};

struct AnalysisReport {
  VeldkampSpace space;
  SubspaceHierarchy hierarchy;
  std::vector<PointDiagnostics> diagnostics;
  std::vector<int> exceptional;  // members of no maximal subspace of dim >= 2
  std::optional<std::map<int, long long>> full_line_histogram;
  std::vector<std::string> warnings;
  std::optional<LabelingReport> labeling;
};

AnalysisReport build_analysis(const IncidenceStructure& structure,
                              const AnalysisOptions& options = {});

std::string to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

enum class DotView { Diagram, Veldkamp, Hierarchy };
std::string emit_dot(const AnalysisReport& report, DotView view);

// Verification of the reference results for the extended D diagrams,
// n in 4..8: counts, subspace structure, and (when a labeling is present)
// the labeling verdicts. Empty result means everything holds.
std::vector<std::string> check_dynkin_expectations(const AnalysisReport& report,
                                                   int n);

}  // namespace veld
