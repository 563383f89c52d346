#ifndef DSFUSE_ENGINE_HPP
#define DSFUSE_ENGINE_HPP

#include <string>
#include <utility>
#include <vector>

#include "dsfuse/decision.hpp"
#include "dsfuse/evidence.hpp"
#include "dsfuse/rdf/extract.hpp"
#include "dsfuse/rdf/graph.hpp"

namespace dsfuse {

struct FusionConfig {
  ResidualPolicy residual_policy = ResidualPolicy::kStrict;
  DecisionRule decision_rule = DecisionRule::kMaxBelief;
  // K above this per-instance threshold produces a warning entry.
  double conflict_warn_threshold = 0.5;  // in [0,1]
  bool fail_on_total_conflict = true;
};

// One report entry per uncertain instance, fused or failed.
struct InstanceEntry {
  std::string instance;
  bool fused = false;
  std::vector<std::string> sources;  // source ids, in combination order
  double conflict = 0.0;
  std::vector<std::pair<std::string, BeliefInterval>> intervals;
  std::vector<ElementScore> decision;
  std::vector<std::string> warnings;
  std::string error;  // reason, set when !fused
};

struct FusionReport {
  FusionConfig config;
  std::vector<InstanceEntry> instances;  // sorted by instance IRI
  std::vector<rdf::Diagnostic> diagnostics;
};

// Structural checks without fusing: extraction problems, per-source mass
// sums that deviate from 1 (strict semantics), and hypothesis candidates
// that never appear as a subject in the graph (dangling, warning only).
std::vector<rdf::Diagnostic> validate(const rdf::Graph& graph);

// extract -> group -> per-instance fuse -> annotate. Instances that fail
// are reported and left unannotated; with fail_on_total_conflict set a
// total conflict is thrown instead (naming instance and sources). Throws
// Error when assignments exist but none was extractable.
std::pair<rdf::Graph, FusionReport> fuse_graph(const rdf::Graph& graph,
                                               const FusionConfig& config);

}  // namespace dsfuse

#endif
