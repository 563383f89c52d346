#include "dsfuse/engine.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

#include "dsfuse/error.hpp"
#include "dsfuse/numbers.hpp"
#include "dsfuse/rdf/annotate.hpp"
#include "dsfuse/rdf/term.hpp"

namespace dsfuse {

namespace {

rdf::Term node_from_id(const std::string& id) {
  if (id.starts_with("_:")) return rdf::Term::blank(id.substr(2));
  return rdf::Term::iri(id);
}

std::vector<std::string> source_ids(std::span<const Observation> observations) {
  std::set<std::string> ids;
  for (const auto& obs : observations) ids.insert(obs.source.id);
  return {ids.begin(), ids.end()};
}

}  // namespace

std::vector<rdf::Diagnostic> validate(const rdf::Graph& graph) {
  rdf::ExtractionResult extraction = rdf::extract_observations(graph);
  std::vector<rdf::Diagnostic> diagnostics = std::move(extraction.diagnostics);

  const auto groups = group_by_instance(extraction.observations);
  for (const auto& [instance, observations] : groups) {
    std::optional<Frame> frame;
    try {
      frame.emplace(build_frame(observations));
    } catch (const Error& e) {
      diagnostics.push_back({rdf::Severity::kError, e.what(), instance});
      continue;
    }
    for (const std::string& source : source_ids(observations)) {
      try {
        per_source_mass(SourceRef{source}, observations, *frame,
                        ResidualPolicy::kStrict);
      } catch (const Error& e) {
        diagnostics.push_back({rdf::Severity::kError, e.what(), source});
      }
    }
  }

  // Dangling hypothesis candidates, in first-appearance order.
  std::set<std::string> seen;
  for (const auto& obs : extraction.observations) {
    for (const std::string& candidate : obs.hypothesis) {
      if (!seen.insert(candidate).second) continue;
      if (!graph.has_subject(rdf::Term::iri(candidate)))
        diagnostics.push_back(
            {rdf::Severity::kWarning,
             "hypothesis candidate does not occur as a subject in the graph",
             candidate});
    }
  }
  return diagnostics;
}

std::pair<rdf::Graph, FusionReport> fuse_graph(const rdf::Graph& graph,
                                               const FusionConfig& config) {
  if (!(config.conflict_warn_threshold >= 0.0 &&
        config.conflict_warn_threshold <= 1.0))
    throw Error("fuse_graph: conflict_warn_threshold must lie in [0, 1]");

  rdf::ExtractionResult extraction = rdf::extract_observations(graph);

  FusionReport report;
  report.config = config;
  report.diagnostics = std::move(extraction.diagnostics);

  if (extraction.observations.empty()) {
    std::size_t errors = 0;
    for (const auto& d : report.diagnostics)
      if (d.severity == rdf::Severity::kError) ++errors;
    if (errors > 0)
      throw Error("fuse_graph: no observation survived extraction (" +
                  std::to_string(errors) + " extraction error" +
                  (errors == 1 ? "" : "s") + "; first: " +
                  [&] {
                    for (const auto& d : report.diagnostics)
                      if (d.severity == rdf::Severity::kError) return d.message;
                    return std::string();
                  }() +
                  ")");
    return {graph, std::move(report)};
  }

  std::vector<FusionResult> results;
  for (const auto& [instance, observations] :
       group_by_instance(extraction.observations)) {
    InstanceEntry entry;
    entry.instance = instance;
    entry.sources = source_ids(observations);
    try {
      const UncertainInstance built =
          build_instance(instance, observations, config.residual_policy);
      FusionResult result = fuse_instance(built, config.decision_rule);
      entry.fused = true;
      entry.conflict = result.conflict;
      entry.intervals = result.intervals;
      entry.decision = result.decision;
      if (result.conflict > config.conflict_warn_threshold)
        entry.warnings.push_back(
            "conflict K = " + format_real(result.conflict) +
            " exceeds the warning threshold " +
            format_real(config.conflict_warn_threshold));
      results.push_back(std::move(result));
    } catch (const TotalConflictError& e) {
      if (config.fail_on_total_conflict) throw;
      entry.fused = false;
      entry.error = e.what();
    } catch (const Error& e) {
      entry.fused = false;
      entry.error = e.what();
    }
    report.instances.push_back(std::move(entry));
  }

  rdf::Graph annotated = rdf::annotate_results(graph, results);
  return {std::move(annotated), std::move(report)};
}

}  // namespace dsfuse
