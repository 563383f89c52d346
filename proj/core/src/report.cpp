#include "dsfuse/report.hpp"

#include <json.hpp>

#include "dsfuse/numbers.hpp"

namespace dsfuse {

namespace {

using json = nlohmann::ordered_json;

// Reals are rounded before storage so the serialized digits match the
// 12-significant-digit rendering used for RDF literals.
json real(double value) { return round_significant(value); }

json render_config(const FusionConfig& config) {
  json out;
  out["residual_policy"] = to_string(config.residual_policy);
  out["decision_rule"] = to_string(config.decision_rule);
  out["conflict_warn_threshold"] = real(config.conflict_warn_threshold);
  out["fail_on_total_conflict"] = config.fail_on_total_conflict;
  return out;
}

json render_instance(const InstanceEntry& entry) {
  json out;
  out["instance"] = entry.instance;
  out["status"] = entry.fused ? "fused" : "failed";
  out["sources"] = entry.sources;
  if (entry.fused) {
    out["conflict"] = real(entry.conflict);
    json intervals = json::object();
    for (const auto& [candidate, interval] : entry.intervals) {
      intervals[candidate] = {{"belief", real(interval.belief)},
                              {"plausibility", real(interval.plausibility)}};
    }
    out["intervals"] = std::move(intervals);
    json ranking = json::array();
    for (const auto& [element, score] : entry.decision)
      ranking.push_back({{"candidate", element}, {"score", real(score)}});
    out["decision"] = std::move(ranking);
    out["warnings"] = entry.warnings;
  } else {
    out["error"] = entry.error;
  }
  return out;
}

}  // namespace

std::string report_to_json(const FusionReport& report) {
  json out;
  out["config"] = render_config(report.config);

  json instances = json::array();
  for (const auto& entry : report.instances)
    instances.push_back(render_instance(entry));
  out["instances"] = std::move(instances);

  json diagnostics = json::array();
  for (const auto& diagnostic : report.diagnostics)
    diagnostics.push_back({{"severity", to_string(diagnostic.severity)},
                           {"message", diagnostic.message},
                           {"node", diagnostic.node}});
  out["diagnostics"] = std::move(diagnostics);

  return out.dump(2) + "\n";
}

}  // namespace dsfuse
