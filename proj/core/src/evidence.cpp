#include "dsfuse/evidence.hpp"

#include <cmath>
#include <utility>

#include "dsfuse/combination.hpp"
#include "dsfuse/error.hpp"
#include "dsfuse/numbers.hpp"

namespace dsfuse {

std::string_view to_string(ResidualPolicy policy) {
  switch (policy) {
    case ResidualPolicy::kStrict: return "strict";
    case ResidualPolicy::kResidualToOmega: return "residual-to-omega";
  }
  throw Error("residual policy: unknown enum value");
}

std::optional<ResidualPolicy> residual_policy_from_string(std::string_view name) {
  if (name == "strict") return ResidualPolicy::kStrict;
  if (name == "residual-to-omega") return ResidualPolicy::kResidualToOmega;
  return std::nullopt;
}

std::map<std::string, std::vector<Observation>> group_by_instance(
    std::span<const Observation> observations) {
  std::map<std::string, std::vector<Observation>> groups;
  for (const auto& observation : observations)
    groups[observation.uncertain_instance].push_back(observation);
  return groups;
}

Frame build_frame(std::span<const Observation> observations) {
  std::vector<std::string> candidates;
  for (const auto& observation : observations) {
    if (observation.total_ignorance) continue;
    for (const auto& member : observation.hypothesis) {
      bool seen = false;
      for (const auto& existing : candidates)
        if (existing == member) {
          seen = true;
          break;
        }
      if (!seen) candidates.push_back(member);
    }
  }
  if (candidates.empty())
    throw Error(
        "build_frame: every observation expresses total ignorance, so there "
        "are no candidates to reason over");
  return Frame(std::move(candidates));
}

MassFunction per_source_mass(const SourceRef& source,
                             std::span<const Observation> observations,
                             const Frame& frame,
                             ResidualPolicy policy) {
  std::vector<std::pair<HypothesisSet, double>> assignments;
  assignments.reserve(observations.size());
  double sum = 0.0;
  for (const auto& observation : observations) {
    if (observation.source.id != source.id) continue;
    if (!(observation.mass > 0.0) || observation.mass > 1.0 ||
        !std::isfinite(observation.mass))
      throw Error("source '" + source.id + "': mass " +
                  format_real(observation.mass) + " is outside (0, 1]");
    HypothesisSet set = HypothesisSet::empty(frame);
    if (observation.total_ignorance) {
      set = HypothesisSet::omega(frame);
    } else {
      for (const auto& member : observation.hypothesis) {
        if (!frame.index_of(member))
          throw Error("source '" + source.id + "': hypothesis member '" +
                      member + "' is outside the instance frame");
        set = set.union_with(HypothesisSet::singleton(frame, member));
      }
      if (set.is_empty())
        throw Error("source '" + source.id + "': observation has an empty hypothesis set");
    }
    assignments.emplace_back(std::move(set), observation.mass);
    sum += observation.mass;
  }

  if (assignments.empty())
    throw Error("source '" + source.id + "': no observations from this source");
  if (sum > 1.0 + MassFunction::kSumTolerance)
    throw Error("source '" + source.id + "': masses sum to " + format_real(sum) +
                ", which exceeds 1");
  if (policy == ResidualPolicy::kStrict) {
    if (std::abs(sum - 1.0) > MassFunction::kSumTolerance)
      throw Error("source '" + source.id + "': masses sum to " + format_real(sum) +
                  ", expected 1 (strict residual policy)");
  } else {
    const double shortfall = 1.0 - sum;
    if (shortfall > MassFunction::kSumTolerance)
      assignments.emplace_back(HypothesisSet::omega(frame), shortfall);
  }
  return MassFunction(frame, assignments);
}

UncertainInstance build_instance(std::string id,
                                 std::span<const Observation> observations,
                                 ResidualPolicy policy) {
  Frame frame = build_frame(observations);

  // Split per source, keeping each source's observation order.
  std::map<std::string, std::vector<Observation>> by_source;
  for (const auto& observation : observations)
    by_source[observation.source.id].push_back(observation);

  UncertainInstance instance{std::move(id), frame, {}};
  for (const auto& [source_id, source_observations] : by_source)
    instance.per_source.emplace(
        source_id, per_source_mass(SourceRef{source_id}, source_observations,
                                   frame, policy));
  return instance;
}

FusionResult fuse_instance(const UncertainInstance& instance, DecisionRule rule) {
  if (instance.per_source.empty())
    throw Error("fuse_instance: instance '" + instance.id + "' has no sources");

  std::vector<std::string> source_ids;
  std::vector<MassFunction> masses;
  source_ids.reserve(instance.per_source.size());
  masses.reserve(instance.per_source.size());
  for (const auto& [source_id, mass] : instance.per_source) {
    source_ids.push_back(source_id);
    masses.push_back(mass);
  }

  CombinationOutcome outcome{masses.front(), 0.0, {}};
  try {
    outcome = combine_all(masses);
  } catch (const TotalConflictError& e) {
    // Name the sources on both sides of the failing fold step.
    std::string left = source_ids.front();
    for (std::size_t i = 1; i < e.step && i < source_ids.size(); ++i)
      left += "' + '" + source_ids[i];
    const std::string& right = source_ids[e.step < source_ids.size()
                                              ? e.step
                                              : source_ids.size() - 1];
    throw TotalConflictError("instance '" + instance.id +
                                 "': total conflict between source '" + left +
                                 "' and source '" + right +
                                 "' (K = " + format_real(e.conflict) + ")",
                             e.conflict, e.step);
  }

  FusionResult result{instance.id, outcome.combined, outcome.conflict,
                      {},          rule,             {}};
  const Frame& frame = instance.frame;
  result.intervals.reserve(frame.size());
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const auto single = HypothesisSet::from_bits(frame, std::uint64_t{1} << i);
    result.intervals.emplace_back(
        frame.element(i), BeliefInterval{belief(outcome.combined, single),
                                         plausibility(outcome.combined, single)});
  }
  result.decision = decide(outcome.combined, rule);
  return result;
}

}  // namespace dsfuse
