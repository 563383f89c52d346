#ifndef DSFUSE_EVIDENCE_HPP
#define DSFUSE_EVIDENCE_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dsfuse/decision.hpp"
#include "dsfuse/frame.hpp"
#include "dsfuse/mass_function.hpp"
#include "dsfuse/observation.hpp"

namespace dsfuse {

// What to do when a source's masses sum to less than 1. Overruns beyond 1
// are an error under both policies.
enum class ResidualPolicy {
  kStrict,           // the sum must be 1 within tolerance
  kResidualToOmega,  // a positive shortfall is added to Omega (unexpressed ignorance)
};

// "strict", "residual-to-omega"
std::string_view to_string(ResidualPolicy policy);
std::optional<ResidualPolicy> residual_policy_from_string(std::string_view name);

struct BeliefInterval {
  double belief = 0.0;
  double plausibility = 0.0;  // belief <= plausibility always holds

  friend bool operator==(const BeliefInterval&, const BeliefInterval&) = default;
};

// Partition of the observations by uncertain-instance IRI, preserving
// per-group input order.
std::map<std::string, std::vector<Observation>> group_by_instance(
    std::span<const Observation> observations);

// Frame for one instance: the union of all non-Omega hypothesis members,
// ordered by first appearance in the observation sequence. Throws Error
// when every observation is total ignorance (nothing to reason over).
Frame build_frame(std::span<const Observation> observations);

// One source's mass function over the instance frame. Omega observations
// map to the full set. Throws Error when a hypothesis member is outside
// the frame, the sum exceeds 1, or (under kStrict) the sum deviates from 1
// beyond tolerance; messages name the source id and the actual sum.
MassFunction per_source_mass(const SourceRef& source,
                             std::span<const Observation> observations,
                             const Frame& frame,
                             ResidualPolicy policy);

// An uncertain instance ready for fusion: its derived frame and one mass
// function per source, keyed by source id (the deterministic combination
// order).
struct UncertainInstance {
  std::string id;
  Frame frame;
  std::map<std::string, MassFunction> per_source;
};

// group by source -> build_frame -> per_source_mass for every source.
UncertainInstance build_instance(std::string id,
                                 std::span<const Observation> observations,
                                 ResidualPolicy policy);

struct FusionResult {
  std::string instance;
  MassFunction combined;
  double conflict = 0.0;
  // Per candidate, in frame order; belief/plausibility of the singleton.
  std::vector<std::pair<std::string, BeliefInterval>> intervals;
  DecisionRule rule = DecisionRule::kMaxBelief;
  std::vector<ElementScore> decision;
};

// Combines the per-source masses in source-id order, then derives the
// intervals and the ranked decision. A TotalConflictError names the
// instance and the sources of the failing step.
FusionResult fuse_instance(const UncertainInstance& instance, DecisionRule rule);

}  // namespace dsfuse

#endif
