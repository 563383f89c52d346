#ifndef DSFUSE_DECISION_HPP
#define DSFUSE_DECISION_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsfuse/mass_function.hpp"

namespace dsfuse {

enum class DecisionRule {
  kMaxBelief,
  kMaxPlausibility,
  kMaxPignistic,
};

// "max-belief", "max-plausibility", "max-pignistic"
std::string_view to_string(DecisionRule rule);
std::optional<DecisionRule> decision_rule_from_string(std::string_view name);

struct ElementScore {
  std::string element;
  double score;
};

// Pignistic transform BetP: each focal mass split evenly among its
// members, yielding a probability over the singletons. Returned in frame
// element order; values sum to 1.
std::vector<ElementScore> pignistic(const MassFunction& m);

// All singleton hypotheses ranked by the rule's score, descending. Ties
// keep frame element order, so the ranking is deterministic.
std::vector<ElementScore> decide(const MassFunction& m, DecisionRule rule);

}  // namespace dsfuse

#endif
