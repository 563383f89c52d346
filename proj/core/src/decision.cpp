#include "dsfuse/decision.hpp"

#include <algorithm>
#include <bit>

#include "dsfuse/error.hpp"

namespace dsfuse {

std::string_view to_string(DecisionRule rule) {
  switch (rule) {
    case DecisionRule::kMaxBelief: return "max-belief";
    case DecisionRule::kMaxPlausibility: return "max-plausibility";
    case DecisionRule::kMaxPignistic: return "max-pignistic";
  }
  throw Error("decision rule: unknown enum value");
}

std::optional<DecisionRule> decision_rule_from_string(std::string_view name) {
  if (name == "max-belief") return DecisionRule::kMaxBelief;
  if (name == "max-plausibility") return DecisionRule::kMaxPlausibility;
  if (name == "max-pignistic") return DecisionRule::kMaxPignistic;
  return std::nullopt;
}

std::vector<ElementScore> pignistic(const MassFunction& m) {
  const Frame& frame = m.frame();
  std::vector<double> probability(frame.size(), 0.0);
  for (const auto& focal : m.focal()) {
    const double share = focal.mass / std::popcount(focal.bits);
    for (std::size_t i = 0; i < frame.size(); ++i)
      if (focal.bits & (std::uint64_t{1} << i)) probability[i] += share;
  }
  std::vector<ElementScore> out;
  out.reserve(frame.size());
  for (std::size_t i = 0; i < frame.size(); ++i)
    out.push_back({frame.element(i), probability[i]});
  return out;
}

std::vector<ElementScore> decide(const MassFunction& m, DecisionRule rule) {
  const Frame& frame = m.frame();
  std::vector<ElementScore> scored;
  scored.reserve(frame.size());

  if (rule == DecisionRule::kMaxPignistic) {
    scored = pignistic(m);
  } else {
    for (std::size_t i = 0; i < frame.size(); ++i) {
      const auto single = HypothesisSet::from_bits(frame, std::uint64_t{1} << i);
      const double score = rule == DecisionRule::kMaxBelief
                               ? belief(m, single)
                               : plausibility(m, single);
      scored.push_back({frame.element(i), score});
    }
  }

  // Stable sort keeps frame order for ties: the deterministic tie-break.
  std::stable_sort(scored.begin(), scored.end(),
                   [](const ElementScore& a, const ElementScore& b) {
                     return a.score > b.score;
                   });
  return scored;
}

}  // namespace dsfuse
