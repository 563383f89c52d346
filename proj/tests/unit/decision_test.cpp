#include <doctest.h>

#include "dsfuse/combination.hpp"
#include "dsfuse/decision.hpp"
#include "dsfuse/frame.hpp"
#include "dsfuse/hypothesis_set.hpp"
#include "dsfuse/mass_function.hpp"

using dsfuse::decide;
using dsfuse::DecisionRule;
using dsfuse::Frame;
using dsfuse::HypothesisSet;
using dsfuse::MassFunction;
using dsfuse::pignistic;

namespace {

const Frame kFrame({"tank_i", "tank_j", "truck"});

MassFunction combined() {
  const MassFunction m_a(
      kFrame, {{HypothesisSet::singleton(kFrame, "tank_i"), 0.4},
               {HypothesisSet::of(kFrame, {"tank_i", "tank_j"}), 0.6}});
  const MassFunction m_b(kFrame,
                         {{HypothesisSet::singleton(kFrame, "tank_i"), 0.5},
                          {HypothesisSet::singleton(kFrame, "truck"), 0.2},
                          {HypothesisSet::omega(kFrame), 0.3}});
  return dsfuse::combine_dempster(m_a, m_b).combined;
}

}  // namespace

TEST_CASE("pignistic transform splits masses evenly over members") {
  const auto bet = pignistic(combined());
  REQUIRE(bet.size() == 3);
  CHECK(bet[0].element == "tank_i");
  CHECK(bet[0].score == doctest::Approx(0.8875).epsilon(1e-9));
  CHECK(bet[1].element == "tank_j");
  CHECK(bet[1].score == doctest::Approx(0.1125).epsilon(1e-9));
  CHECK(bet[2].element == "truck");
  CHECK(bet[2].score == doctest::Approx(0.0).epsilon(1e-12));

  double total = 0.0;
  for (const auto& entry : bet) total += entry.score;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("decision rules rank the reference case identically") {
  const auto m = combined();

  const auto by_belief = decide(m, DecisionRule::kMaxBelief);
  REQUIRE(by_belief.size() == 3);
  CHECK(by_belief[0].element == "tank_i");
  CHECK(by_belief[0].score == doctest::Approx(0.775).epsilon(1e-9));

  const auto by_plausibility = decide(m, DecisionRule::kMaxPlausibility);
  CHECK(by_plausibility[0].element == "tank_i");
  CHECK(by_plausibility[0].score == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(by_plausibility[1].element == "tank_j");
  CHECK(by_plausibility[1].score == doctest::Approx(0.225).epsilon(1e-9));

  const auto by_pignistic = decide(m, DecisionRule::kMaxPignistic);
  CHECK(by_pignistic[0].element == "tank_i");
  CHECK(by_pignistic[0].score == doctest::Approx(0.8875).epsilon(1e-9));
}

TEST_CASE("ties keep frame order, making rankings deterministic") {
  const Frame frame({"late", "early"});  // deliberately not alphabetical
  const MassFunction even(frame, {{HypothesisSet::omega(frame), 1.0}});
  const auto ranking = decide(even, DecisionRule::kMaxPignistic);
  REQUIRE(ranking.size() == 2);
  CHECK(ranking[0].element == "late");
  CHECK(ranking[1].element == "early");
  CHECK(ranking[0].score == doctest::Approx(0.5));
}

TEST_CASE("rule names round-trip through the string forms") {
  using dsfuse::decision_rule_from_string;
  CHECK(to_string(DecisionRule::kMaxBelief) == "max-belief");
  CHECK(decision_rule_from_string("max-plausibility") ==
        DecisionRule::kMaxPlausibility);
  CHECK(decision_rule_from_string("max-pignistic") ==
        DecisionRule::kMaxPignistic);
  CHECK_FALSE(decision_rule_from_string("argmax").has_value());
}
