#include "dsfuse/combination.hpp"

#include <map>
#include <utility>

#include "dsfuse/error.hpp"
#include "dsfuse/numbers.hpp"

namespace dsfuse {

namespace {

constexpr double kTotalConflictEps = 1e-9;

}  // namespace

double conflict(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1.frame(), m2.frame(), "conflict");
  double k = 0.0;
  for (const auto& f1 : m1.focal())
    for (const auto& f2 : m2.focal())
      if ((f1.bits & f2.bits) == 0) k += f1.mass * f2.mass;
  return k;
}

CombinationOutcome combine_dempster(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1.frame(), m2.frame(), "combine_dempster");

  // Conjunctive pooling: every focal pair contributes its product to the
  // intersection; products on the empty set accumulate the conflict K.
  double k = 0.0;
  std::map<std::uint64_t, double> pooled;
  for (const auto& f1 : m1.focal()) {
    for (const auto& f2 : m2.focal()) {
      const std::uint64_t cut = f1.bits & f2.bits;
      const double product = f1.mass * f2.mass;
      if (cut == 0)
        k += product;
      else
        pooled[cut] += product;
    }
  }

  if (k >= 1.0 - kTotalConflictEps)
    throw TotalConflictError(
        "total conflict: K = " + format_real(k) +
            "; the sources have no common hypothesis to agree on",
        k);

  // Renormalize by the surviving total rather than the textbook 1-K so the
  // result sums to 1 even when the inputs only sum to 1 within tolerance.
  double total = 0.0;
  for (const auto& [bits, mass] : pooled) total += mass;

  const Frame& frame = m1.frame();
  std::vector<std::pair<HypothesisSet, double>> assignments;
  assignments.reserve(pooled.size());
  for (const auto& [bits, mass] : pooled)
    assignments.emplace_back(HypothesisSet::from_bits(frame, bits), mass / total);

  CombinationOutcome outcome{MassFunction(frame, assignments), k, {k}};
  return outcome;
}

CombinationOutcome combine_all(std::span<const MassFunction> masses) {
  if (masses.empty())
    throw Error("combine_all: at least one mass function is required");

  CombinationOutcome outcome{masses.front(), 0.0, {}};
  for (std::size_t step = 1; step < masses.size(); ++step) {
    try {
      CombinationOutcome next = combine_dempster(outcome.combined, masses[step]);
      outcome.combined = std::move(next.combined);
      outcome.conflict = next.conflict;
      outcome.step_conflicts.push_back(next.conflict);
    } catch (const TotalConflictError& e) {
      throw TotalConflictError("combine_all: total conflict at fold step " +
                                   std::to_string(step) + ": " + e.what(),
                               e.conflict, step);
    }
  }
  return outcome;
}

}  // namespace dsfuse
