#ifndef DSFUSE_COMBINATION_HPP
#define DSFUSE_COMBINATION_HPP

#include <span>
#include <vector>

#include "dsfuse/mass_function.hpp"

namespace dsfuse {

struct CombinationOutcome {
  MassFunction combined;
  // K of the final pairwise step. Surfaced so callers can audit how much
  // evidence fell on empty intersections before renormalization.
  double conflict = 0.0;
  // K of every fold step, in combination order; empty for a single input.
  std::vector<double> step_conflicts;
};

// K = sum of m1(B) * m2(C) over pairs with empty intersection.
double conflict(const MassFunction& m1, const MassFunction& m2);

// Normalized Dempster rule: conjunctive pooling with the empty-set mass
// redistributed by 1/(1-K). Throws TotalConflictError when K >= 1 - 1e-9
// and Error on a frame mismatch.
CombinationOutcome combine_dempster(const MassFunction& m1, const MassFunction& m2);

// Left fold of combine_dempster. Commutative and associative within
// floating-point tolerance, so input order only matters at the 1e-9 level.
// Throws Error on an empty sequence; a TotalConflictError from a fold step
// carries the step index.
CombinationOutcome combine_all(std::span<const MassFunction> masses);

}  // namespace dsfuse

#endif
