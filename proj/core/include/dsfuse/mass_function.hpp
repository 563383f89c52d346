#ifndef DSFUSE_MASS_FUNCTION_HPP
#define DSFUSE_MASS_FUNCTION_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dsfuse/frame.hpp"
#include "dsfuse/hypothesis_set.hpp"

namespace dsfuse {

// Sparse basic belief assignment: strictly positive mass on non-empty
// subsets of one frame, summing to 1 within kSumTolerance. Only focal
// elements are stored (sources assert few of them); they are kept sorted
// by bitmask so iteration order is deterministic. Immutable.
class MassFunction {
 public:
  static constexpr double kSumTolerance = 1e-9;

  struct Focal {
    std::uint64_t bits;
    double mass;
  };

  // Duplicate hypothesis sets in the input are summed. Throws Error when a
  // focal set is empty or over a different frame, a mass is not in (0,1],
  // or the total deviates from 1 by more than kSumTolerance (the message
  // reports the actual sum).
  MassFunction(Frame frame,
               std::span<const std::pair<HypothesisSet, double>> assignments);
  MassFunction(Frame frame,
               std::initializer_list<std::pair<HypothesisSet, double>> assignments);

  const Frame& frame() const noexcept { return frame_; }

  // Focal elements in ascending bitmask order.
  const std::vector<Focal>& focal() const noexcept { return focal_; }
  std::size_t focal_count() const noexcept { return focal_.size(); }

  // Mass of exactly this set; 0 when it is not focal.
  double mass_of(const HypothesisSet& set) const;

  HypothesisSet set_of(const Focal& focal_element) const;

  bool is_vacuous() const noexcept;

 private:
  friend MassFunction vacuous(Frame frame);
  MassFunction(Frame frame, std::vector<Focal> focal);

  Frame frame_;
  std::vector<Focal> focal_;
};

// Total ignorance: all mass on Omega. The neutral element of combination.
MassFunction vacuous(Frame frame);

// Bel(A): total mass of focal elements contained in A — the provable
// support. Bel(empty) = 0, Bel(Omega) = 1.
double belief(const MassFunction& m, const HypothesisSet& a);

// Pl(A): total mass of focal elements intersecting A — the non-refuted
// support. Pl(A) = 1 - Bel(complement(A)).
double plausibility(const MassFunction& m, const HypothesisSet& a);

}  // namespace dsfuse

#endif
