#include "dsfuse/mass_function.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <utility>

#include "dsfuse/error.hpp"

namespace dsfuse {

namespace {

std::string render_sum(double sum) {
  std::ostringstream out;
  out.precision(17);
  out << sum;
  return out.str();
}

std::vector<MassFunction::Focal> normalize_assignments(
    const Frame& frame,
    std::span<const std::pair<HypothesisSet, double>> assignments) {
  std::map<std::uint64_t, double> acc;  // sorted by bitmask
  for (const auto& [set, mass] : assignments) {
    require_same_frame(frame, set.frame(), "mass function");
    if (set.is_empty())
      throw Error("mass function: the empty set cannot be a focal element");
    if (!(mass > 0.0) || mass > 1.0 || !std::isfinite(mass))
      throw Error("mass function: mass " + render_sum(mass) +
                  " is outside (0, 1]");
    acc[set.bits()] += mass;
  }
  double sum = 0.0;
  for (const auto& [bits, mass] : acc) sum += mass;
  if (std::abs(sum - 1.0) > MassFunction::kSumTolerance)
    throw Error("mass function: focal masses sum to " + render_sum(sum) +
                ", expected 1");
  std::vector<MassFunction::Focal> focal;
  focal.reserve(acc.size());
  for (const auto& [bits, mass] : acc)
    if (mass > 0.0) focal.push_back({bits, mass});
  return focal;
}

}  // namespace

MassFunction::MassFunction(Frame frame, std::vector<Focal> focal)
    : frame_(std::move(frame)), focal_(std::move(focal)) {}

MassFunction::MassFunction(
    Frame frame, std::span<const std::pair<HypothesisSet, double>> assignments)
    : frame_(std::move(frame)),
      focal_(normalize_assignments(frame_, assignments)) {}

MassFunction::MassFunction(
    Frame frame,
    std::initializer_list<std::pair<HypothesisSet, double>> assignments)
    : frame_(std::move(frame)),
      focal_(normalize_assignments(
          frame_, std::span<const std::pair<HypothesisSet, double>>(
                      assignments.begin(), assignments.size()))) {}

double MassFunction::mass_of(const HypothesisSet& set) const {
  require_same_frame(frame_, set.frame(), "mass_of");
  const auto it = std::lower_bound(
      focal_.begin(), focal_.end(), set.bits(),
      [](const Focal& f, std::uint64_t bits) { return f.bits < bits; });
  if (it == focal_.end() || it->bits != set.bits()) return 0.0;
  return it->mass;
}

HypothesisSet MassFunction::set_of(const Focal& focal_element) const {
  return HypothesisSet::from_bits(frame_, focal_element.bits);
}

bool MassFunction::is_vacuous() const noexcept {
  return focal_.size() == 1 && focal_.front().bits == frame_.full_mask();
}

MassFunction vacuous(Frame frame) {
  std::vector<MassFunction::Focal> focal{{frame.full_mask(), 1.0}};
  return MassFunction(std::move(frame), std::move(focal));
}

double belief(const MassFunction& m, const HypothesisSet& a) {
  require_same_frame(m.frame(), a.frame(), "belief");
  double sum = 0.0;
  for (const auto& focal : m.focal())
    if ((focal.bits & ~a.bits()) == 0) sum += focal.mass;
  return sum;
}

double plausibility(const MassFunction& m, const HypothesisSet& a) {
  require_same_frame(m.frame(), a.frame(), "plausibility");
  double sum = 0.0;
  for (const auto& focal : m.focal())
    if ((focal.bits & a.bits()) != 0) sum += focal.mass;
  return sum;
}

}  // namespace dsfuse
