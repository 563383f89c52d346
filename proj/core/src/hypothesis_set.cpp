#include "dsfuse/hypothesis_set.hpp"

#include <bit>
#include <utility>

#include "dsfuse/error.hpp"

namespace dsfuse {

void require_same_frame(const Frame& a, const Frame& b, std::string_view what) {
  if (!(a == b))
    throw Error(std::string(what) + ": frame mismatch (operands were built over different frames)");
}

HypothesisSet::HypothesisSet(Frame frame, std::uint64_t bits)
    : frame_(std::move(frame)), bits_(bits) {}

HypothesisSet HypothesisSet::empty(Frame frame) {
  return HypothesisSet(std::move(frame), 0);
}

HypothesisSet HypothesisSet::omega(Frame frame) {
  const std::uint64_t full = frame.full_mask();
  return HypothesisSet(std::move(frame), full);
}

HypothesisSet HypothesisSet::singleton(Frame frame, std::string_view element) {
  const auto index = frame.index_of(element);
  if (!index)
    throw Error("hypothesis set: element '" + std::string(element) +
                "' is not in the frame");
  return HypothesisSet(std::move(frame), std::uint64_t{1} << *index);
}

HypothesisSet HypothesisSet::of(Frame frame, std::span<const std::string> elements) {
  std::uint64_t bits = 0;
  for (const auto& element : elements) {
    const auto index = frame.index_of(element);
    if (!index)
      throw Error("hypothesis set: element '" + element + "' is not in the frame");
    bits |= std::uint64_t{1} << *index;
  }
  return HypothesisSet(std::move(frame), bits);
}

HypothesisSet HypothesisSet::of(Frame frame,
                                std::initializer_list<std::string_view> elements) {
  std::uint64_t bits = 0;
  for (const auto element : elements) {
    const auto index = frame.index_of(element);
    if (!index)
      throw Error("hypothesis set: element '" + std::string(element) +
                  "' is not in the frame");
    bits |= std::uint64_t{1} << *index;
  }
  return HypothesisSet(std::move(frame), bits);
}

HypothesisSet HypothesisSet::from_bits(Frame frame, std::uint64_t bits) {
  if ((bits & ~frame.full_mask()) != 0)
    throw Error("hypothesis set: bits reference positions beyond the frame size");
  return HypothesisSet(std::move(frame), bits);
}

std::size_t HypothesisSet::count() const noexcept {
  return static_cast<std::size_t>(std::popcount(bits_));
}

bool HypothesisSet::contains(std::string_view element) const noexcept {
  const auto index = frame_.index_of(element);
  return index && (bits_ & (std::uint64_t{1} << *index)) != 0;
}

bool HypothesisSet::subset_of(const HypothesisSet& other) const {
  require_same_frame(frame_, other.frame_, "subset_of");
  return (bits_ & ~other.bits_) == 0;
}

bool HypothesisSet::intersects(const HypothesisSet& other) const {
  require_same_frame(frame_, other.frame_, "intersects");
  return (bits_ & other.bits_) != 0;
}

HypothesisSet HypothesisSet::union_with(const HypothesisSet& other) const {
  require_same_frame(frame_, other.frame_, "union_with");
  return HypothesisSet(frame_, bits_ | other.bits_);
}

HypothesisSet HypothesisSet::intersect(const HypothesisSet& other) const {
  require_same_frame(frame_, other.frame_, "intersect");
  return HypothesisSet(frame_, bits_ & other.bits_);
}

HypothesisSet HypothesisSet::complement() const {
  return HypothesisSet(frame_, ~bits_ & frame_.full_mask());
}

std::vector<std::string> HypothesisSet::elements() const {
  std::vector<std::string> out;
  out.reserve(count());
  for (std::size_t i = 0; i < frame_.size(); ++i)
    if (bits_ & (std::uint64_t{1} << i)) out.push_back(frame_.element(i));
  return out;
}

bool operator==(const HypothesisSet& a, const HypothesisSet& b) {
  return a.bits_ == b.bits_ && a.frame_ == b.frame_;
}

}  // namespace dsfuse
