#ifndef DSFUSE_HYPOTHESIS_SET_HPP
#define DSFUSE_HYPOTHESIS_SET_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dsfuse/frame.hpp"

namespace dsfuse {

// A subset of a frame (focal element candidate), stored as a bitmask over
// the frame's element order. Both the empty set and Omega are
// representable. Set algebra is O(1); operations on sets from different
// frames throw Error.
class HypothesisSet {
 public:
  static HypothesisSet empty(Frame frame);
  static HypothesisSet omega(Frame frame);
  // Throws Error when an element is not in the frame.
  static HypothesisSet singleton(Frame frame, std::string_view element);
  static HypothesisSet of(Frame frame, std::span<const std::string> elements);
  static HypothesisSet of(Frame frame, std::initializer_list<std::string_view> elements);
  // Throws Error when bits reference positions beyond the frame size.
  static HypothesisSet from_bits(Frame frame, std::uint64_t bits);

  const Frame& frame() const noexcept { return frame_; }
  std::uint64_t bits() const noexcept { return bits_; }
  std::size_t count() const noexcept;
  bool is_empty() const noexcept { return bits_ == 0; }
  bool is_omega() const noexcept { return bits_ == frame_.full_mask(); }

  bool contains(std::string_view element) const noexcept;
  bool subset_of(const HypothesisSet& other) const;
  bool intersects(const HypothesisSet& other) const;

  HypothesisSet union_with(const HypothesisSet& other) const;
  HypothesisSet intersect(const HypothesisSet& other) const;
  HypothesisSet complement() const;

  // Member identifiers in frame order.
  std::vector<std::string> elements() const;

  friend bool operator==(const HypothesisSet& a, const HypothesisSet& b);

 private:
  HypothesisSet(Frame frame, std::uint64_t bits);

  Frame frame_;
  std::uint64_t bits_;
};

// Throws Error mentioning `what` when the two frames differ.
void require_same_frame(const Frame& a, const Frame& b, std::string_view what);

}  // namespace dsfuse

#endif
