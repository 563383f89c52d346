#ifndef DSFUSE_FRAME_HPP
#define DSFUSE_FRAME_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dsfuse {

// Frame of discernment: the ordered, pairwise-distinct candidate
// identifiers (typically IRIs) one uncertain entity may resolve to.
// Element order is fixed at construction and defines the bit positions
// used by HypothesisSet. Immutable and cheap to copy; safe to share
// across threads.
class Frame {
 public:
  static constexpr std::size_t kMaxElements = 64;

  // Throws Error on an empty list, duplicate identifiers, or more than
  // kMaxElements entries.
  explicit Frame(std::vector<std::string> elements);

  std::size_t size() const noexcept;
  const std::vector<std::string>& elements() const noexcept;
  const std::string& element(std::size_t index) const;
  std::optional<std::size_t> index_of(std::string_view id) const noexcept;

  // Bitmask with one bit per element; the encoding of the full set Omega.
  std::uint64_t full_mask() const noexcept;

  // Frames compare by element sequence, order included.
  friend bool operator==(const Frame& a, const Frame& b) noexcept;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

}  // namespace dsfuse

#endif
