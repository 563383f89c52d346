#include "dsfuse/frame.hpp"

#include <unordered_map>
#include <utility>

#include "dsfuse/error.hpp"

namespace dsfuse {

struct Frame::Data {
  std::vector<std::string> elements;
  std::unordered_map<std::string, std::size_t> index;
};

Frame::Frame(std::vector<std::string> elements) {
  if (elements.empty()) throw Error("frame: element list is empty");
  if (elements.size() > kMaxElements)
    throw Error("frame: " + std::to_string(elements.size()) +
                " elements exceed the capacity of " +
                std::to_string(kMaxElements));
  auto data = std::make_shared<Data>();
  data->index.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    auto [it, fresh] = data->index.emplace(elements[i], i);
    if (!fresh) throw Error("frame: duplicate element '" + elements[i] + "'");
  }
  data->elements = std::move(elements);
  data_ = std::move(data);
}

std::size_t Frame::size() const noexcept { return data_->elements.size(); }

const std::vector<std::string>& Frame::elements() const noexcept {
  return data_->elements;
}

const std::string& Frame::element(std::size_t index) const {
  if (index >= data_->elements.size())
    throw Error("frame: element index " + std::to_string(index) + " out of range");
  return data_->elements[index];
}

std::optional<std::size_t> Frame::index_of(std::string_view id) const noexcept {
  auto it = data_->index.find(std::string(id));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::uint64_t Frame::full_mask() const noexcept {
  const std::size_t n = data_->elements.size();
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

bool operator==(const Frame& a, const Frame& b) noexcept {
  return a.data_ == b.data_ || a.data_->elements == b.data_->elements;
}

}  // namespace dsfuse
