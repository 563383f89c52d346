#ifndef DSFUSE_VERSION_HPP
#define DSFUSE_VERSION_HPP

#include <string_view>

namespace dsfuse {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr std::string_view kVocabularyVersion = "1";

}  // namespace dsfuse

#endif
