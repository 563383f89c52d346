#ifndef DSFUSE_NUMBERS_HPP
#define DSFUSE_NUMBERS_HPP

#include <optional>
#include <string>
#include <string_view>

namespace dsfuse {

// Locale-independent strtod over the whole string; nullopt on trailing
// junk, empty input, or a non-finite result.
std::optional<double> parse_real(std::string_view text);

// Canonical rendering for externalized reals: 12 significant digits in
// plain decimal notation (no exponent, xsd:decimal-safe), trailing zeros
// trimmed. Pure function of the value, so reruns are byte-identical.
std::string format_real(double value);

// Fixed-point rendering with 12 decimal places (scriptable CLI output).
std::string format_fixed(double value);

// Nearest double with 12 significant decimal digits; applied to report
// payloads before JSON encoding.
double round_significant(double value);

}  // namespace dsfuse

#endif
