#ifndef DSFUSE_ERROR_HPP
#define DSFUSE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dsfuse {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dempster combination hit K >= 1 - 1e-9: the sources are irreconcilable.
// Callers decide the policy (abort the run, skip the instance, ...).
struct TotalConflictError : Error {
  TotalConflictError(const std::string& msg, double k, std::size_t step = 0)
      : Error(msg), conflict(k), step(step) {}

  double conflict;    // K of the failing pairwise combination
  std::size_t step;   // fold step that failed (0 for a plain pairwise call)
};

}  // namespace dsfuse

#endif
