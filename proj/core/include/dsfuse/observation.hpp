#ifndef DSFUSE_OBSERVATION_HPP
#define DSFUSE_OBSERVATION_HPP

#include <compare>
#include <string>
#include <vector>

namespace dsfuse {

// An evidence source (sensor, human report, ...) identified by IRI or
// opaque label.
struct SourceRef {
  std::string id;

  friend auto operator<=>(const SourceRef&, const SourceRef&) = default;
};

// One source's mass assignment to one hypothesis set of one uncertain
// instance: the RDF-level unit of evidence. A total-ignorance observation
// has total_ignorance set and an empty hypothesis list; it resolves to the
// full set Omega only once the instance's frame is known, so a source can
// express ignorance before all candidates have been seen.
struct Observation {
  SourceRef source;
  std::string uncertain_instance;
  // Candidate IRIs in first-appearance order; non-empty unless
  // total_ignorance is set.
  std::vector<std::string> hypothesis;
  bool total_ignorance = false;
  double mass = 0.0;  // in (0,1]
};

}  // namespace dsfuse

#endif
