#ifndef DSFUSE_RDF_EXTRACT_HPP
#define DSFUSE_RDF_EXTRACT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsfuse/observation.hpp"
#include "dsfuse/rdf/graph.hpp"

namespace dsfuse::rdf {

enum class Severity { kWarning, kError };

std::string_view to_string(Severity severity);

struct Diagnostic {
  Severity severity = Severity::kError;
  std::string message;
  std::string node;  // offending subject/assignment; empty when global
};

struct ExtractionResult {
  std::vector<Observation> observations;
  std::vector<Diagnostic> diagnostics;
};

// Tolerant reader over the ds: vocabulary. Every ds:hasAssignment node of
// a resource typed ds:UncertainConcept yields one Observation: source from
// ds:assignedBy, mass from ds:massValue, hypothesis from the assignment's
// ds:isEither objects or Omega when ds:isTotalIgnorance is true. Malformed
// assignments are skipped with an error diagnostic naming the node, never
// silently dropped. Result annotations written by annotate_results are not
// evidence and are ignored.
ExtractionResult extract_observations(const Graph& graph);

}  // namespace dsfuse::rdf

#endif
