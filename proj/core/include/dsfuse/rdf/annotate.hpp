#ifndef DSFUSE_RDF_ANNOTATE_HPP
#define DSFUSE_RDF_ANNOTATE_HPP

#include <span>

#include "dsfuse/evidence.hpp"
#include "dsfuse/rdf/graph.hpp"

namespace dsfuse::rdf {

// Returns a new graph: the input plus, per result, a ds:conflict literal
// on the instance, one interval node per candidate (ds:about + ds:belief +
// ds:plausibility, reached via ds:hasInterval) and ds:decidedAs linking
// the instance to the top-ranked candidate. Interval nodes get
// deterministic fresh IRIs derived from the instance and candidate IRIs
// (hash-suffixed), so reruns diff cleanly. The input graph is not
// modified. Throws Error when a result's instance IRI is not typed
// ds:UncertainConcept in the graph.
Graph annotate_results(const Graph& graph, std::span<const FusionResult> results);

}  // namespace dsfuse::rdf

#endif
