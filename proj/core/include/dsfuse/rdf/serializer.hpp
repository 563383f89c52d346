#ifndef DSFUSE_RDF_SERIALIZER_HPP
#define DSFUSE_RDF_SERIALIZER_HPP

#include <string>

#include "dsfuse/rdf/graph.hpp"
#include "dsfuse/rdf/parser.hpp"

namespace dsfuse::rdf {

// Deterministic serialization: triples sorted by (subject, predicate,
// object) term order; Turtle output additionally groups by subject with
// `;`/`,` and emits the prefix table sorted by prefix name. Parsing the
// result yields the identical triple set, and repeated runs are
// byte-identical.
std::string serialize(const Graph& graph, Format format);

}  // namespace dsfuse::rdf

#endif
