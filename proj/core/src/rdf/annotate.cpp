#include "dsfuse/rdf/annotate.hpp"

#include <cstdint>
#include <cstdio>

#include "dsfuse/error.hpp"
#include "dsfuse/numbers.hpp"
#include "dsfuse/rdf/vocab.hpp"

namespace dsfuse::rdf {

namespace {

// Observation identifiers round-trip blank nodes through the "_:" form.
Term node_from_id(const std::string& id) {
  if (id.starts_with("_:")) return Term::blank(id.substr(2));
  return Term::iri(id);
}

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

// Deterministic IRI for the belief-interval node of (instance, candidate).
// Rerunning annotation regenerates the same node, so repeated fusion of an
// already annotated graph only re-inserts triples the graph deduplicates.
std::string interval_node_iri(const std::string& instance,
                              const std::string& candidate) {
  std::string stripped = instance.starts_with("_:") ? instance.substr(2)
                                                    : instance;
  return stripped + "-interval-" + fnv1a_hex(instance + "|" + candidate);
}

Term decimal_literal(double value) {
  return Term::literal(format_real(value), std::string(vocab::kXsdDecimal));
}

}  // namespace

Graph annotate_results(const Graph& graph,
                       std::span<const FusionResult> results) {
  Graph out = graph;
  const Term conflict = Term::iri(std::string(vocab::kConflict));
  const Term has_interval = Term::iri(std::string(vocab::kHasInterval));
  const Term about = Term::iri(std::string(vocab::kAbout));
  const Term belief = Term::iri(std::string(vocab::kBelief));
  const Term plausibility = Term::iri(std::string(vocab::kPlausibility));
  const Term decided_as = Term::iri(std::string(vocab::kDecidedAs));

  for (const FusionResult& result : results) {
    const Term instance = node_from_id(result.instance);
    if (!graph.has_type(instance, vocab::kUncertainConcept))
      throw Error("annotate: '" + result.instance +
                  "' is not an uncertain concept in this graph");

    out.insert({instance, conflict, decimal_literal(result.conflict)});
    for (const auto& [candidate, interval] : result.intervals) {
      const Term node =
          Term::iri(interval_node_iri(result.instance, candidate));
      out.insert({instance, has_interval, node});
      out.insert({node, about, Term::iri(candidate)});
      out.insert({node, belief, decimal_literal(interval.belief)});
      out.insert({node, plausibility, decimal_literal(interval.plausibility)});
    }
    if (!result.decision.empty())
      out.insert({instance, decided_as, Term::iri(result.decision.front().element)});
  }
  return out;
}

}  // namespace dsfuse::rdf
