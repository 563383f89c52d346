#include "dsfuse/rdf/graph.hpp"

#include <utility>

#include "dsfuse/error.hpp"
#include "dsfuse/rdf/vocab.hpp"

namespace dsfuse::rdf {

void Graph::insert(Triple triple) {
  if (triple.subject.is_literal())
    throw Error("graph: a literal cannot appear in subject position");
  if (!triple.predicate.is_iri())
    throw Error("graph: the predicate must be an IRI");
  if (index_.contains(triple)) return;
  index_.insert(triple);
  triples_.push_back(std::move(triple));
}

bool Graph::contains(const Triple& triple) const {
  return index_.contains(triple);
}

void Graph::set_prefix(std::string name, std::string iri) {
  prefixes_[std::move(name)] = std::move(iri);
}

std::vector<Term> Graph::objects(const Term& subject,
                                 std::string_view predicate) const {
  std::vector<Term> out;
  for (const auto& triple : triples_)
    if (triple.subject == subject && triple.predicate.value == predicate)
      out.push_back(triple.object);
  return out;
}

std::optional<Term> Graph::object(const Term& subject,
                                  std::string_view predicate) const {
  for (const auto& triple : triples_)
    if (triple.subject == subject && triple.predicate.value == predicate)
      return triple.object;
  return std::nullopt;
}

bool Graph::has_type(const Term& subject, std::string_view class_iri) const {
  for (const auto& triple : triples_)
    if (triple.subject == subject && triple.predicate.value == vocab::kRdfType &&
        triple.object.is_iri() && triple.object.value == class_iri)
      return true;
  return false;
}

std::vector<Term> Graph::subjects_of_type(std::string_view class_iri) const {
  std::vector<Term> out;
  for (const auto& triple : triples_) {
    if (triple.predicate.value != vocab::kRdfType || !triple.object.is_iri() ||
        triple.object.value != class_iri)
      continue;
    bool seen = false;
    for (const auto& existing : out)
      if (existing == triple.subject) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(triple.subject);
  }
  return out;
}

bool Graph::has_subject(const Term& term) const {
  for (const auto& triple : triples_)
    if (triple.subject == term) return true;
  return false;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.index_ == b.index_;
}

}  // namespace dsfuse::rdf
