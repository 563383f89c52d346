#ifndef DSFUSE_RDF_GRAPH_HPP
#define DSFUSE_RDF_GRAPH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dsfuse/rdf/term.hpp"

namespace dsfuse::rdf {

// Insertion-ordered set of distinct triples plus a prefix table. Document
// order is preserved because downstream frame construction depends on
// first appearance. Duplicate inserts are ignored. Graphs are value types;
// once fully built they are treated as immutable.
class Graph {
 public:
  // Throws Error on a literal subject or a non-IRI predicate.
  void insert(Triple triple);

  bool contains(const Triple& triple) const;
  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }

  // Triples in document (insertion) order.
  const std::vector<Triple>& triples() const noexcept { return triples_; }

  void set_prefix(std::string name, std::string iri);
  const std::map<std::string, std::string>& prefixes() const noexcept {
    return prefixes_;
  }

  // Query helpers; results come back in document order.
  std::vector<Term> objects(const Term& subject, std::string_view predicate) const;
  std::optional<Term> object(const Term& subject, std::string_view predicate) const;
  bool has_type(const Term& subject, std::string_view class_iri) const;
  std::vector<Term> subjects_of_type(std::string_view class_iri) const;
  bool has_subject(const Term& term) const;

  // Equal iff the triple sets are equal (prefix tables are presentation).
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<Triple> triples_;
  std::set<Triple> index_;
  std::map<std::string, std::string> prefixes_;
};

}  // namespace dsfuse::rdf

#endif
