#include "dsfuse/rdf/term.hpp"

#include <utility>

namespace dsfuse::rdf {

Term Term::iri(std::string value) {
  return Term{TermKind::kIri, std::move(value), "", ""};
}

Term Term::blank(std::string label) {
  return Term{TermKind::kBlank, std::move(label), "", ""};
}

Term Term::literal(std::string lexical, std::string datatype, std::string lang) {
  return Term{TermKind::kLiteral, std::move(lexical), std::move(datatype),
              std::move(lang)};
}

}  // namespace dsfuse::rdf
