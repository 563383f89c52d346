#ifndef DSFUSE_RDF_TERM_HPP
#define DSFUSE_RDF_TERM_HPP

#include <compare>
#include <string>
#include <string_view>

namespace dsfuse::rdf {

enum class TermKind { kIri, kBlank, kLiteral };

// One RDF term. Literals keep their lexical form exactly as written in the
// source document; an empty datatype means a plain string literal. IRIs
// are absolute once a document has been parsed.
struct Term {
  TermKind kind = TermKind::kIri;
  std::string value;     // IRI, blank node label, or literal lexical form
  std::string datatype;  // datatype IRI; empty unless a typed literal
  std::string lang;      // language tag; empty unless a language literal

  static Term iri(std::string value);
  static Term blank(std::string label);
  static Term literal(std::string lexical, std::string datatype = "",
                      std::string lang = "");

  bool is_iri() const noexcept { return kind == TermKind::kIri; }
  bool is_blank() const noexcept { return kind == TermKind::kBlank; }
  bool is_literal() const noexcept { return kind == TermKind::kLiteral; }

  // Order: kind (IRI < blank < literal), then value, datatype, lang. The
  // canonical sort used by the serializers.
  friend auto operator<=>(const Term&, const Term&) = default;
};

struct Triple {
  Term subject;    // IRI or blank node
  Term predicate;  // always an IRI
  Term object;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

}  // namespace dsfuse::rdf

#endif
