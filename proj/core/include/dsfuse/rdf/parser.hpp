#ifndef DSFUSE_RDF_PARSER_HPP
#define DSFUSE_RDF_PARSER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "dsfuse/error.hpp"
#include "dsfuse/rdf/graph.hpp"

namespace dsfuse::rdf {

enum class Format { kNTriples, kTurtle };

// "ntriples", "turtle"
std::string_view to_string(Format format);
std::optional<Format> format_from_string(std::string_view name);
// .nt -> N-Triples, .ttl -> Turtle; nullopt otherwise.
std::optional<Format> format_from_path(std::string_view path);

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t line, std::size_t column);

  std::size_t line;
  std::size_t column;
};

// Parses a document into a graph with every IRI absolute (relative IRIs
// are resolved against `base`; a relative IRI with no base is an error)
// and duplicate triples collapsed.
//
// N-Triples support is complete. Turtle is a declared subset: @prefix and
// @base directives, prefixed names, the `a` keyword, `;` and `,`
// predicate/object lists, string/numeric/boolean literals (with datatype
// and language annotations), and labeled blank nodes. Collections,
// anonymous blank nodes, triple-quoted strings, and quoted graphs are
// rejected with a ParseError naming the unsupported construct.
Graph parse(std::string_view text, Format format, std::string_view base = "");

// RFC 3986 reference resolution, dot segments removed. Throws ParseError
// when `reference` is relative and `base` is empty or itself relative.
std::string resolve_iri(std::string_view base, std::string_view reference);

}  // namespace dsfuse::rdf

#endif
