#include "dsfuse/rdf/serializer.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <vector>

#include "dsfuse/rdf/vocab.hpp"

namespace dsfuse::rdf {

namespace {

void append_escaped(std::string& out, std::string_view text, bool in_iri) {
  char buf[8];
  for (const char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (in_iri) {
      if (u < 0x21 || c == '<' || c == '>' || c == '"' || c == '{' ||
          c == '}' || c == '|' || c == '^' || c == '`' || c == '\\') {
        std::snprintf(buf, sizeof buf, "\\u%04X", u);
        out += buf;
      } else {
        out += c;
      }
      continue;
    }
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (u < 0x20) {
          std::snprintf(buf, sizeof buf, "\\u%04X", u);
          out += buf;
        } else {
          out += c;
        }
    }
  }
}

std::string render_iri(std::string_view iri) {
  std::string out = "<";
  append_escaped(out, iri, /*in_iri=*/true);
  out += '>';
  return out;
}

std::string render_literal(const Term& term, const std::string& datatype_repr) {
  std::string out = "\"";
  append_escaped(out, term.value, /*in_iri=*/false);
  out += '"';
  if (!term.lang.empty()) {
    out += '@';
    out += term.lang;
  } else if (!term.datatype.empty()) {
    out += "^^";
    out += datatype_repr;
  }
  return out;
}

std::string render_ntriples_term(const Term& term) {
  switch (term.kind) {
    case TermKind::kIri: return render_iri(term.value);
    case TermKind::kBlank: return "_:" + term.value;
    case TermKind::kLiteral:
      return render_literal(term, term.datatype.empty()
                                      ? std::string()
                                      : render_iri(term.datatype));
  }
  return {};
}

std::vector<Triple> sorted_triples(const Graph& graph) {
  std::vector<Triple> triples(graph.triples().begin(), graph.triples().end());
  std::sort(triples.begin(), triples.end());
  return triples;
}

std::string serialize_ntriples(const Graph& graph) {
  std::string out;
  for (const Triple& t : sorted_triples(graph)) {
    out += render_ntriples_term(t.subject);
    out += ' ';
    out += render_ntriples_term(t.predicate);
    out += ' ';
    out += render_ntriples_term(t.object);
    out += " .\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Turtle

// Conservative: only locals the subset parser reads back unchanged.
bool safe_local_part(std::string_view local) {
  for (std::size_t i = 0; i < local.size(); ++i) {
    const char c = local[i];
    const auto u = static_cast<unsigned char>(c);
    const bool name_char = std::isalnum(u) || c == '_' || c == '-' || u >= 0x80;
    if (name_char) continue;
    if (c == '.' && i > 0 && i + 1 < local.size()) continue;
    return false;
  }
  return true;
}

class TurtleWriter {
 public:
  explicit TurtleWriter(const Graph& graph) : graph_(graph) {}

  std::string run() {
    std::string out;
    const auto& prefixes = graph_.prefixes();
    for (const auto& [name, iri] : prefixes) {
      out += "@prefix ";
      out += name;
      out += ": ";
      out += render_iri(iri);
      out += " .\n";
    }
    if (!prefixes.empty()) out += '\n';

    bool first_group = true;
    const std::vector<Triple> triples = sorted_triples(graph_);
    std::size_t i = 0;
    while (i < triples.size()) {
      if (!first_group) out += '\n';
      first_group = false;
      i = write_subject_group(out, triples, i);
    }
    return out;
  }

 private:
  std::string render_term(const Term& term) {
    switch (term.kind) {
      case TermKind::kIri: return render_compacted_iri(term.value);
      case TermKind::kBlank: return "_:" + term.value;
      case TermKind::kLiteral:
        return render_literal(term, term.datatype.empty()
                                        ? std::string()
                                        : render_compacted_iri(term.datatype));
    }
    return {};
  }

  std::string render_compacted_iri(std::string_view iri) {
    std::string_view best_name;
    std::string_view best_ns;
    for (const auto& [name, ns] : graph_.prefixes()) {
      if (ns.size() <= best_ns.size() || !iri.starts_with(ns)) continue;
      if (!safe_local_part(iri.substr(ns.size()))) continue;
      best_name = name;
      best_ns = ns;
    }
    if (best_ns.empty()) return render_iri(iri);
    return std::string(best_name) + ":" + std::string(iri.substr(best_ns.size()));
  }

  std::string render_verb(const Term& predicate) {
    if (predicate.value == vocab::kRdfType) return "a";
    return render_term(predicate);
  }

  std::size_t write_subject_group(std::string& out,
                                  const std::vector<Triple>& triples,
                                  std::size_t start) {
    const Term& subject = triples[start].subject;
    out += render_term(subject);
    std::size_t i = start;
    bool first_predicate = true;
    while (i < triples.size() && triples[i].subject == subject) {
      const Term& predicate = triples[i].predicate;
      out += first_predicate ? " " : " ;\n    ";
      first_predicate = false;
      out += render_verb(predicate);
      bool first_object = true;
      while (i < triples.size() && triples[i].subject == subject &&
             triples[i].predicate == predicate) {
        out += first_object ? " " : ", ";
        first_object = false;
        out += render_term(triples[i].object);
        ++i;
      }
    }
    out += " .\n";
    return i;
  }

  const Graph& graph_;
};

}  // namespace

std::string serialize(const Graph& graph, Format format) {
  if (format == Format::kNTriples) return serialize_ntriples(graph);
  return TurtleWriter(graph).run();
}

}  // namespace dsfuse::rdf
