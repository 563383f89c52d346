#include "dsfuse/rdf/parser.hpp"

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "dsfuse/rdf/vocab.hpp"

namespace dsfuse::rdf {

std::string_view to_string(Format format) {
  return format == Format::kNTriples ? "ntriples" : "turtle";
}

std::optional<Format> format_from_string(std::string_view name) {
  if (name == "ntriples" || name == "nt") return Format::kNTriples;
  if (name == "turtle" || name == "ttl") return Format::kTurtle;
  return std::nullopt;
}

std::optional<Format> format_from_path(std::string_view path) {
  const auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return std::nullopt;
  const std::string_view ext = path.substr(dot + 1);
  if (ext == "nt") return Format::kNTriples;
  if (ext == "ttl") return Format::kTurtle;
  return std::nullopt;
}

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : Error("line " + std::to_string(line) + ", column " +
            std::to_string(column) + ": " + msg),
      line(line),
      column(column) {}

// ---------------------------------------------------------------------------
// IRI reference resolution (RFC 3986 section 5)

namespace {

struct IriParts {
  std::string scheme;  // without ':'
  std::optional<std::string> authority;
  std::string path;
  std::optional<std::string> query;
  std::optional<std::string> fragment;
};

IriParts split_iri(std::string_view iri) {
  IriParts parts;
  // scheme = ALPHA *( ALPHA / DIGIT / "+" / "-" / "." ) ":"
  std::size_t i = 0;
  if (i < iri.size() && std::isalpha(static_cast<unsigned char>(iri[i]))) {
    std::size_t j = i + 1;
    while (j < iri.size() &&
           (std::isalnum(static_cast<unsigned char>(iri[j])) || iri[j] == '+' ||
            iri[j] == '-' || iri[j] == '.'))
      ++j;
    if (j < iri.size() && iri[j] == ':') {
      parts.scheme = std::string(iri.substr(0, j));
      i = j + 1;
    }
  }
  if (iri.substr(i).starts_with("//")) {
    i += 2;
    std::size_t j = i;
    while (j < iri.size() && iri[j] != '/' && iri[j] != '?' && iri[j] != '#') ++j;
    parts.authority = std::string(iri.substr(i, j - i));
    i = j;
  }
  std::size_t j = i;
  while (j < iri.size() && iri[j] != '?' && iri[j] != '#') ++j;
  parts.path = std::string(iri.substr(i, j - i));
  i = j;
  if (i < iri.size() && iri[i] == '?') {
    j = ++i;
    while (j < iri.size() && iri[j] != '#') ++j;
    parts.query = std::string(iri.substr(i, j - i));
    i = j;
  }
  if (i < iri.size() && iri[i] == '#')
    parts.fragment = std::string(iri.substr(i + 1));
  return parts;
}

std::string remove_dot_segments(std::string_view path) {
  std::string input(path);
  std::string output;
  while (!input.empty()) {
    if (input.starts_with("../")) {
      input.erase(0, 3);
    } else if (input.starts_with("./")) {
      input.erase(0, 2);
    } else if (input.starts_with("/./")) {
      input.erase(0, 2);  // leave the leading '/'
    } else if (input == "/.") {
      input = "/";
    } else if (input.starts_with("/../") || input == "/..") {
      input.erase(0, 3);
      if (input.empty()) input = "/";
      const auto slash = output.rfind('/');
      output.erase(slash == std::string::npos ? 0 : slash);
    } else if (input == "." || input == "..") {
      input.clear();
    } else {
      std::size_t start = input.front() == '/' ? 1 : 0;
      std::size_t end = input.find('/', start);
      if (end == std::string::npos) end = input.size();
      output += input.substr(0, end);
      input.erase(0, end);
    }
  }
  return output;
}

std::string recompose(const IriParts& parts) {
  std::string out;
  if (!parts.scheme.empty()) {
    out += parts.scheme;
    out += ':';
  }
  if (parts.authority) {
    out += "//";
    out += *parts.authority;
  }
  out += parts.path;
  if (parts.query) {
    out += '?';
    out += *parts.query;
  }
  if (parts.fragment) {
    out += '#';
    out += *parts.fragment;
  }
  return out;
}

std::string merge_paths(const IriParts& base, std::string_view ref_path) {
  if (base.authority && base.path.empty()) return "/" + std::string(ref_path);
  const auto slash = base.path.rfind('/');
  if (slash == std::string::npos) return std::string(ref_path);
  return base.path.substr(0, slash + 1) + std::string(ref_path);
}

}  // namespace

std::string resolve_iri(std::string_view base, std::string_view reference) {
  IriParts ref = split_iri(reference);
  if (!ref.scheme.empty()) {
    ref.path = remove_dot_segments(ref.path);
    return recompose(ref);
  }
  if (base.empty())
    throw ParseError("relative IRI <" + std::string(reference) +
                         "> cannot be resolved: no base IRI was provided",
                     0, 0);
  const IriParts b = split_iri(base);
  if (b.scheme.empty())
    throw ParseError("base IRI <" + std::string(base) + "> is not absolute", 0, 0);

  IriParts out;
  out.scheme = b.scheme;
  out.fragment = ref.fragment;
  if (ref.authority) {
    out.authority = ref.authority;
    out.path = remove_dot_segments(ref.path);
    out.query = ref.query;
  } else {
    out.authority = b.authority;
    if (ref.path.empty()) {
      out.path = b.path;
      out.query = ref.query ? ref.query : b.query;
    } else {
      out.path = ref.path.front() == '/'
                     ? remove_dot_segments(ref.path)
                     : remove_dot_segments(merge_paths(b, ref.path));
      out.query = ref.query;
    }
  }
  return recompose(out);
}

// ---------------------------------------------------------------------------
// Shared character cursor with position tracking

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char peek_at(std::size_t offset) const {
    return pos_ + offset < text_.size() ? text_[pos_ + offset] : '\0';
  }
  bool starts_with(std::string_view s) const {
    return text_.substr(pos_).starts_with(s);
  }

  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

void append_utf8(std::string& out, std::uint32_t code, const Cursor& at) {
  if (code < 0x80) {
    out += static_cast<char>(code);
  } else if (code < 0x800) {
    out += static_cast<char>(0xc0 | (code >> 6));
    out += static_cast<char>(0x80 | (code & 0x3f));
  } else if (code < 0x10000) {
    if (code >= 0xd800 && code <= 0xdfff)
      at.fail("unicode escape encodes a surrogate code point");
    out += static_cast<char>(0xe0 | (code >> 12));
    out += static_cast<char>(0x80 | ((code >> 6) & 0x3f));
    out += static_cast<char>(0x80 | (code & 0x3f));
  } else if (code <= 0x10ffff) {
    out += static_cast<char>(0xf0 | (code >> 18));
    out += static_cast<char>(0x80 | ((code >> 12) & 0x3f));
    out += static_cast<char>(0x80 | ((code >> 6) & 0x3f));
    out += static_cast<char>(0x80 | (code & 0x3f));
  } else {
    at.fail("unicode escape is beyond U+10FFFF");
  }
}

std::uint32_t read_hex(Cursor& in, int digits) {
  std::uint32_t code = 0;
  for (int i = 0; i < digits; ++i) {
    if (in.eof()) in.fail("truncated unicode escape");
    const char c = in.advance();
    code <<= 4;
    if (c >= '0' && c <= '9')
      code |= static_cast<std::uint32_t>(c - '0');
    else if (c >= 'a' && c <= 'f')
      code |= static_cast<std::uint32_t>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F')
      code |= static_cast<std::uint32_t>(c - 'A' + 10);
    else
      in.fail("invalid hex digit in unicode escape");
  }
  return code;
}

// IRIREF: '<' already consumed. UCHAR escapes only.
std::string read_iriref_body(Cursor& in) {
  std::string out;
  while (true) {
    if (in.eof()) in.fail("unterminated IRI: missing '>'");
    const char c = in.advance();
    if (c == '>') return out;
    if (c == '\\') {
      if (in.eof()) in.fail("truncated escape in IRI");
      const char e = in.advance();
      if (e == 'u')
        append_utf8(out, read_hex(in, 4), in);
      else if (e == 'U')
        append_utf8(out, read_hex(in, 8), in);
      else
        in.fail(std::string("invalid escape '\\") + e + "' in IRI");
      continue;
    }
    if (static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '"' ||
        c == '{' || c == '}' || c == '|' || c == '^' || c == '`')
      in.fail(std::string("character '") + c + "' is not allowed in an IRI");
    out += c;
  }
}

// String body after the opening quote. ECHAR and UCHAR escapes.
std::string read_string_body(Cursor& in, char quote) {
  std::string out;
  while (true) {
    if (in.eof()) in.fail("unterminated string literal");
    if (in.peek() == '\n' || in.peek() == '\r')
      in.fail("newline inside a single-line string literal");
    const char c = in.advance();
    if (c == quote) return out;
    if (c == '\\') {
      if (in.eof()) in.fail("truncated escape in string literal");
      const char e = in.advance();
      switch (e) {
        case 't': out += '\t'; break;
        case 'b': out += '\b'; break;
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 'f': out += '\f'; break;
        case '"': out += '"'; break;
        case '\'': out += '\''; break;
        case '\\': out += '\\'; break;
        case 'u': append_utf8(out, read_hex(in, 4), in); break;
        case 'U': append_utf8(out, read_hex(in, 8), in); break;
        default:
          in.fail(std::string("invalid escape '\\") + e + "' in string literal");
      }
      continue;
    }
    out += c;
  }
}

std::string read_langtag(Cursor& in) {
  std::string out;
  while (!in.eof() && (std::isalpha(static_cast<unsigned char>(in.peek())) ||
                       (!out.empty() && (in.peek() == '-' ||
                                         std::isdigit(static_cast<unsigned char>(in.peek()))))))
    out += in.advance();
  if (out.empty() || out.front() == '-' || out.back() == '-')
    in.fail("invalid language tag");
  return out;
}

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         static_cast<unsigned char>(c) >= 0x80;
}

// Blank node label after '_:'.
std::string read_blank_label(Cursor& in) {
  std::string out;
  if (in.eof() || !(is_name_start(in.peek()) ||
                    std::isdigit(static_cast<unsigned char>(in.peek()))))
    in.fail("invalid blank node label");
  out += in.advance();
  while (!in.eof()) {
    const char c = in.peek();
    if (is_name_char(c)) {
      out += in.advance();
    } else if (c == '.' && is_name_char(in.peek_at(1))) {
      // a dot is part of the label only when more label follows
      out += in.advance();
    } else {
      break;
    }
  }
  return out;
}

// Normalizes plain-string datatypes away so term equality is RDF 1.1
// equality (a simple literal and one typed xsd:string are the same term).
Term make_literal(std::string lexical, std::string datatype, std::string lang) {
  if (datatype == vocab::kXsdString) datatype.clear();
  return Term::literal(std::move(lexical), std::move(datatype), std::move(lang));
}

// ---------------------------------------------------------------------------
// N-Triples

class NTriplesParser {
 public:
  NTriplesParser(std::string_view text, std::string_view base)
      : in_(text), base_(base) {}

  Graph run() {
    Graph graph;
    while (!in_.eof()) {
      skip_ws();
      if (in_.eof()) break;
      const char c = in_.peek();
      if (c == '\n' || c == '\r') {
        in_.advance();
        continue;
      }
      if (c == '#') {
        skip_comment();
        continue;
      }
      parse_triple(graph);
    }
    return graph;
  }

 private:
  void skip_ws() {
    while (!in_.eof() && (in_.peek() == ' ' || in_.peek() == '\t')) in_.advance();
  }

  void skip_comment() {
    while (!in_.eof() && in_.peek() != '\n') in_.advance();
  }

  std::string absolute(const std::string& raw) {
    try {
      return resolve_iri(base_, raw);
    } catch (const ParseError& e) {
      in_.fail(e.what());
    }
  }

  Term parse_subject() {
    if (in_.eof()) in_.fail("expected subject");
    const char c = in_.peek();
    if (c == '<') {
      in_.advance();
      return Term::iri(absolute(read_iriref_body(in_)));
    }
    if (c == '_' && in_.peek_at(1) == ':') {
      in_.advance();
      in_.advance();
      return Term::blank(read_blank_label(in_));
    }
    if (c == '"') in_.fail("a literal cannot appear in subject position");
    in_.fail("expected an IRI or blank node as subject");
  }

  Term parse_predicate() {
    if (in_.eof() || in_.peek() != '<')
      in_.fail("expected an IRI as predicate");
    in_.advance();
    return Term::iri(absolute(read_iriref_body(in_)));
  }

  Term parse_object() {
    if (in_.eof()) in_.fail("expected object");
    const char c = in_.peek();
    if (c == '<') {
      in_.advance();
      return Term::iri(absolute(read_iriref_body(in_)));
    }
    if (c == '_' && in_.peek_at(1) == ':') {
      in_.advance();
      in_.advance();
      return Term::blank(read_blank_label(in_));
    }
    if (c == '"') {
      in_.advance();
      std::string lexical = read_string_body(in_, '"');
      std::string datatype;
      std::string lang;
      if (!in_.eof() && in_.peek() == '@') {
        in_.advance();
        lang = read_langtag(in_);
      } else if (in_.starts_with("^^")) {
        in_.advance();
        in_.advance();
        if (in_.eof() || in_.peek() != '<')
          in_.fail("expected an IRI after '^^'");
        in_.advance();
        datatype = absolute(read_iriref_body(in_));
      }
      return make_literal(std::move(lexical), std::move(datatype), std::move(lang));
    }
    in_.fail("expected an IRI, blank node, or literal as object");
  }

  void parse_triple(Graph& graph) {
    Triple triple;
    triple.subject = parse_subject();
    skip_ws();
    triple.predicate = parse_predicate();
    skip_ws();
    triple.object = parse_object();
    skip_ws();
    if (in_.eof() || in_.peek() != '.') in_.fail("expected '.' after the object");
    in_.advance();
    skip_ws();
    if (!in_.eof() && in_.peek() == '#') skip_comment();
    if (!in_.eof() && in_.peek() != '\n' && in_.peek() != '\r')
      in_.fail("unexpected content after '.'");
    graph.insert(std::move(triple));
  }

  Cursor in_;
  std::string_view base_;
};

// ---------------------------------------------------------------------------
// Turtle subset

class TurtleParser {
 public:
  TurtleParser(std::string_view text, std::string_view base)
      : in_(text), base_(base) {}

  Graph run() {
    Graph graph;
    while (true) {
      skip_ws_and_comments();
      if (in_.eof()) break;
      if (in_.peek() == '@') {
        parse_directive(graph);
        continue;
      }
      parse_triples(graph);
    }
    return graph;
  }

 private:
  void skip_ws_and_comments() {
    while (!in_.eof()) {
      const char c = in_.peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        in_.advance();
      } else if (c == '#') {
        while (!in_.eof() && in_.peek() != '\n') in_.advance();
      } else {
        break;
      }
    }
  }

  std::string read_word() {
    std::string word;
    while (!in_.eof() && std::isalpha(static_cast<unsigned char>(in_.peek())))
      word += in_.advance();
    return word;
  }

  std::string absolute(const std::string& raw) {
    try {
      return resolve_iri(base_, raw);
    } catch (const ParseError& e) {
      in_.fail(e.what());
    }
  }

  void expect_dot() {
    skip_ws_and_comments();
    if (in_.eof() || in_.peek() != '.') in_.fail("expected '.'");
    in_.advance();
  }

  void parse_directive(Graph& graph) {
    in_.advance();  // '@'
    const std::string word = read_word();
    if (word == "prefix") {
      skip_ws_and_comments();
      const std::string name = read_prefix_name();
      skip_ws_and_comments();
      if (in_.eof() || in_.peek() != '<')
        in_.fail("expected an IRI in @prefix directive");
      in_.advance();
      const std::string iri = absolute(read_iriref_body(in_));
      expect_dot();
      prefixes_[name] = iri;
      graph.set_prefix(name, iri);
    } else if (word == "base") {
      skip_ws_and_comments();
      if (in_.eof() || in_.peek() != '<')
        in_.fail("expected an IRI in @base directive");
      in_.advance();
      base_storage_ = absolute(read_iriref_body(in_));
      base_ = base_storage_;
      expect_dot();
    } else {
      in_.fail("unknown directive '@" + word + "'");
    }
  }

  // PNAME_NS before the IRI of a @prefix directive, e.g. "ds:" or ":".
  std::string read_prefix_name() {
    std::string name;
    while (!in_.eof() && in_.peek() != ':') {
      const char c = in_.peek();
      if (!(is_name_char(c) || c == '.')) break;
      name += in_.advance();
    }
    if (in_.eof() || in_.peek() != ':')
      in_.fail("expected ':' to end the prefix name");
    in_.advance();
    if (!name.empty() && (name.front() == '-' || name.back() == '.'))
      in_.fail("invalid prefix name '" + name + "'");
    return name;
  }

  Term parse_iri_term() {
    if (in_.peek() == '<') {
      in_.advance();
      return Term::iri(absolute(read_iriref_body(in_)));
    }
    return Term::iri(parse_pname());
  }

  // Prefixed name at the cursor; expands through the prefix table.
  std::string parse_pname() {
    std::string prefix;
    while (!in_.eof() && in_.peek() != ':' &&
           (is_name_char(in_.peek()) || in_.peek() == '.'))
      prefix += in_.advance();
    if (in_.eof() || in_.peek() != ':')
      in_.fail("expected a prefixed name");
    in_.advance();

    std::string local;
    while (!in_.eof()) {
      const char c = in_.peek();
      if (is_name_char(c)) {
        local += in_.advance();
      } else if (c == '.' && is_name_char(in_.peek_at(1))) {
        local += in_.advance();  // dot inside a local name, not the terminator
      } else {
        break;
      }
    }

    const auto it = prefixes_.find(prefix);
    if (it == prefixes_.end())
      in_.fail("unknown prefix '" + prefix + ":'");
    return it->second + local;
  }

  Term parse_subject() {
    const char c = in_.peek();
    if (c == '[')
      in_.fail("unsupported Turtle construct: anonymous blank node");
    if (c == '(')
      in_.fail("unsupported Turtle construct: collection");
    if (c == '{')
      in_.fail("unsupported Turtle construct: quoted graph");
    if (c == '"' || c == '\'')
      in_.fail("a literal cannot appear in subject position");
    if (c == '_' && in_.peek_at(1) == ':') {
      in_.advance();
      in_.advance();
      return Term::blank(read_blank_label(in_));
    }
    if (c == '<' || is_name_start(c) || c == ':') {
      // Reject SPARQL-style directives with a pointed message.
      if (starts_keyword("PREFIX") || starts_keyword("BASE"))
        in_.fail("unsupported Turtle construct: SPARQL-style directive (use @prefix/@base)");
      return parse_iri_term();
    }
    in_.fail("expected a subject");
  }

  bool starts_keyword(std::string_view word) const {
    if (!in_.starts_with(word)) return false;
    const char after = in_.peek_at(word.size());
    return after == ' ' || after == '\t' || after == '\n' || after == '\r';
  }

  Term parse_verb() {
    const char c = in_.peek();
    if (c == 'a' && !is_name_char(in_.peek_at(1)) && in_.peek_at(1) != ':' &&
        in_.peek_at(1) != '.')
      // bare 'a' is rdf:type; 'a:x' or 'ab' keep lexing as names
      {
        in_.advance();
        return Term::iri(std::string(vocab::kRdfType));
      }
    if (c == '<' || is_name_start(c) || c == ':') return parse_iri_term();
    in_.fail("expected a predicate");
  }

  Term parse_object() {
    const char c = in_.peek();
    if (c == '[')
      in_.fail("unsupported Turtle construct: anonymous blank node");
    if (c == '(')
      in_.fail("unsupported Turtle construct: collection");
    if (c == '"' || c == '\'') return parse_string_literal();
    if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(in_.peek_at(1)))))
      return parse_numeric_literal();
    if (c == '_' && in_.peek_at(1) == ':') {
      in_.advance();
      in_.advance();
      return Term::blank(read_blank_label(in_));
    }
    if (starts_keyword_or_punct("true"))
      return boolean_literal("true");
    if (starts_keyword_or_punct("false"))
      return boolean_literal("false");
    if (c == '<' || is_name_start(c) || c == ':') return parse_iri_term();
    in_.fail("expected an object");
  }

  // 'true'/'false' followed by a non-name character.
  bool starts_keyword_or_punct(std::string_view word) const {
    if (!in_.starts_with(word)) return false;
    const char after = in_.peek_at(word.size());
    return !(is_name_char(after) || after == ':');
  }

  Term boolean_literal(std::string_view lexical) {
    for (std::size_t i = 0; i < lexical.size(); ++i) in_.advance();
    return Term::literal(std::string(lexical), std::string(vocab::kXsdBoolean));
  }

  Term parse_string_literal() {
    const char quote = in_.peek();
    if ((quote == '"' && in_.starts_with("\"\"\"")) ||
        (quote == '\'' && in_.starts_with("'''")))
      in_.fail("unsupported Turtle construct: triple-quoted string");
    in_.advance();
    std::string lexical = read_string_body(in_, quote);
    std::string datatype;
    std::string lang;
    if (!in_.eof() && in_.peek() == '@') {
      in_.advance();
      lang = read_langtag(in_);
    } else if (in_.starts_with("^^")) {
      in_.advance();
      in_.advance();
      if (in_.eof()) in_.fail("expected a datatype IRI after '^^'");
      datatype = parse_iri_term().value;
    }
    return make_literal(std::move(lexical), std::move(datatype), std::move(lang));
  }

  Term parse_numeric_literal() {
    std::string lexical;
    bool has_point = false;
    bool has_exponent = false;
    if (in_.peek() == '+' || in_.peek() == '-') lexical += in_.advance();
    auto digits = [&] {
      while (!in_.eof() && std::isdigit(static_cast<unsigned char>(in_.peek())))
        lexical += in_.advance();
    };
    digits();
    if (!in_.eof() && in_.peek() == '.' &&
        std::isdigit(static_cast<unsigned char>(in_.peek_at(1)))) {
      has_point = true;
      lexical += in_.advance();
      digits();
    }
    if (!in_.eof() && (in_.peek() == 'e' || in_.peek() == 'E')) {
      has_exponent = true;
      lexical += in_.advance();
      if (!in_.eof() && (in_.peek() == '+' || in_.peek() == '-'))
        lexical += in_.advance();
      if (in_.eof() || !std::isdigit(static_cast<unsigned char>(in_.peek())))
        in_.fail("invalid numeric literal: missing exponent digits");
      digits();
    }
    if (lexical.empty() ||
        lexical.find_first_of("0123456789") == std::string::npos)
      in_.fail("invalid numeric literal");
    const std::string_view datatype = has_exponent ? vocab::kXsdDouble
                                      : has_point  ? vocab::kXsdDecimal
                                                   : vocab::kXsdInteger;
    return Term::literal(std::move(lexical), std::string(datatype));
  }

  void parse_triples(Graph& graph) {
    const Term subject = parse_subject();
    while (true) {
      skip_ws_and_comments();
      if (in_.eof()) in_.fail("unterminated statement: expected a predicate");
      const Term predicate = parse_verb();
      while (true) {
        skip_ws_and_comments();
        if (in_.eof()) in_.fail("unterminated statement: expected an object");
        Term object = parse_object();
        graph.insert({subject, predicate, std::move(object)});
        skip_ws_and_comments();
        if (!in_.eof() && in_.peek() == ',') {
          in_.advance();
          continue;
        }
        break;
      }
      if (in_.eof()) in_.fail("unterminated statement: expected ';' or '.'");
      const char c = in_.peek();
      if (c == ';') {
        in_.advance();
        skip_ws_and_comments();
        // a trailing ';' directly before '.' is allowed
        if (!in_.eof() && in_.peek() == '.') {
          in_.advance();
          return;
        }
        continue;
      }
      if (c == '.') {
        in_.advance();
        return;
      }
      in_.fail("expected ',', ';' or '.' after the object");
    }
  }

  Cursor in_;
  std::string_view base_;
  std::string base_storage_;
  std::map<std::string, std::string> prefixes_;
};

}  // namespace

Graph parse(std::string_view text, Format format, std::string_view base) {
  if (format == Format::kNTriples) return NTriplesParser(text, base).run();
  return TurtleParser(text, base).run();
}

}  // namespace dsfuse::rdf
