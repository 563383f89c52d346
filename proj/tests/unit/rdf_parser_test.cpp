#include <doctest.h>

#include <string>

#include "dsfuse/rdf/parser.hpp"
#include "dsfuse/rdf/term.hpp"
#include "dsfuse/rdf/vocab.hpp"

using dsfuse::rdf::Format;
using dsfuse::rdf::Graph;
using dsfuse::rdf::parse;
using dsfuse::rdf::ParseError;
using dsfuse::rdf::resolve_iri;
using dsfuse::rdf::Term;

namespace {

// doctest-friendly wrapper: message text of the thrown ParseError
template <typename F>
std::string error_of(F&& body) {
  try {
    body();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("IRI reference resolution follows the merge rules") {
  const std::string base = "http://a/b/c/d;p?q";
  CHECK(resolve_iri(base, "g") == "http://a/b/c/g");
  CHECK(resolve_iri(base, "./g") == "http://a/b/c/g");
  CHECK(resolve_iri(base, "g/") == "http://a/b/c/g/");
  CHECK(resolve_iri(base, "/g") == "http://a/g");
  CHECK(resolve_iri(base, "//g") == "http://g");
  CHECK(resolve_iri(base, "?y") == "http://a/b/c/d;p?y");
  CHECK(resolve_iri(base, "#s") == "http://a/b/c/d;p?q#s");
  CHECK(resolve_iri(base, "../g") == "http://a/b/g");
  CHECK(resolve_iri(base, "../../g") == "http://a/g");
  CHECK(resolve_iri(base, "") == "http://a/b/c/d;p?q");
  CHECK(resolve_iri(base, "http://x/y") == "http://x/y");
  // dot segments inside absolute references collapse too
  CHECK(resolve_iri("", "http://a/b/./c/../d") == "http://a/b/d");
  CHECK_THROWS_AS(resolve_iri("", "relative"), ParseError);
  CHECK_THROWS_AS(resolve_iri("not-absolute", "x"), ParseError);
}

TEST_CASE("minimal N-Triples documents parse") {
  const Graph g = parse("<http://x/a> <http://x/b> <http://x/c> .", Format::kNTriples);
  REQUIRE(g.size() == 1);
  CHECK(g.triples()[0].subject == Term::iri("http://x/a"));
  CHECK(g.triples()[0].predicate == Term::iri("http://x/b"));
  CHECK(g.triples()[0].object == Term::iri("http://x/c"));

  CHECK(parse("", Format::kNTriples).size() == 0);
  CHECK(parse("# only a comment\n\n", Format::kNTriples).size() == 0);
}

TEST_CASE("N-Triples literals, blanks, and escapes") {
  const std::string doc = R"(_:b0 <http://x/p> "plain" .
<http://x/s> <http://x/p> "tab\there é" .
<http://x/s> <http://x/p> "0.4"^^<http://www.w3.org/2001/XMLSchema#decimal> .
<http://x/s> <http://x/p> "chat"@en-GB . # trailing comment
)";
  const Graph g = parse(doc, Format::kNTriples);
  REQUIRE(g.size() == 4);
  CHECK(g.triples()[0].subject == Term::blank("b0"));
  CHECK(g.triples()[1].object.value == "tab\there \xc3\xa9");
  CHECK(g.triples()[2].object.datatype == dsfuse::rdf::vocab::kXsdDecimal);
  CHECK(g.triples()[3].object.lang == "en-GB");
}

TEST_CASE("N-Triples rejects malformed lines with positions") {
  CHECK_THROWS_AS(parse("<http://x/a> <http://x/b> .", Format::kNTriples),
                  ParseError);
  try {
    parse("<http://x/a> <http://x/b> <http://x/c>\n<oops>", Format::kNTriples);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);  // the missing '.' is noticed at end of line 1
  }
  // a literal cannot be a subject
  CHECK(error_of([] {
          parse("\"lit\" <http://x/p> <http://x/o> .", Format::kNTriples);
        }).find("subject") != std::string::npos);
  // relative IRI without a base
  CHECK_THROWS_AS(parse("<a> <http://x/p> <http://x/o> .", Format::kNTriples),
                  ParseError);
  // ...but fine when a base is supplied
  const Graph g = parse("<a> <http://x/p> <o> .", Format::kNTriples, "http://x/");
  CHECK(g.triples()[0].subject == Term::iri("http://x/a"));
}

TEST_CASE("Turtle prefixes, keyword a, and object lists") {
  const std::string doc = R"(@prefix ds: <http://dsfuse.org/ds#> .
@prefix : <http://x/> .
:s a ds:UncertainConcept ;
    ds:isEither :t1, :t2 .
)";
  const Graph g = parse(doc, Format::kTurtle);
  REQUIRE(g.size() == 3);
  CHECK(g.triples()[0].predicate == Term::iri(std::string(dsfuse::rdf::vocab::kRdfType)));
  CHECK(g.triples()[1].object == Term::iri("http://x/t1"));
  CHECK(g.triples()[2].object == Term::iri("http://x/t2"));
  CHECK(g.prefixes().at("ds") == "http://dsfuse.org/ds#");
  CHECK(g.prefixes().at("") == "http://x/");
}

TEST_CASE("Turtle numeric and boolean shorthand get xsd types") {
  const std::string doc = R"(@prefix : <http://x/> .
:s :mass 0.4 ;
   :count 12 ;
   :neg -3 ;
   :sci 1.5e-3 ;
   :flag true ;
   :off false .
)";
  const Graph g = parse(doc, Format::kTurtle);
  REQUIRE(g.size() == 6);
  auto object_of = [&](const std::string& p) {
    return g.object(Term::iri("http://x/s"), "http://x/" + p);
  };
  CHECK(object_of("mass")->value == "0.4");
  CHECK(object_of("mass")->datatype == dsfuse::rdf::vocab::kXsdDecimal);
  CHECK(object_of("count")->datatype == dsfuse::rdf::vocab::kXsdInteger);
  CHECK(object_of("neg")->value == "-3");
  CHECK(object_of("sci")->datatype == dsfuse::rdf::vocab::kXsdDouble);
  CHECK(object_of("flag")->value == "true");
  CHECK(object_of("flag")->datatype == dsfuse::rdf::vocab::kXsdBoolean);
  CHECK(object_of("off")->value == "false");
}

TEST_CASE("Turtle strings: quotes, escapes, langtags, typed literals") {
  const std::string doc =
      "@prefix : <http://x/> .\n"
      ":s :a 'single' ;\n"
      "   :b \"with \\\"quote\\\" and \\\\ backslash\" ;\n"
      "   :c \"caf\\u00e9\"@fr ;\n"
      "   :d \"0.5\"^^<http://www.w3.org/2001/XMLSchema#decimal> ;\n"
      "   :e \"typed\"^^:mytype .\n";
  const Graph g = parse(doc, Format::kTurtle);
  auto object_of = [&](const std::string& p) {
    return g.object(Term::iri("http://x/s"), "http://x/" + p);
  };
  CHECK(object_of("a")->value == "single");
  CHECK(object_of("b")->value == "with \"quote\" and \\ backslash");
  CHECK(object_of("c")->value == "caf\xc3\xa9");
  CHECK(object_of("c")->lang == "fr");
  CHECK(object_of("d")->datatype == dsfuse::rdf::vocab::kXsdDecimal);
  CHECK(object_of("e")->datatype == "http://x/mytype");
}

TEST_CASE("xsd:string typed literals normalize to plain literals") {
  const Graph a = parse(
      "<http://x/s> <http://x/p> \"v\"^^<http://www.w3.org/2001/XMLSchema#string> .",
      Format::kNTriples);
  const Graph b = parse("<http://x/s> <http://x/p> \"v\" .", Format::kNTriples);
  CHECK(a == b);
}

TEST_CASE("@base governs relative IRIs and can be redefined") {
  const std::string doc = R"(@base <http://x/dir/> .
<one> <p> <two> .
@base <http://y/> .
<one> <p> <two> .
)";
  const Graph g = parse(doc, Format::kTurtle);
  REQUIRE(g.size() == 2);
  CHECK(g.triples()[0].subject == Term::iri("http://x/dir/one"));
  CHECK(g.triples()[1].subject == Term::iri("http://y/one"));
}

TEST_CASE("duplicate triples collapse") {
  const std::string doc = R"(@prefix : <http://x/> .
:s :p :o .
:s :p :o .
)";
  CHECK(parse(doc, Format::kTurtle).size() == 1);
}

TEST_CASE("the declared Turtle subset rejects what it does not cover") {
  auto msg = [](const std::string& doc) {
    return error_of([&] { parse(doc, Format::kTurtle); });
  };
  CHECK(msg("@prefix : <http://x/> . :s :p ( :a :b ) .")
            .find("unsupported Turtle construct: collection") != std::string::npos);
  CHECK(msg("@prefix : <http://x/> . :s :p [ :q :o ] .")
            .find("unsupported Turtle construct: anonymous blank node") !=
        std::string::npos);
  CHECK(msg("@prefix : <http://x/> . :s :p \"\"\"long\"\"\" .")
            .find("unsupported Turtle construct: triple-quoted string") !=
        std::string::npos);
  CHECK(msg("{ :s :p :o . }")
            .find("unsupported Turtle construct: quoted graph") != std::string::npos);
  CHECK(msg("PREFIX x: <http://x/>\nx:s x:p x:o .")
            .find("SPARQL-style directive") != std::string::npos);
}

TEST_CASE("Turtle errors carry line and column") {
  try {
    parse("@prefix : <http://x/> .\n:s :p :o ;\n   :q undefined:name .",
          Format::kTurtle);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(std::string(e.what()).find("unknown prefix 'undefined:'") !=
          std::string::npos);
  }
  CHECK_THROWS_AS(parse(":s :p :o .", Format::kTurtle), ParseError);  // no prefix
  CHECK_THROWS_AS(parse("@prefix : <http://x/> . :s :p :o", Format::kTurtle),
                  ParseError);  // missing terminator
  CHECK_THROWS_AS(parse("@prefix : <http://x/> . :s :p \"open", Format::kTurtle),
                  ParseError);  // unterminated string
}

TEST_CASE("format helpers map names and extensions") {
  using dsfuse::rdf::format_from_path;
  using dsfuse::rdf::format_from_string;
  CHECK(format_from_string("turtle") == Format::kTurtle);
  CHECK(format_from_string("nt") == Format::kNTriples);
  CHECK_FALSE(format_from_string("rdfxml").has_value());
  CHECK(format_from_path("data/scene.ttl") == Format::kTurtle);
  CHECK(format_from_path("dump.nt") == Format::kNTriples);
  CHECK_FALSE(format_from_path("README").has_value());
  CHECK_FALSE(format_from_path("notes.txt").has_value());
}
