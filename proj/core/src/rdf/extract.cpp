#include "dsfuse/rdf/extract.hpp"

#include <cmath>
#include <optional>
#include <set>
#include <utility>

#include "dsfuse/numbers.hpp"
#include "dsfuse/rdf/vocab.hpp"

namespace dsfuse::rdf {

std::string_view to_string(Severity severity) {
  return severity == Severity::kError ? "error" : "warning";
}

namespace {

std::string node_repr(const Term& term) {
  switch (term.kind) {
    case TermKind::kIri: return term.value;
    case TermKind::kBlank: return "_:" + term.value;
    case TermKind::kLiteral: return "\"" + term.value + "\"";
  }
  return {};
}

class Extractor {
 public:
  explicit Extractor(const Graph& graph) : graph_(graph) {}

  ExtractionResult run() {
    const Term has_assignment = Term::iri(std::string(vocab::kHasAssignment));
    std::set<Term> instances_with_assignments;
    for (const Triple& t : graph_.triples()) {
      if (t.predicate != has_assignment) continue;
      if (!graph_.has_type(t.subject, vocab::kUncertainConcept)) {
        // nothing is allowed to vanish silently
        error("subject of an assignment is not typed as an uncertain concept",
              t.subject);
        continue;
      }
      instances_with_assignments.insert(t.subject);
      read_assignment(t.subject, t.object);
    }
    for (const Term& instance :
         graph_.subjects_of_type(vocab::kUncertainConcept)) {
      if (!instances_with_assignments.contains(instance))
        warn("uncertain concept has no assignments", instance);
    }
    return std::move(result_);
  }

 private:
  void error(std::string message, const Term& node) {
    result_.diagnostics.push_back(
        {Severity::kError, std::move(message), node_repr(node)});
  }

  void warn(std::string message, const Term& node) {
    result_.diagnostics.push_back(
        {Severity::kWarning, std::move(message), node_repr(node)});
  }

  std::optional<SourceRef> read_source(const Term& assignment) {
    const auto sources = graph_.objects(assignment, vocab::kAssignedBy);
    if (sources.empty()) {
      error("assignment has no assigning source", assignment);
      return std::nullopt;
    }
    if (sources.size() > 1) {
      error("assignment names more than one assigning source", assignment);
      return std::nullopt;
    }
    const Term& source = sources.front();
    if (source.kind == TermKind::kLiteral) {
      error("assigning source must be a node, not a literal", assignment);
      return std::nullopt;
    }
    return SourceRef{node_repr(source)};
  }

  std::optional<double> read_mass(const Term& assignment) {
    const auto masses = graph_.objects(assignment, vocab::kMassValue);
    if (masses.empty()) {
      error("assignment has no mass value", assignment);
      return std::nullopt;
    }
    if (masses.size() > 1) {
      error("assignment carries more than one mass value", assignment);
      return std::nullopt;
    }
    const Term& value = masses.front();
    if (value.kind != TermKind::kLiteral) {
      error("mass value must be a literal", assignment);
      return std::nullopt;
    }
    const auto mass = parse_real(value.value);
    if (!mass) {
      error("mass value '" + value.value + "' is not a real number", assignment);
      return std::nullopt;
    }
    if (!(*mass > 0.0) || *mass > 1.0) {
      error("mass value " + format_real(*mass) + " is outside (0, 1]",
            assignment);
      return std::nullopt;
    }
    return mass;
  }

  // Absent means false. Returns nullopt on a malformed flag.
  std::optional<bool> read_ignorance_flag(const Term& assignment) {
    const auto flags = graph_.objects(assignment, vocab::kIsTotalIgnorance);
    if (flags.empty()) return false;
    if (flags.size() > 1) {
      error("assignment carries conflicting total-ignorance flags", assignment);
      return std::nullopt;
    }
    const Term& flag = flags.front();
    if (flag.kind != TermKind::kLiteral) {
      error("total-ignorance flag must be a boolean literal", assignment);
      return std::nullopt;
    }
    if (flag.value == "true" || flag.value == "1") return true;
    if (flag.value == "false" || flag.value == "0") return false;
    error("total-ignorance flag '" + flag.value + "' is not a boolean",
          assignment);
    return std::nullopt;
  }

  void read_assignment(const Term& instance, const Term& assignment) {
    if (assignment.kind == TermKind::kLiteral) {
      error("assignment must be a node, not a literal", instance);
      return;
    }

    const auto source = read_source(assignment);
    const auto mass = read_mass(assignment);
    const auto ignorance = read_ignorance_flag(assignment);

    std::vector<std::string> hypothesis;
    bool candidates_ok = true;
    for (const Term& candidate : graph_.objects(assignment, vocab::kIsEither)) {
      if (candidate.kind != TermKind::kIri) {
        error("hypothesis candidate must be an IRI", assignment);
        candidates_ok = false;
        continue;
      }
      hypothesis.push_back(candidate.value);
    }

    if (!source || !mass || !ignorance || !candidates_ok) return;

    if (*ignorance && !hypothesis.empty()) {
      error("assignment is flagged as total ignorance but also lists candidates",
            assignment);
      return;
    }
    if (!*ignorance && hypothesis.empty()) {
      error("assignment lists no candidates and is not flagged as total ignorance",
            assignment);
      return;
    }

    Observation obs;
    obs.source = *source;
    obs.uncertain_instance = node_repr(instance);
    obs.hypothesis = std::move(hypothesis);
    obs.total_ignorance = *ignorance;
    obs.mass = *mass;
    result_.observations.push_back(std::move(obs));
  }

  const Graph& graph_;
  ExtractionResult result_;
};

}  // namespace

ExtractionResult extract_observations(const Graph& graph) {
  return Extractor(graph).run();
}

}  // namespace dsfuse::rdf
