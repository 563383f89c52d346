#ifndef DSFUSE_RDF_VOCAB_HPP
#define DSFUSE_RDF_VOCAB_HPP

#include <string_view>

// The ds: vocabulary used to carry evidential instance data in RDF, plus
// the handful of external IRIs this library touches. These constants are
// stable byte-for-byte across versions; the shipped data/ds-ontology.ttl
// declares them with domains and ranges.
namespace dsfuse::rdf::vocab {

inline constexpr std::string_view kDsNamespace = "http://dsfuse.org/ds#";

// Classes.
inline constexpr std::string_view kUncertainConcept = "http://dsfuse.org/ds#UncertainConcept";
inline constexpr std::string_view kSource = "http://dsfuse.org/ds#Source";
inline constexpr std::string_view kMassAssignment = "http://dsfuse.org/ds#MassAssignment";

// Evidence properties.
inline constexpr std::string_view kIsEither = "http://dsfuse.org/ds#isEither";
inline constexpr std::string_view kHasAssignment = "http://dsfuse.org/ds#hasAssignment";
inline constexpr std::string_view kAssignedBy = "http://dsfuse.org/ds#assignedBy";
inline constexpr std::string_view kMassValue = "http://dsfuse.org/ds#massValue";
inline constexpr std::string_view kIsTotalIgnorance = "http://dsfuse.org/ds#isTotalIgnorance";

// Result annotations.
inline constexpr std::string_view kBelief = "http://dsfuse.org/ds#belief";
inline constexpr std::string_view kPlausibility = "http://dsfuse.org/ds#plausibility";
inline constexpr std::string_view kConflict = "http://dsfuse.org/ds#conflict";
inline constexpr std::string_view kDecidedAs = "http://dsfuse.org/ds#decidedAs";
inline constexpr std::string_view kHasInterval = "http://dsfuse.org/ds#hasInterval";
inline constexpr std::string_view kAbout = "http://dsfuse.org/ds#about";

// External vocabulary.
inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kXsdString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kXsdBoolean = "http://www.w3.org/2001/XMLSchema#boolean";
inline constexpr std::string_view kXsdInteger = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view kXsdDecimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view kXsdDouble = "http://www.w3.org/2001/XMLSchema#double";

}  // namespace dsfuse::rdf::vocab

#endif
