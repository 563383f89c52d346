#ifndef DSFUSE_DSFUSE_HPP
#define DSFUSE_DSFUSE_HPP

// Umbrella header: the whole public surface.

#include "dsfuse/combination.hpp"
#include "dsfuse/decision.hpp"
#include "dsfuse/engine.hpp"
#include "dsfuse/error.hpp"
#include "dsfuse/evidence.hpp"
#include "dsfuse/frame.hpp"
#include "dsfuse/hypothesis_set.hpp"
#include "dsfuse/mass_function.hpp"
#include "dsfuse/numbers.hpp"
#include "dsfuse/observation.hpp"
#include "dsfuse/report.hpp"
#include "dsfuse/version.hpp"
#include "dsfuse/rdf/annotate.hpp"
#include "dsfuse/rdf/extract.hpp"
#include "dsfuse/rdf/graph.hpp"
#include "dsfuse/rdf/parser.hpp"
#include "dsfuse/rdf/serializer.hpp"
#include "dsfuse/rdf/term.hpp"
#include "dsfuse/rdf/vocab.hpp"

#endif
