#ifndef DSFUSE_REPORT_HPP
#define DSFUSE_REPORT_HPP

#include <string>

#include "dsfuse/engine.hpp"

namespace dsfuse {

// Stable JSON rendering of a fusion report: top-level {config, instances,
// diagnostics}, reals carried at 12 significant digits, key order fixed.
// Byte-identical across runs for the same report.
std::string report_to_json(const FusionReport& report);

}  // namespace dsfuse

#endif
