#pragma once

#include "ncqm/lab.hpp"

namespace ncqm::lab::detail {

// Each suite returns {"suite", "pass", "checks": [...]} and lets
// ncqm::Error escape for violated preconditions.
json suite_group(const RunConfig& cfg);
json suite_reps(const RunConfig& cfg);
json suite_gauge(const RunConfig& cfg);
json suite_torus(const RunConfig& cfg);

}  // namespace ncqm::lab::detail
