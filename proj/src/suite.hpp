#pragma once

#include <string>
#include <vector>

#include "budget.hpp"
#include "report.hpp"

namespace catlim {

// Check ids accepted by run_check, in the order "all" executes them.
std::vector<std::string> known_checks();

// Dispatch one check id with JSON parameters (missing parameters take the
// documented defaults); "all" runs the full deterministic grid. Budget and
// bound overruns inside a check surface as skipped reports; invalid
// parameters throw.
std::vector<Report> run_check(const std::string& id, const ordered_json& params,
                              const Budget& budget = {});

}  // namespace catlim
