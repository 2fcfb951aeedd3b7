#pragma once

// Translates (Network, ScenarioSet) into the extensive-form two-stage MILP:
// day-ahead market stage plus one system-operation block per wind scenario,
// coupled through reserve deployment rows.

#include <string>
#include <vector>

#include "smce/grid.hpp"
#include "smce/program.hpp"
#include "smce/scenario.hpp"

namespace smce {

/// Builds the complete program. The scenario horizon must match the network
/// horizon and the network must validate cleanly.
MarketProgram assemble(const Network& net, const ScenarioSet& scen);

/// Checks that every model symbol family resolves through the directory to a
/// distinct variable with the expected multiplicity, and that every row
/// references valid columns. Returns human-readable problems; empty means the
/// audit passed.
std::vector<std::string> audit_symbol_coverage(const MarketProgram& prog);

/// Writes the program as a fixed-field MPS document. Row and column names
/// encode the directory tags (e.g. BAL_n3_t2_w1). Column order follows the
/// documented layout: first-stage variables, then one block per scenario.
void export_mps(const MarketProgram& prog, const std::string& path);
std::string export_mps_text(const MarketProgram& prog);

}  // namespace smce
