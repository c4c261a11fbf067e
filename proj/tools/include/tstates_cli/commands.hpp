#pragma once

#include <iosfwd>

#include "tstates_cli/config.hpp"

namespace tstates::cli {

// Executes config.command. Library errors propagate as tstates::Error;
// nothing is written to disk unless the whole command succeeds.
void execute(const RunConfig& config, std::ostream& out);

}  // namespace tstates::cli
