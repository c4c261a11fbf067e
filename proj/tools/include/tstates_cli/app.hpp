#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tstates::cli {

// Runs one `tstates` invocation. args excludes the program name. Returns
// the process exit status: 0 on success, 1 on a runtime error, 2 on a
// usage error. Errors are reported to `err` as a single JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tstates::cli
