#pragma once

#include <iosfwd>

namespace iso3 {

// Entry point of the iso3 tool: catalog, eval, verify, reconstruct, witness.
// Exit status: 0 on success; 1 when a verification does not come out as
// designed; 2 on invalid input (bad flags, violated family constraints).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace iso3
