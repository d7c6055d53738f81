#pragma once

#include <ostream>

namespace footrank {

// Runs the command-line front end. Returns the process exit status:
// 0 on success, 1 for data errors, 2 for flag errors. Normal output goes
// to `out`, errors to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace footrank
