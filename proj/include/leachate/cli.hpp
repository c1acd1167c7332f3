#pragma once

#include <iosfwd>

namespace leachate {

/// Process exit statuses of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 2,
    kExitStability = 3,
    kExitBlowUp = 4,
    kExitIo = 5,
};

/// Entry point behind the `leachate` executable. Subcommands: run, compare,
/// study-dt, study-mesh, study-d, scenario, check.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace leachate
