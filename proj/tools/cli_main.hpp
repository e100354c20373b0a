#pragma once

#include <string>
#include <vector>

namespace wklr {

// Runs one CLI invocation; everything written to out.  Exit codes: 0 success,
// 1 domain error, 2 usage error.
int cliRun(const std::vector<std::string>& args, std::string& out);

// Thin wrapper printing to stdout/stderr.
int cliMain(int argc, char** argv);

// Subcommand table: name plus the library operations it exercises (used by
// the coverage test).
struct CliCommand {
    std::string name;
    std::vector<std::string> operations;
};
const std::vector<CliCommand>& cliCommandTable();

}  // namespace wklr
