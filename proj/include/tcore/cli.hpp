// Command-line front end: one binary, subcommand style. Exposed as a
// library function so tests can drive it in-process.
//
// Exit codes: 0 success / all requested checks passed, 1 verification
// failure, 2 usage or parameter-domain error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tcore {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tcore
