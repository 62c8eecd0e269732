#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cognum::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kMalformedInput = 2 };

/// Runs one command line (args excludes the program name). Reports go to
/// `out`; errors go to `err` as "error: <Name>: <detail>".
///
/// Subcommands: classify | infer | scenario | peano | count | markov.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cognum::cli
