#pragma once

// Command-line front end. Exit codes:
//   0  success, or the queried property holds
//   1  the property fails (not contained, not entailed, unstratifiable),
//      or the input ontology is inconsistent without --allow-inconsistent
//   2  usage, parse, type or unsupported-input error
//   3  a resource limit was hit (--max-steps, --budget)

#include <iosfwd>
#include <string>
#include <vector>

namespace gbox::cli {

enum ExitCode : int { kOk = 0, kFails = 1, kUsage = 2, kLimit = 3 };

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gbox::cli
