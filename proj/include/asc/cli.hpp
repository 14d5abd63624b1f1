#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asc::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  ///< precondition, domain or usage error; invalid report in verify
  kParse = 2,    ///< malformed graph6, edge list, family spec or JSON input
  kAborted = 3,  ///< search budget exhausted
};

/// Runs one command line (without the program name). Reads "-" inputs from
/// `in`; reports go to `out` unless --output is given, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace asc::cli
