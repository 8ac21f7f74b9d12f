#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ratfourier::cli {

enum ExitCode : int {
    kSuccess = 0,
    kPropertyBreach = 1,
    kValidation = 2,
    kIncompatible = 3,
};

/// Runs the command-line tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratfourier::cli
