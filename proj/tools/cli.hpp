#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qshift::cli {

enum ExitCode : int {
    Ok = 0,
    DomainError = 1,
    UsageError = 2,
    Mismatch = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qshift::cli
