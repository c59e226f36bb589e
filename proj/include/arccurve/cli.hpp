#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arccurve {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitInconsistent = 1,  // an internal check or bound implication failed
    kExitInvalidInput = 2,
    kExitValidation = 3,
};

// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arccurve
