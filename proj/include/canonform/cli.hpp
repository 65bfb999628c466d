#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace canonform::cli {

enum ExitCode { kOk = 0, kUsage = 1, kInconclusive = 2, kInternal = 3 };

/// Runs one command; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in = std::cin);

struct ExampleResult {
    std::string name;
    bool pass = false;
    /// Best-effort checks are reported but do not affect the exit code.
    bool gating = true;
    std::string detail;
};

/// Re-runs the built-in worked examples and reference values.
std::vector<ExampleResult> verify_examples();

}  // namespace canonform::cli
