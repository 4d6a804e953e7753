#pragma once

#include <ostream>

namespace demoreq::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kInvalidModel = 2,
    kTargetsUnmet = 3,
    kIterationLimit = 4,
};

/// Entry point shared by the binary and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace demoreq::cli
