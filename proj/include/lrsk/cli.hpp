#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lrsk::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInternalError = 1,
    kInputError = 2,
    kVerificationFailure = 3,
};

// Runs one command line (args[0] is the program name). Reads "-" inputs from
// `in`, writes "-" outputs and reports to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

// The worked-example reproduction behind the `demo` command. Returns true when
// every example matches its fixture; writes one line per example to `out`.
bool run_demo(std::ostream& out);

} // namespace lrsk::cli
