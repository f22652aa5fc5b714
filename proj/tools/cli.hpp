// The hookbox command line, callable in-process for tests.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hookbox::cli {

enum ExitCode : int { ok = 0, unequal = 1, bad_input = 2, over_cap = 3 };

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// Largest sweep bounds accepted per level; larger requests exit with 3.
struct SweepCaps {
  int max_size;
  int max_n;
};
SweepCaps sweep_caps(std::string_view level);

}  // namespace hookbox::cli
