#pragma once

#include <string>
#include <vector>

#include "lenfact/lengths.hpp"

namespace lenfact {

struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Per-n comparison of the closed form against the brute-force enumerator.
struct VerifyOutcome {
    int n = 0;
    LengthSet formula;
    LengthSet brute;
    bool equal = false;
};

/// Runs formula vs brute force for every n in [1, n_max].
/// Throws BadParameter / LimitExceeded (n_max beyond the degree guard).
std::vector<VerifyOutcome> verify_range(const RingHandle& ring, int n_max, int degree_guard = 0);

/// 0 when every outcome agrees, 3 otherwise (the CLI mismatch exit code).
int verify_exit_code(const std::vector<VerifyOutcome>& outcomes);

/// Full CLI dispatch.  Exit codes: 0 success, 1 usage or parse error,
/// 2 domain error, 3 verification mismatch.  Never terminates the process.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace lenfact
