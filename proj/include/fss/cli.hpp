#pragma once

// The `fss` command line: betti, homology, map-matrix, braid, verify.
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 resource cap exceeded.

#include "fss/io.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace fss {

enum class ExitCode : int { Ok = 0, VerifyFailed = 1, Usage = 2, Cap = 3 };

class ResourceCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Caps {
    // complex-mode homology
    static constexpr int complex_k = 10;
    static constexpr int complex_n = 6;
    // explicit bases, map and braid matrices
    static constexpr int basis_k = 12;
    static constexpr int basis_n = 6;
};

struct IntRange {
    int lo = 1;
    int hi = 1;
};

/// "A..B" or a single value "A"; requires 1 <= A <= B.
IntRange parse_range(const std::string& text);

enum class BettiMode { Formula, Genfun, Complex };

BettiMode parse_betti_mode(const std::string& name);

/// b_k(exp_k Gamma_n) for k in `ks` (rows) and n in `ns` (columns). Throws
/// ResourceCapError in complex mode beyond the caps unless allow_large.
Grid betti_table(IntRange ks, IntRange ns, BettiMode mode, bool allow_large);

/// Runs one invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fss
