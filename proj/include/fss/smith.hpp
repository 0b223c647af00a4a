#pragma once

// Dense Smith normal form with unimodular certificates.

#include "fss/linalg.hpp"

#include <vector>

namespace fss {

/// U * A * V == D where D is diagonal with d_1 | d_2 | ... | d_r > 0 followed
/// by zeros. Uinv and Vinv are the exact inverses of U and V.
struct SmithForm {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Integer> diagonal;  // the nonzero invariant factors
    IntMatrix U, Uinv, V, Vinv;

    [[nodiscard]] std::size_t rank() const { return diagonal.size(); }
    [[nodiscard]] IntMatrix diagonal_matrix() const;
};

/// Pivot rule: the entry of smallest nonzero absolute value in the remaining
/// block, ties broken by row-major position.
SmithForm smith_normal_form(const IntMatrix& a);

}  // namespace fss
