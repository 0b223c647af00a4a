#pragma once

// The chain ring on tilded cells: a graded ring without unit in which
// generators on different edges anticommute by degree and same-edge products
// are weighted by signed binomials.

#include "fss/chain.hpp"

#include <string>
#include <vector>

namespace fss {

using RingElement = QChain;

/// sigma~_J * sigma~_L = (-1)^{sum_{a<b} l_a j_b} prod_i sbinom(j_i+l_i, j_i) sigma~_{J+L}.
/// Throws std::invalid_argument on a length mismatch or a zero tuple.
Chain monomial_product(const EdgeTuple& j, const EdgeTuple& l);

/// Bilinear extension. Both factors must consist of tilded cells.
RingElement chain_product(const RingElement& x, const RingElement& y);
Chain chain_product(const Chain& x, const Chain& y);

/// Product of a non-empty list, left to right. The ring has no unit, so the
/// empty product is rejected with std::invalid_argument.
RingElement product_of(const std::vector<RingElement>& factors);

/// The basic generator sigma~_j^(i) on n edges (j >= 1, edge 1-based).
Cell basic_cell(int j, int edge, int n);

/// coefficient * (sigma~_1^(i))^{odd} * (sigma~_2^(i))^power, the expression of
/// sigma~_j^(i) over Q in the degree one and two generators.
struct GeneratorExpression {
    Rational coefficient;
    bool odd = false;
    int power = 0;
    int edge = 1;
    int n = 1;

    [[nodiscard]] RingElement evaluate() const;
    [[nodiscard]] std::string str() const;
};

GeneratorExpression decompose_over_Q(int j, int edge, int n);

}  // namespace fss
