#pragma once

// n-tuples J = (j_1, ..., j_n) of per-edge point counts on the one-vertex
// graph Gamma_n, with their statistics and neighbour operators.
//
// Edge indices are 1-based at every public entry point; the stored entries
// are an ordinary 0-based vector.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace fss {

using Integer = mpz_class;
using Rational = mpq_class;

class EdgeTuple {
public:
    EdgeTuple() = default;
    /// Zero tuple of length n.
    static EdgeTuple zero(int n);
    explicit EdgeTuple(std::vector<int> entries);
    EdgeTuple(std::initializer_list<int> entries);

    [[nodiscard]] int n() const { return static_cast<int>(entries_.size()); }
    [[nodiscard]] std::span<const int> entries() const { return entries_; }

    /// Entry on edge `edge` (1-based).
    [[nodiscard]] int at(int edge) const;
    [[nodiscard]] int operator[](std::size_t index) const { return entries_[index]; }

    [[nodiscard]] int norm() const { return norm_; }
    [[nodiscard]] int norm2() const { return norm2_; }
    [[nodiscard]] bool is_zero() const { return norm_ == 0; }

    /// Edges (1-based) with nonzero entry.
    [[nodiscard]] std::vector<int> support() const;
    /// Edges (1-based) with odd entry.
    [[nodiscard]] std::vector<int> support2() const;

    /// |J restricted to [edge-1]|, the number of points on edges before `edge`.
    [[nodiscard]] int prefix_norm(int edge) const;

    /// First edge (1-based) with nonzero entry, or 0 for the zero tuple.
    [[nodiscard]] int first_support() const;

    /// Number of even-or-zero entries, n - |J|_2.
    [[nodiscard]] int even_count() const { return n() - norm2_; }

    [[nodiscard]] std::string str() const;

    friend bool operator==(const EdgeTuple& a, const EdgeTuple& b) { return a.entries_ == b.entries_; }
    friend std::strong_ordering operator<=>(const EdgeTuple& a, const EdgeTuple& b)
    {
        return a.entries_ <=> b.entries_;
    }

    friend EdgeTuple operator+(const EdgeTuple& a, const EdgeTuple& b);

private:
    void validate_and_cache();

    std::vector<int> entries_;
    int norm_ = 0;
    int norm2_ = 0;
};

std::ostream& operator<<(std::ostream& os, const EdgeTuple& tuple);

struct TupleStats {
    int norm;
    std::vector<int> support;
    std::vector<int> support2;
    int norm2;

    friend bool operator==(const TupleStats&, const TupleStats&) = default;
};

TupleStats tuple_stats(const EdgeTuple& tuple);

/// The operator d_i: decrement entry i. Throws std::invalid_argument when i is
/// out of range or the entry is already zero.
EdgeTuple lower_neighbor(const EdgeTuple& tuple, int edge);

/// The operator delta_i: increment entry i.
EdgeTuple raise_neighbor(const EdgeTuple& tuple, int edge);

/// All tuples of length n and norm j in lexicographic order.
std::vector<EdgeTuple> enumerate_tuples(int n, int j);

/// binom(top, bottom), zero when bottom < 0 or bottom > top (top >= 0), and
/// zero for negative top.
Integer binomial(long top, long bottom);

/// The q-binomial coefficient at q = -1 ("signed shuffle count").
Integer signed_binomial(int m, int r);

}  // namespace fss
