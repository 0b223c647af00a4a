#pragma once

// Cells of the CW structures on exp_k(Gamma_n) and exp_k(Gamma_n, v), and
// finitely supported chains over them.

#include "fss/tuples.hpp"

#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fss {

/// Untilded cells sigma_J contain the vertex, tilded cells avoid it. Cube
/// faces are the generators of the m-cube complex, indexed by the 0/1
/// indicator tuple of a subset of [m].
enum class CellKind : std::uint8_t { Untilded, Tilded, CubeFace };

struct Cell {
    CellKind kind = CellKind::Untilded;
    EdgeTuple tuple;

    [[nodiscard]] int dimension() const { return tuple.norm(); }
    [[nodiscard]] std::string str() const;

    static Cell untilded(EdgeTuple j) { return {CellKind::Untilded, std::move(j)}; }
    static Cell tilded(EdgeTuple j);
    static Cell cube_face(EdgeTuple indicator);

    friend bool operator==(const Cell&, const Cell&) = default;
    friend std::strong_ordering operator<=>(const Cell& a, const Cell& b)
    {
        if (auto c = a.kind <=> b.kind; c != 0) return c;
        return a.tuple <=> b.tuple;
    }
};

std::ostream& operator<<(std::ostream& os, const Cell& cell);

/// Raised when a rational chain that must be integral is not.
class IntegralityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

template <class Scalar>
class BasicChain {
public:
    using Terms = std::map<Cell, Scalar>;

    BasicChain() = default;
    BasicChain(const Cell& cell, Scalar coefficient) { add(cell, std::move(coefficient)); }

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool empty() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    [[nodiscard]] Scalar coefficient(const Cell& cell) const
    {
        auto it = terms_.find(cell);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    void add(const Cell& cell, const Scalar& coefficient)
    {
        if (sgn(coefficient) == 0) return;
        auto [it, inserted] = terms_.try_emplace(cell, coefficient);
        if (!inserted) {
            it->second += coefficient;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    /// Dimension shared by every term, or -1 for the zero chain; throws for
    /// mixed chains.
    [[nodiscard]] int dimension() const
    {
        if (terms_.empty()) return -1;
        const int d = terms_.begin()->first.dimension();
        for (const auto& [cell, c] : terms_)
            if (cell.dimension() != d) throw std::invalid_argument("chain is not homogeneous");
        return d;
    }

    [[nodiscard]] bool homogeneous() const
    {
        if (terms_.empty()) return true;
        const int d = terms_.begin()->first.dimension();
        for (const auto& [cell, c] : terms_)
            if (cell.dimension() != d) return false;
        return true;
    }

    /// The graded piece in dimension d.
    [[nodiscard]] BasicChain piece(int d) const
    {
        BasicChain out;
        for (const auto& [cell, c] : terms_)
            if (cell.dimension() == d) out.terms_.emplace(cell, c);
        return out;
    }

    BasicChain& operator+=(const BasicChain& other)
    {
        for (const auto& [cell, c] : other.terms_) add(cell, c);
        return *this;
    }
    BasicChain& operator-=(const BasicChain& other)
    {
        for (const auto& [cell, c] : other.terms_) add(cell, Scalar(-c));
        return *this;
    }
    BasicChain& operator*=(const Scalar& s)
    {
        if (sgn(s) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [cell, c] : terms_) c *= s;
        return *this;
    }

    friend BasicChain operator+(BasicChain a, const BasicChain& b) { return a += b; }
    friend BasicChain operator-(BasicChain a, const BasicChain& b) { return a -= b; }
    friend BasicChain operator*(const Scalar& s, BasicChain a) { return a *= s; }
    friend BasicChain operator*(BasicChain a, const Scalar& s) { return a *= s; }
    friend BasicChain operator-(BasicChain a) { return a *= Scalar(-1); }
    friend bool operator==(const BasicChain& a, const BasicChain& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

using Chain = BasicChain<Integer>;
using QChain = BasicChain<Rational>;

QChain to_rational(const Chain& chain);
/// Throws IntegralityError when some coefficient has a denominator.
Chain to_integral(const QChain& chain);

std::string to_string(const Chain& chain);
std::string to_string(const QChain& chain);
std::ostream& operator<<(std::ostream& os, const Chain& chain);
std::ostream& operator<<(std::ostream& os, const QChain& chain);

/// The kind flip sigma_J -> tilde sigma_J on untilded chains of dimension >= 1.
Chain tilde(const Chain& chain);
/// Tilde erasure tilde sigma_J -> sigma_J, identity on untilded cells; the
/// chain map of adding the vertex.
Chain erase_tilde(const Chain& chain);

}  // namespace fss
