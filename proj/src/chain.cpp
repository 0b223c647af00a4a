#include "fss/chain.hpp"

#include <sstream>

namespace fss {

Cell Cell::tilded(EdgeTuple j)
{
    if (j.is_zero()) throw std::invalid_argument("tilded cell needs a nonzero tuple");
    return {CellKind::Tilded, std::move(j)};
}

Cell Cell::cube_face(EdgeTuple indicator)
{
    for (int v : indicator.entries())
        if (v > 1) throw std::invalid_argument("cube face indicator must be 0/1");
    return {CellKind::CubeFace, std::move(indicator)};
}

std::string Cell::str() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cell& cell)
{
    switch (cell.kind) {
    case CellKind::Untilded: return os << "s" << cell.tuple;
    case CellKind::Tilded: return os << "t" << cell.tuple;
    case CellKind::CubeFace: {
        os << '{';
        bool first = true;
        for (int i = 1; i <= cell.tuple.n(); ++i)
            if (cell.tuple.at(i)) {
                if (!first) os << ',';
                os << i;
                first = false;
            }
        return os << '}';
    }
    }
    return os;
}

QChain to_rational(const Chain& chain)
{
    QChain out;
    for (const auto& [cell, c] : chain.terms()) out.add(cell, Rational(c));
    return out;
}

Chain to_integral(const QChain& chain)
{
    Chain out;
    for (const auto& [cell, c] : chain.terms()) {
        if (c.get_den() != 1)
            throw IntegralityError("non-integral coefficient " + c.get_str() + " on " + cell.str());
        out.add(cell, c.get_num());
    }
    return out;
}

namespace {

template <class Scalar>
std::string render(const BasicChain<Scalar>& chain)
{
    if (chain.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [cell, c] : chain.terms()) {
        const bool negative = sgn(c) < 0;
        Scalar magnitude = abs(c);
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        if (magnitude != 1) os << magnitude << "*";
        os << cell;
        first = false;
    }
    return os.str();
}

}  // namespace

std::string to_string(const Chain& chain) { return render(chain); }
std::string to_string(const QChain& chain) { return render(chain); }
std::ostream& operator<<(std::ostream& os, const Chain& chain) { return os << render(chain); }
std::ostream& operator<<(std::ostream& os, const QChain& chain) { return os << render(chain); }

Chain tilde(const Chain& chain)
{
    Chain out;
    for (const auto& [cell, c] : chain.terms()) {
        if (cell.kind != CellKind::Untilded) throw std::invalid_argument("tilde: expected untilded cells, got " + cell.str());
        out.add(Cell::tilded(cell.tuple), c);
    }
    return out;
}

Chain erase_tilde(const Chain& chain)
{
    Chain out;
    for (const auto& [cell, c] : chain.terms()) {
        if (cell.kind == CellKind::CubeFace) throw std::invalid_argument("erase_tilde: cube face " + cell.str());
        out.add(Cell::untilded(cell.tuple), c);
    }
    return out;
}

}  // namespace fss
