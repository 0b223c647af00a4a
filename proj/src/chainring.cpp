#include "fss/chainring.hpp"

#include <sstream>
#include <stdexcept>

namespace fss {

Chain monomial_product(const EdgeTuple& j, const EdgeTuple& l)
{
    if (j.n() != l.n()) throw std::invalid_argument("monomial_product: tuple lengths differ");
    if (j.is_zero() || l.is_zero()) throw std::invalid_argument("monomial_product: the ring has no unit");
    long exponent = 0;
    long later_j = 0;  // sum of j_b over b > a, built from the right
    for (int a = j.n(); a >= 1; --a) {
        exponent += static_cast<long>(l.at(a)) * later_j;
        later_j += j.at(a);
    }
    Integer c = (exponent & 1) ? -1 : 1;
    for (int i = 1; i <= j.n() && sgn(c); ++i) c *= signed_binomial(j.at(i) + l.at(i), j.at(i));
    return Chain(Cell::tilded(j + l), c);
}

namespace {

template <class Scalar>
BasicChain<Scalar> multiply(const BasicChain<Scalar>& x, const BasicChain<Scalar>& y)
{
    BasicChain<Scalar> out;
    for (const auto& [a, ca] : x.terms()) {
        if (a.kind != CellKind::Tilded) throw std::invalid_argument("chain_product: untilded factor " + a.str());
        for (const auto& [b, cb] : y.terms()) {
            if (b.kind != CellKind::Tilded) throw std::invalid_argument("chain_product: untilded factor " + b.str());
            const Chain m = monomial_product(a.tuple, b.tuple);
            if (m.empty()) continue;
            const auto& [cell, c] = *m.terms().begin();
            out.add(cell, Scalar(ca * cb * c));
        }
    }
    return out;
}

}  // namespace

RingElement chain_product(const RingElement& x, const RingElement& y) { return multiply(x, y); }
Chain chain_product(const Chain& x, const Chain& y) { return multiply(x, y); }

RingElement product_of(const std::vector<RingElement>& factors)
{
    if (factors.empty()) throw std::invalid_argument("product_of: empty product in a ring without unit");
    RingElement acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = chain_product(acc, factors[i]);
    return acc;
}

Cell basic_cell(int j, int edge, int n)
{
    if (j < 1 || edge < 1 || edge > n) throw std::invalid_argument("basic_cell: bad degree or edge");
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(edge - 1)] = j;
    return Cell::tilded(EdgeTuple(std::move(e)));
}

RingElement GeneratorExpression::evaluate() const
{
    std::vector<RingElement> factors;
    if (odd) factors.emplace_back(basic_cell(1, edge, n), Rational(1));
    for (int p = 0; p < power; ++p) factors.emplace_back(basic_cell(2, edge, n), Rational(1));
    RingElement out = product_of(factors);
    out *= coefficient;
    return out;
}

std::string GeneratorExpression::str() const
{
    std::ostringstream os;
    if (coefficient != 1) os << "(" << coefficient << ")";
    bool first = coefficient == 1;
    auto factor = [&](const std::string& s) {
        if (!first) os << "*";
        os << s;
        first = false;
    };
    const std::string tag = "^(" + std::to_string(edge) + ")";
    if (odd) factor("t1" + tag);
    if (power == 1) factor("t2" + tag);
    if (power > 1) factor("(t2" + tag + ")^" + std::to_string(power));
    return os.str();
}

GeneratorExpression decompose_over_Q(int j, int edge, int n)
{
    if (j < 1) throw std::invalid_argument("decompose_over_Q: degree must be positive");
    if (edge < 1 || edge > n) throw std::invalid_argument("decompose_over_Q: edge out of range");
    GeneratorExpression e;
    e.odd = j & 1;
    e.power = j / 2;
    e.edge = edge;
    e.n = n;
    Integer factorial = 1;
    for (int t = 2; t <= e.power; ++t) factorial *= t;
    e.coefficient = Rational(Integer(1), factorial);
    return e;
}

}  // namespace fss
