#include "fss/complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fss {

namespace {

int parity_sign(int exponent) { return (exponent & 1) ? -1 : 1; }

void require_positive(int value, const char* what)
{
    if (value < 1) throw std::invalid_argument(std::string("complex label: ") + what + " must be positive");
}

}  // namespace

Chain boundary_untilded(const EdgeTuple& j)
{
    Chain out;
    for (int i = 1; i <= j.n(); ++i) {
        const int ji = j.at(i);
        if (ji == 0 || (ji & 1)) continue;
        out.add(Cell::untilded(lower_neighbor(j, i)), -parity_sign(j.prefix_norm(i)));
    }
    return out;
}

Chain boundary_tilded(const EdgeTuple& j)
{
    if (j.is_zero()) throw std::invalid_argument("boundary_tilded: zero tuple has no tilded cell");
    Chain out;
    for (int i = 1; i <= j.n(); ++i) {
        const int ji = j.at(i);
        if (ji == 0 || (ji & 1)) continue;
        const int sign = parity_sign(j.prefix_norm(i));
        EdgeTuple lower = lower_neighbor(j, i);
        out.add(Cell::tilded(lower), sign);
        out.add(Cell::untilded(std::move(lower)), -2 * sign);
    }
    return out;
}

Chain boundary_cube(const EdgeTuple& indicator)
{
    Chain out;
    int missing_before = 0;
    for (int i = 1; i <= indicator.n(); ++i) {
        const int v = indicator.at(i);
        if (v > 1) throw std::invalid_argument("boundary_cube: indicator entries must be 0/1");
        if (v == 0) {
            ++missing_before;
            continue;
        }
        out.add(Cell::cube_face(lower_neighbor(indicator, i)), parity_sign(missing_before));
    }
    return out;
}

Chain boundary(const Cell& cell)
{
    switch (cell.kind) {
    case CellKind::Untilded: return boundary_untilded(cell.tuple);
    case CellKind::Tilded: return boundary_tilded(cell.tuple);
    case CellKind::CubeFace: return boundary_cube(cell.tuple);
    }
    return {};
}

Chain boundary(const Chain& chain)
{
    Chain out;
    for (const auto& [cell, c] : chain.terms()) {
        Chain b = boundary(cell);
        b *= c;
        out += b;
    }
    return out;
}

bool tilde_relation_check(const Chain& chain)
{
    for (const auto& [cell, c] : chain.terms())
        if (cell.kind != CellKind::Untilded || cell.dimension() < 1)
            throw std::invalid_argument("tilde_relation_check: expects untilded cells of dimension >= 1");
    const Chain bc = boundary(chain);
    Chain rhs = Integer(2) * bc;
    rhs -= tilde(bc);
    return boundary(tilde(chain)) == rhs;
}

// ---------------------------------------------------------------------------

ComplexLabel ComplexLabel::based(int k, int n)
{
    require_positive(k, "k");
    require_positive(n, "n");
    ComplexLabel l;
    l.kind = ComplexKind::Based;
    l.k = k;
    l.n = n;
    return l;
}

ComplexLabel ComplexLabel::unbased(int k, int n)
{
    ComplexLabel l = based(k, n);
    l.kind = ComplexKind::Unbased;
    return l;
}

ComplexLabel ComplexLabel::cube(int m)
{
    require_positive(m, "m");
    ComplexLabel l;
    l.kind = ComplexKind::Cube;
    l.m = m;
    return l;
}

ComplexLabel ComplexLabel::sub(int n, std::vector<int> subset, int max_dim)
{
    require_positive(n, "n");
    if (max_dim < 0) throw std::invalid_argument("complex label: max_dim must be non-negative");
    std::sort(subset.begin(), subset.end());
    if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
        throw std::invalid_argument("complex label: repeated edge in support");
    for (int e : subset)
        if (e < 1 || e > n) throw std::invalid_argument("complex label: support edge out of range");
    ComplexLabel l;
    l.kind = ComplexKind::Sub;
    l.n = n;
    l.subset = std::move(subset);
    l.max_dim = max_dim;
    return l;
}

ComplexLabel ComplexLabel::sub_l(EdgeTuple odd_part)
{
    for (int v : odd_part.entries())
        if (!(v & 1)) throw std::invalid_argument("complex label: odd part must have all entries odd");
    ComplexLabel l;
    l.kind = ComplexKind::SubL;
    l.m = odd_part.n();
    l.odd_part = std::move(odd_part);
    return l;
}

std::string ComplexLabel::str() const
{
    std::ostringstream os;
    switch (kind) {
    case ComplexKind::Based: os << "Based(" << k << "," << n << ")"; break;
    case ComplexKind::Unbased: os << "Unbased(" << k << "," << n << ")"; break;
    case ComplexKind::Cube: os << "Cube(" << m << ")"; break;
    case ComplexKind::Sub: {
        os << "Sub(n=" << n << ",S={";
        for (std::size_t i = 0; i < subset.size(); ++i) os << (i ? "," : "") << subset[i];
        os << "},dim<=" << max_dim << ")";
        break;
    }
    case ComplexKind::SubL: os << "SubL(" << odd_part << ")"; break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

const std::vector<Cell>& ChainComplex::cells(int d) const
{
    static const std::vector<Cell> none;
    if (d < 0 || d > top_dimension()) return none;
    return cells_[static_cast<std::size_t>(d)];
}

std::size_t ChainComplex::count(int d) const { return cells(d).size(); }

std::size_t ChainComplex::total_cells() const
{
    std::size_t total = 0;
    for (const auto& c : cells_) total += c.size();
    return total;
}

SparseMatrix ChainComplex::boundary_matrix(int d) const
{
    if (d >= 1 && d <= top_dimension()) return boundaries_[static_cast<std::size_t>(d)];
    return SparseMatrix(count(d - 1), count(d));
}

std::optional<std::size_t> ChainComplex::index_of(const Cell& cell) const
{
    auto it = index_.find(cell);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<Integer> ChainComplex::to_vector(const Chain& chain, int d) const
{
    std::vector<Integer> out(count(d));
    for (const auto& [cell, c] : chain.terms()) {
        auto idx = index_of(cell);
        if (!idx || cell.dimension() != d)
            throw std::invalid_argument("chain term " + cell.str() + " is not a " + std::to_string(d) + "-cell of " +
                                        label_.str());
        out[*idx] = c;
    }
    return out;
}

Chain ChainComplex::from_vector(const std::vector<Integer>& coords, int d) const
{
    const auto& basis = cells(d);
    if (coords.size() != basis.size()) throw std::invalid_argument("from_vector: length mismatch");
    Chain out;
    for (std::size_t i = 0; i < coords.size(); ++i) out.add(basis[i], coords[i]);
    return out;
}

long ChainComplex::euler_characteristic() const
{
    long chi = 0;
    for (int d = 0; d <= top_dimension(); ++d) chi += (d & 1 ? -1L : 1L) * static_cast<long>(count(d));
    return chi;
}

namespace {

std::vector<std::vector<Cell>> generate_cells(const ComplexLabel& label)
{
    std::vector<std::vector<Cell>> cells;
    switch (label.kind) {
    case ComplexKind::Based:
    case ComplexKind::Unbased: {
        const int top = label.kind == ComplexKind::Based ? label.k - 1 : label.k;
        cells.resize(static_cast<std::size_t>(top + 1));
        for (int d = 0; d <= top; ++d) {
            auto tuples = enumerate_tuples(label.n, d);
            auto& level = cells[static_cast<std::size_t>(d)];
            if (d <= label.k - 1)
                for (const auto& t : tuples) level.push_back(Cell::untilded(t));
            if (label.kind == ComplexKind::Unbased && d >= 1)
                for (auto& t : tuples) level.push_back(Cell::tilded(std::move(t)));
        }
        break;
    }
    case ComplexKind::Cube: {
        cells.resize(static_cast<std::size_t>(label.m + 1));
        for (int d = 0; d <= label.m; ++d)
            for (auto& t : enumerate_tuples(label.m, d)) {
                const auto e = t.entries();
                if (std::all_of(e.begin(), e.end(), [](int v) { return v <= 1; }))
                    cells[static_cast<std::size_t>(d)].push_back(Cell::cube_face(std::move(t)));
            }
        break;
    }
    case ComplexKind::Sub: {
        cells.resize(static_cast<std::size_t>(label.max_dim + 1));
        for (int d = 0; d <= label.max_dim; ++d)
            for (auto& t : enumerate_tuples(label.n, d))
                if (t.support() == label.subset) cells[static_cast<std::size_t>(d)].push_back(Cell::untilded(std::move(t)));
        while (!cells.empty() && cells.back().empty()) cells.pop_back();
        break;
    }
    case ComplexKind::SubL: {
        const EdgeTuple& l = label.odd_part;
        const int m = l.n();
        cells.resize(static_cast<std::size_t>(l.norm() + m + 1));
        for (int s = 0; s <= m; ++s)
            for (const auto& x : enumerate_tuples(m, s)) {
                const auto e = x.entries();
                if (!std::all_of(e.begin(), e.end(), [](int v) { return v <= 1; })) continue;
                EdgeTuple j = l + x;
                cells[static_cast<std::size_t>(j.norm())].push_back(Cell::untilded(std::move(j)));
            }
        for (auto& level : cells) std::sort(level.begin(), level.end());
        break;
    }
    }
    return cells;
}

}  // namespace

ChainComplex build_complex(const ComplexLabel& label)
{
    ChainComplex cx;
    cx.label_ = label;
    cx.cells_ = generate_cells(label);
    for (const auto& level : cx.cells_)
        for (std::size_t i = 0; i < level.size(); ++i) cx.index_.emplace(level[i], i);

    const int top = cx.top_dimension();
    cx.boundaries_.resize(static_cast<std::size_t>(std::max(top + 1, 0)));
    for (int d = 1; d <= top; ++d) {
        const auto& cols = cx.cells(d);
        SparseMatrix m(cx.count(d - 1), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::vector<SparseMatrix::Entry> entries;
            const Chain image = boundary(cols[c]);
            for (const auto& [cell, coeff] : image.terms()) {
                auto row = cx.index_of(cell);
                if (!row)
                    throw std::logic_error("boundary of " + cols[c].str() + " leaves " + label.str() + " at " +
                                           cell.str());
                entries.emplace_back(*row, coeff);
            }
            m.set_column(c, std::move(entries));
        }
        cx.boundaries_[static_cast<std::size_t>(d)] = std::move(m);
    }
    for (int d = 2; d <= top; ++d)
        if (!(cx.boundaries_[static_cast<std::size_t>(d - 1)] * cx.boundaries_[static_cast<std::size_t>(d)]).is_zero())
            throw std::logic_error("d o d != 0 in dimension " + std::to_string(d) + " of " + label.str());
    return cx;
}

CellSignature cell_signature(const EdgeTuple& j)
{
    CellSignature sig;
    for (int i = 1; i <= j.n(); ++i) {
        const int v = j.at(i);
        if (v == 0) continue;
        sig.support.push_back(i);
        sig.odd_part.push_back((v & 1) ? v : v - 1);
    }
    return sig;
}

EdgeTuple even_indicator(const EdgeTuple& j)
{
    std::vector<int> out(static_cast<std::size_t>(j.n()));
    for (int i = 0; i < j.n(); ++i) out[static_cast<std::size_t>(i)] = (j[static_cast<std::size_t>(i)] & 1) ? 0 : 1;
    return EdgeTuple(std::move(out));
}

Integer census(const ComplexLabel& label, int d)
{
    if (d < 0) return 0;
    switch (label.kind) {
    case ComplexKind::Based:
        return d <= label.k - 1 ? binomial(label.n + d - 1, label.n - 1) : Integer(0);
    case ComplexKind::Unbased: {
        Integer total = d <= label.k - 1 ? binomial(label.n + d - 1, label.n - 1) : Integer(0);
        if (d >= 1 && d <= label.k) total += binomial(label.n + d - 1, label.n - 1);
        return total;
    }
    case ComplexKind::Cube: return binomial(label.m, d);
    case ComplexKind::Sub: {
        if (d > label.max_dim) return 0;
        const long s = static_cast<long>(label.subset.size());
        if (s == 0) return d == 0 ? Integer(1) : Integer(0);
        return binomial(d - 1, s - 1);
    }
    case ComplexKind::SubL: return binomial(label.m, d - label.odd_part.norm());
    }
    return 0;
}

}  // namespace fss
