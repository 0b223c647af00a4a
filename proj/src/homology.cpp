#include "fss/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace fss {

std::size_t HomologySummary::rank(int d) const
{
    if (d < 0 || d >= static_cast<int>(groups.size())) return 0;
    return groups[static_cast<std::size_t>(d)].rank;
}

const std::vector<Integer>& HomologySummary::torsion(int d) const
{
    static const std::vector<Integer> none;
    if (d < 0 || d >= static_cast<int>(groups.size())) return none;
    return groups[static_cast<std::size_t>(d)].torsion;
}

bool HomologySummary::torsion_free() const
{
    return std::all_of(groups.begin(), groups.end(), [](const auto& g) { return g.torsion.empty(); });
}

std::vector<int> HomologySummary::support() const
{
    std::vector<int> out;
    for (const auto& g : groups)
        if (g.rank || !g.torsion.empty()) out.push_back(g.dim);
    return out;
}

HomologySummary homology(const ChainComplex& complex, bool reduced)
{
    HomologySummary out;
    out.label = complex.label();
    out.reduced = reduced;
    const int top = complex.top_dimension();
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
    std::vector<std::vector<Integer>> invariants(static_cast<std::size_t>(top + 2));
    for (int d = 1; d <= top; ++d) {
        const SparseMatrix m = complex.boundary_matrix(d);
        ranks[static_cast<std::size_t>(d)] = rank(m);
        invariants[static_cast<std::size_t>(d)] = smith_invariants(m);
        if (invariants[static_cast<std::size_t>(d)].size() != ranks[static_cast<std::size_t>(d)])
            throw std::logic_error("Smith invariants disagree with rank of boundary " + std::to_string(d) + " in " +
                                   complex.label().str());
    }
    for (int d = 0; d <= top; ++d) {
        DimensionHomology g;
        g.dim = d;
        const std::size_t cycles = complex.count(d) - ranks[static_cast<std::size_t>(d)];
        g.rank = cycles - ranks[static_cast<std::size_t>(d + 1)];
        if (reduced && d == 0 && g.rank > 0) --g.rank;
        for (const auto& v : invariants[static_cast<std::size_t>(d + 1)])
            if (v != 1) g.torsion.push_back(v);
        out.groups.push_back(std::move(g));
    }
    return out;
}

// ---------------------------------------------------------------------------

HomologyPresentation::HomologyPresentation(const ChainComplex& complex, int d) : complex_(&complex), d_(d)
{
    if (d < 0 || d > complex.top_dimension()) throw std::invalid_argument("HomologyPresentation: dimension out of range");
    const SmithForm outgoing = smith_normal_form(complex.boundary_matrix(d).to_dense());
    boundary_rank_ = outgoing.rank();
    vinv_ = outgoing.Vinv;
    const std::size_t cd = complex.count(d);
    const std::size_t kernel = cd - boundary_rank_;

    const IntMatrix incoming = complex.boundary_matrix(d + 1).to_dense();
    const IntMatrix in_cycles = (vinv_ * incoming).block(boundary_rank_, 0, kernel, incoming.cols());
    const SmithForm image = smith_normal_form(in_cycles);
    image_rank_ = image.rank();
    u2_ = image.U;
    for (const auto& v : image.diagonal)
        if (v != 1) torsion_.push_back(v);

    const IntMatrix kernel_basis = outgoing.V.block(0, boundary_rank_, cd, kernel);
    for (std::size_t j = image_rank_; j < kernel; ++j)
        lifts_.push_back(complex.from_vector(kernel_basis * image.Uinv.column(j), d));
}

std::vector<Integer> HomologyPresentation::free_coordinates(const Chain& cycle) const
{
    const std::vector<Integer> y = vinv_ * complex_->to_vector(cycle, d_);
    for (std::size_t i = 0; i < boundary_rank_; ++i)
        if (sgn(y[i])) throw std::invalid_argument("free_coordinates: chain is not a cycle");
    const std::vector<Integer> in_kernel(y.begin() + static_cast<std::ptrdiff_t>(boundary_rank_), y.end());
    const std::vector<Integer> z = u2_ * in_kernel;
    return {z.begin() + static_cast<std::ptrdiff_t>(image_rank_), z.end()};
}

IntMatrix induced_on_homology(const HomologyPresentation& from, const HomologyPresentation& to,
                              const std::function<Chain(const Chain&)>& chain_map)
{
    IntMatrix out(to.free_rank(), from.free_rank());
    for (std::size_t c = 0; c < from.free_rank(); ++c) {
        const auto coords = to.free_coordinates(chain_map(from.generator(c)));
        for (std::size_t r = 0; r < coords.size(); ++r) out(r, c) = coords[r];
    }
    return out;
}

// ---------------------------------------------------------------------------

Integer betti_formula(int k, int n)
{
    if (k < 1 || n < 1) throw std::invalid_argument("betti_formula: k and n must be positive");
    Integer alternating = 0;
    for (int j = 1; j <= k; ++j) {
        const Integer term = binomial(n + j - 1, n - 1);
        if ((k - j) & 1)
            alternating -= term;
        else
            alternating += term;
    }
    Integer cased = 0;
    const int l = k / 2;
    if (k % 2 == 0) {
        for (int j = 1; j <= l; ++j) cased += binomial(n + 2 * j - 2, n - 2);
    } else {
        cased = n;
        for (int j = 1; j <= l; ++j) cased += binomial(n + 2 * j - 1, n - 2);
    }
    if (cased != alternating)
        throw std::logic_error("betti_formula: alternating and cased forms differ at k=" + std::to_string(k) +
                               ", n=" + std::to_string(n));
    return alternating;
}

std::vector<Integer> betti_genfun(int n, int kmax)
{
    if (n < 1 || kmax < 0) throw std::invalid_argument("betti_genfun: need n >= 1, kmax >= 0");
    const std::size_t len = static_cast<std::size_t>(kmax) + 1;
    // (1-x)^n truncated
    std::vector<Integer> power(len, 0);
    for (std::size_t i = 0; i < len && i <= static_cast<std::size_t>(n); ++i) {
        power[i] = binomial(n, static_cast<long>(i));
        if (i & 1) power[i] = -power[i];
    }
    std::vector<Integer> numerator(len, 0);
    for (std::size_t i = 0; i < len; ++i) numerator[i] = -power[i];
    numerator[0] += 1;
    std::vector<Integer> denominator(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
        denominator[i] = power[i];
        if (i) denominator[i] += power[i - 1];
    }
    // denominator[0] == 1, so the quotient is integral term by term.
    std::vector<Integer> q(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
        Integer acc = numerator[i];
        for (std::size_t t = 1; t <= i; ++t) acc -= denominator[t] * q[i - t];
        q[i] = acc;
    }
    return q;
}

Integer euler_characteristic(const ComplexLabel& label)
{
    Integer chi = 0;
    switch (label.kind) {
    case ComplexKind::Based:
        for (int j = 0; j <= label.k - 1; ++j) {
            const Integer t = binomial(label.n + j - 1, label.n - 1);
            chi += (j & 1) ? Integer(-t) : t;
        }
        return chi;
    case ComplexKind::Unbased: {
        chi = 1;
        for (int j = 1; j <= label.k - 1; ++j) {
            const Integer t = 2 * binomial(label.n + j - 1, label.n - 1);
            chi += (j & 1) ? Integer(-t) : t;
        }
        const Integer top = binomial(label.n + label.k - 1, label.n - 1);
        chi += (label.k & 1) ? Integer(-top) : top;
        return chi;
    }
    default: {
        int top = 0;
        if (label.kind == ComplexKind::Cube) top = label.m;
        if (label.kind == ComplexKind::Sub) top = label.max_dim;
        if (label.kind == ComplexKind::SubL) top = label.odd_part.norm() + label.m;
        for (int d = 0; d <= top; ++d) chi += (d & 1) ? Integer(-census(label, d)) : census(label, d);
        return chi;
    }
    }
}

// ---------------------------------------------------------------------------

std::vector<std::pair<int, std::pair<std::size_t, std::size_t>>> HomologyBasis::blocks() const
{
    std::vector<std::pair<int, std::pair<std::size_t, std::size_t>>> out;
    for (std::size_t i = 0; i < filtration.size(); ++i) {
        if (out.empty() || out.back().first != filtration[i])
            out.push_back({filtration[i], {i, i + 1}});
        else
            out.back().second.second = i + 1;
    }
    return out;
}

HomologyBasis basis_Bkn(int k, int n)
{
    if (k < 1 || n < 1) throw std::invalid_argument("basis_Bkn: k and n must be positive");
    struct Item {
        int index;
        EdgeTuple j;
    };
    std::vector<Item> items;
    for (auto& j : enumerate_tuples(n, k + 1)) {
        const int first = j.first_support();
        if (j.at(first) & 1) continue;
        items.push_back({filtration_index(j) - 1, std::move(j)});
    }
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.index < b.index; });

    HomologyBasis basis;
    basis.k = k;
    basis.n = n;
    for (auto& item : items) {
        Chain element = tilde(boundary_untilded(item.j));
        for (const auto& [cell, c] : element.terms())
            if (filtration_index(cell.tuple) != item.index)
                throw std::logic_error("basis element for " + item.j.str() + " mixes filtration indices");
        if (!boundary(element).empty()) throw std::logic_error("basis element for " + item.j.str() + " is not a cycle");
        EdgeTuple lead = lower_neighbor(item.j, item.j.first_support());
        if (element.coefficient(Cell::tilded(lead)) != -1)
            throw std::logic_error("basis element for " + item.j.str() + " lacks its leading term");
        basis.elements.push_back(std::move(element));
        basis.leading.push_back(std::move(lead));
        basis.filtration.push_back(item.index);
        basis.generators.push_back(std::move(item.j));
    }
    if (Integer(static_cast<unsigned long>(basis.size())) != betti_formula(k, n))
        throw std::logic_error("basis_Bkn: element count differs from the Betti number");
    return basis;
}

std::vector<Integer> coordinates_in_basis(const Chain& z, const HomologyBasis& basis)
{
    for (const auto& [cell, c] : z.terms())
        if (cell.kind != CellKind::Tilded || cell.dimension() != basis.k || cell.tuple.n() != basis.n)
            throw std::invalid_argument("coordinates_in_basis: " + cell.str() + " is not a tilded " +
                                        std::to_string(basis.k) + "-cell on " + std::to_string(basis.n) + " edges");
    if (!boundary(z).empty()) throw NotACycleError("coordinates_in_basis: not a cycle: " + to_string(z));

    // Each leading cell occurs in exactly one element and in no other term,
    // so its coefficient in z fixes the coordinate directly.
    std::vector<Integer> coords(basis.size());
    Chain rebuilt;
    for (std::size_t e = 0; e < basis.size(); ++e) {
        coords[e] = -z.coefficient(Cell::tilded(basis.leading[e]));
        if (sgn(coords[e])) rebuilt += coords[e] * basis.elements[e];
    }
    if (!(rebuilt == z)) throw NotInSpanError("coordinates_in_basis: not in the span of B(k,n): " + to_string(z));
    return coords;
}

std::vector<Chain> cube_truncated_basis(int m, int j)
{
    if (j < 1 || j > m - 1) throw std::invalid_argument("cube_truncated_basis: need 1 <= j <= m-1");
    const ChainComplex cube = build_complex(ComplexLabel::cube(m));
    std::vector<Chain> out;
    for (const auto& cell : cube.cells(j + 1))
        if (cell.tuple.at(1) == 1) out.push_back(boundary(cell));

    if (Integer(static_cast<unsigned long>(out.size())) != binomial(m - 1, j))
        throw std::logic_error("cube_truncated_basis: wrong element count");
    SparseMatrix coords(cube.count(j), out.size());
    for (std::size_t c = 0; c < out.size(); ++c) {
        if (!boundary(out[c]).empty()) throw std::logic_error("cube_truncated_basis: element is not a cycle");
        std::vector<SparseMatrix::Entry> entries;
        for (const auto& [cell, v] : out[c].terms()) entries.emplace_back(*cube.index_of(cell), v);
        coords.set_column(c, std::move(entries));
    }
    if (rank(coords) != out.size()) throw std::logic_error("cube_truncated_basis: elements are dependent");
    return out;
}

}  // namespace fss
