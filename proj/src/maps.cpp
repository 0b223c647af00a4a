#include "fss/maps.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace fss {

std::vector<Letter> reduce_word(const std::vector<Letter>& raw)
{
    std::vector<Letter> out;
    out.reserve(raw.size());
    for (const Letter& l : raw) {
        if (!out.empty() && out.back() == l.inverse())
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

EdgeWord::EdgeWord(int m, const std::vector<Letter>& letters) : m_(m)
{
    if (m < 1) throw std::invalid_argument("EdgeWord: target must have at least one edge");
    for (const Letter& l : letters)
        if (l.edge < 1 || l.edge > m || (l.sign != 1 && l.sign != -1))
            throw std::invalid_argument("EdgeWord: letter on edge " + std::to_string(l.edge) + " outside [1," +
                                        std::to_string(m) + "]");
    letters_ = reduce_word(letters);
}

EdgeWord EdgeWord::inverse() const
{
    std::vector<Letter> inv;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back(it->inverse());
    return EdgeWord(m_, inv);
}

std::string EdgeWord::str() const
{
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) os << ' ';
        os << (letters_[i].sign > 0 ? 'e' : 'E') << letters_[i].edge;
    }
    return os.str();
}

GraphMap::GraphMap(int n_, int m_, std::vector<EdgeWord> words_) : n(n_), m(m_), words(std::move(words_))
{
    if (n < 1 || m < 1) throw std::invalid_argument("GraphMap: edge counts must be positive");
    if (static_cast<int>(words.size()) != n) throw std::invalid_argument("GraphMap: need one word per source edge");
    for (const auto& w : words)
        if (w.m() != m) throw std::invalid_argument("GraphMap: word targets the wrong graph");
}

GraphMap GraphMap::identity(int n)
{
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    return permutation(perm);
}

GraphMap GraphMap::permutation(const std::vector<int>& perm)
{
    const int n = static_cast<int>(perm.size());
    std::vector<EdgeWord> words;
    for (int p : perm) words.emplace_back(n, std::vector<Letter>{{p, 1}});
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (sorted[static_cast<std::size_t>(i)] != i + 1) throw std::invalid_argument("GraphMap: not a permutation");
    return GraphMap(n, n, std::move(words));
}

GraphMap compose(const GraphMap& phi, const GraphMap& psi)
{
    if (psi.m != phi.n) throw std::invalid_argument("compose: target of the inner map is not the source of the outer");
    std::vector<EdgeWord> words;
    for (const auto& w : psi.words) {
        std::vector<Letter> raw;
        for (const Letter& l : w.letters()) {
            const EdgeWord image = l.sign > 0 ? phi.word(l.edge) : phi.word(l.edge).inverse();
            raw.insert(raw.end(), image.letters().begin(), image.letters().end());
        }
        words.emplace_back(phi.m, raw);
    }
    return GraphMap(psi.n, phi.m, std::move(words));
}

int winding_number(const EdgeWord& w, int a)
{
    if (a < 1 || a > w.m()) throw std::invalid_argument("winding_number: edge out of range");
    int total = 0;
    for (const Letter& l : w.letters())
        if (l.edge == a) total += l.sign;
    return total;
}

int signed_pair_count(const EdgeWord& w, int a, int b)
{
    if (a == b) throw std::invalid_argument("signed_pair_count: edges must differ");
    if (a < 1 || a > w.m() || b < 1 || b > w.m()) throw std::invalid_argument("signed_pair_count: edge out of range");
    const auto& ls = w.letters();
    int total = 0;
    for (std::size_t p = 0; p < ls.size(); ++p) {
        if (ls[p].edge != a) continue;
        for (std::size_t q = 0; q < ls.size(); ++q) {
            if (ls[q].edge != b) continue;
            total += ls[p].sign * ls[q].sign * (q < p ? -1 : 1);
        }
    }
    return total;
}

BasicImages basic_images(const GraphMap& phi)
{
    BasicImages out;
    for (const auto& w : phi.words) {
        RingElement one;
        RingElement two;
        for (int a = 1; a <= phi.m; ++a) {
            const int d = winding_number(w, a);
            one.add(basic_cell(1, a, phi.m), Rational(d));
            two.add(basic_cell(2, a, phi.m), Rational(d));
        }
        for (int a = 1; a <= phi.m; ++a)
            for (int b = a + 1; b <= phi.m; ++b) {
                std::vector<int> e(static_cast<std::size_t>(phi.m), 0);
                e[static_cast<std::size_t>(a - 1)] = 1;
                e[static_cast<std::size_t>(b - 1)] = 1;
                two.add(Cell::tilded(EdgeTuple(std::move(e))), Rational(signed_pair_count(w, a, b)));
            }
        out.degree_one.push_back(std::move(one));
        out.degree_two.push_back(std::move(two));
    }
    return out;
}

// ---------------------------------------------------------------------------

InducedChainMap::InducedChainMap(GraphMap phi) : phi_(std::move(phi)), basics_(basic_images(phi_)) {}

RingElement InducedChainMap::edge_image(int edge, int j) const
{
    const auto key = std::make_pair(edge, j);
    {
        std::shared_lock lock(mutex_);
        auto it = edge_memo_.find(key);
        if (it != edge_memo_.end()) return it->second;
    }
    const GeneratorExpression e = decompose_over_Q(j, edge, phi_.n);
    std::vector<RingElement> factors;
    if (e.odd) factors.push_back(basics_.degree_one[static_cast<std::size_t>(edge - 1)]);
    for (int p = 0; p < e.power; ++p) factors.push_back(basics_.degree_two[static_cast<std::size_t>(edge - 1)]);
    RingElement out = product_of(factors);
    out *= e.coefficient;
    std::unique_lock lock(mutex_);
    return edge_memo_.emplace(key, std::move(out)).first->second;
}

RingElement InducedChainMap::image_of_cell(const EdgeTuple& j) const
{
    if (j.n() != phi_.n) throw std::invalid_argument("image_of_cell: tuple length differs from the source");
    if (j.is_zero()) throw std::invalid_argument("image_of_cell: no tilded cell for the zero tuple");
    {
        std::shared_lock lock(mutex_);
        auto it = cell_memo_.find(j);
        if (it != cell_memo_.end()) return it->second;
    }
    std::vector<RingElement> factors;
    for (int i = 1; i <= j.n(); ++i)
        if (j.at(i)) factors.push_back(edge_image(i, j.at(i)));
    RingElement out = product_of(factors);
    std::unique_lock lock(mutex_);
    return cell_memo_.emplace(j, std::move(out)).first->second;
}

Chain InducedChainMap::image(const Chain& c) const
{
    RingElement acc;
    for (const auto& [cell, coeff] : c.terms()) {
        if (cell.kind != CellKind::Tilded) throw std::invalid_argument("chain_image: untilded cell " + cell.str());
        RingElement term = image_of_cell(cell.tuple);
        term *= Rational(coeff);
        acc += term;
    }
    try {
        return to_integral(acc);
    } catch (const IntegralityError& e) {
        throw IntegralityError(std::string("non-integral image: ") + e.what());
    }
}

Chain chain_image(const GraphMap& phi, const Chain& c) { return InducedChainMap(phi).image(c); }

HomologyMatrix homology_matrix(const InducedChainMap& f, const HomologyBasis& source, const HomologyBasis& target)
{
    if (source.k != target.k || source.n != f.map().n || target.n != f.map().m)
        throw std::invalid_argument("homology_matrix: bases do not match the map");
    HomologyMatrix out;
    out.k = source.k;
    out.column_legend = source.generators;
    out.row_legend = target.generators;
    out.matrix = IntMatrix(target.size(), source.size());
    for (std::size_t c = 0; c < source.size(); ++c) {
        const auto coords = coordinates_in_basis(f.image(source.elements[c]), target);
        for (std::size_t r = 0; r < coords.size(); ++r) out.matrix(r, c) = coords[r];
    }
    return out;
}

HomologyMatrix homology_matrix(const GraphMap& phi, int k)
{
    if (k < 1) throw std::invalid_argument("homology_matrix: k must be positive");
    return homology_matrix(InducedChainMap(phi), basis_Bkn(k, phi.n), basis_Bkn(k, phi.m));
}

// ---------------------------------------------------------------------------

long oracle_pairing(const EdgeWord& w, int j, const EdgeTuple& l)
{
    if (l.n() != w.m()) throw std::invalid_argument("oracle_pairing: target tuple has the wrong length");
    if (l.norm() != j) return 0;

    struct Point {
        int edge;
        int param;
        int canonical;
    };
    std::vector<Point> points;
    for (int a = 1; a <= l.n(); ++a)
        for (int q = 0; q < l.at(a); ++q) points.push_back({a, q, static_cast<int>(points.size())});

    std::vector<std::vector<std::size_t>> occurrences(static_cast<std::size_t>(l.n() + 1));
    for (std::size_t p = 0; p < w.letters().size(); ++p)
        occurrences[static_cast<std::size_t>(w.letters()[p].edge)].push_back(p);

    std::vector<std::size_t> choice(points.size());
    long total = 0;
    std::function<void(std::size_t)> assign = [&](std::size_t idx) {
        if (idx == points.size()) {
            // Source order: by letter occurrence, then along the letter's
            // direction of travel.
            std::vector<std::pair<std::pair<std::size_t, int>, int>> keyed;
            int sign = 1;
            for (std::size_t t = 0; t < points.size(); ++t) {
                const Letter& letter = w.letters()[choice[t]];
                if (letter.sign < 0) sign = -sign;
                keyed.push_back({{choice[t], letter.sign * points[t].param}, points[t].canonical});
            }
            std::sort(keyed.begin(), keyed.end());
            int inversions = 0;
            for (std::size_t a = 0; a < keyed.size(); ++a)
                for (std::size_t b = a + 1; b < keyed.size(); ++b)
                    if (keyed[a].second > keyed[b].second) ++inversions;
            total += (inversions & 1) ? -sign : sign;
            return;
        }
        for (std::size_t occ : occurrences[static_cast<std::size_t>(points[idx].edge)]) {
            choice[idx] = occ;
            assign(idx + 1);
        }
    };
    assign(0);
    return total;
}

}  // namespace fss
