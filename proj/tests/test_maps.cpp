#include "fss/maps.hpp"

#include "fss/complex.hpp"

#include <doctest.h>

#include <random>
#include <thread>

using namespace fss;

namespace {

Cell t(std::initializer_list<int> j) { return Cell::tilded(EdgeTuple(j)); }

EdgeWord word(int m, std::initializer_list<int> signed_edges)
{
    std::vector<Letter> ls;
    for (int e : signed_edges) ls.push_back({e > 0 ? e : -e, e > 0 ? 1 : -1});
    return EdgeWord(m, ls);
}

GraphMap tau() { return GraphMap(2, 2, {word(2, {2}), word(2, {2, 1, -2})}); }
GraphMap swap() { return GraphMap::permutation({2, 1}); }
GraphMap degree(int d)
{
    std::vector<Letter> ls(static_cast<std::size_t>(d < 0 ? -d : d), Letter{1, d < 0 ? -1 : 1});
    return GraphMap(1, 1, {EdgeWord(1, ls)});
}

EdgeWord random_word(std::mt19937& rng, int m, int max_length)
{
    std::vector<Letter> ls;
    const int length = static_cast<int>(rng() % static_cast<unsigned>(max_length + 1));
    for (int i = 0; i < length; ++i)
        ls.push_back({1 + static_cast<int>(rng() % static_cast<unsigned>(m)), rng() % 2 ? 1 : -1});
    return EdgeWord(m, ls);
}

GraphMap random_map(std::mt19937& rng, int n, int m, int max_length)
{
    std::vector<EdgeWord> ws;
    for (int i = 0; i < n; ++i) ws.push_back(random_word(rng, m, max_length));
    return GraphMap(n, m, std::move(ws));
}

// Every reduced word over two edges of the given length.
std::vector<EdgeWord> reduced_words(int length)
{
    const int alphabet[] = {1, -1, 2, -2};
    std::vector<std::vector<int>> words{{}};
    for (int step = 0; step < length; ++step) {
        std::vector<std::vector<int>> next;
        for (const auto& w : words)
            for (int a : alphabet)
                if (w.empty() || w.back() != -a) {
                    next.push_back(w);
                    next.back().push_back(a);
                }
        words = std::move(next);
    }
    std::vector<EdgeWord> out;
    for (const auto& w : words) {
        std::vector<Letter> ls;
        for (int e : w) ls.push_back({e > 0 ? e : -e, e > 0 ? 1 : -1});
        out.emplace_back(2, ls);
        REQUIRE(out.back().length() == w.size());
    }
    return out;
}

}  // namespace

TEST_CASE("word reduction")
{
    CHECK(word(1, {1, -1}).empty());
    CHECK(word(2, {2, 1, -2}).length() == 3);
    CHECK(word(3, {1, 2, -2, -1, 3}) == word(3, {3}));
    CHECK(word(3, {1, 2, -2, -1, 3}).str() == "e3");
    CHECK(word(2, {2, -1}).str() == "e2 E1");
    CHECK(EdgeWord(2, {}).str() == "1");
    const auto w = word(3, {1, 2, -3, 3, -2, 2, 1});
    CHECK(EdgeWord(3, w.letters()) == w);
    CHECK_THROWS_AS(word(2, {3}), std::invalid_argument);
}

TEST_CASE("winding numbers and pair counts")
{
    const auto w = word(2, {2, 1, -2});
    CHECK(winding_number(w, 1) == 1);
    CHECK(winding_number(w, 2) == 0);
    CHECK(winding_number(word(1, {1, 1, 1}), 1) == 3);
    CHECK(winding_number(EdgeWord(2, {}), 2) == 0);
    CHECK(signed_pair_count(w, 1, 2) == -2);
    CHECK(signed_pair_count(word(2, {1, 2}), 1, 2) == 1);
    CHECK(signed_pair_count(EdgeWord(2, {}), 1, 2) == 0);
    CHECK_THROWS_AS((void)signed_pair_count(w, 1, 1), std::invalid_argument);
}

TEST_CASE("graph map composition")
{
    CHECK(compose(tau(), GraphMap::identity(2)) == tau());
    const GraphMap inverse(2, 2, {word(2, {-1, 2, 1}), word(2, {1})});
    CHECK(compose(tau(), inverse) == GraphMap::identity(2));
    CHECK(compose(inverse, tau()) == GraphMap::identity(2));
    CHECK_THROWS_AS((void)compose(tau(), degree(2)), std::invalid_argument);
}

TEST_CASE("basic images")
{
    for (int d = -2; d <= 3; ++d) {
        const auto b = basic_images(degree(d));
        CHECK(b.degree_one[0] == RingElement(t({1}), Rational(d)));
        CHECK(b.degree_two[0] == RingElement(t({2}), Rational(d)));
    }
    const auto b = basic_images(tau());
    CHECK(b.degree_two[1] == RingElement(t({2, 0}), 1) + RingElement(t({1, 1}), -2));
    CHECK(b.degree_one[1] == RingElement(t({1, 0}), 1));
    const auto empty = basic_images(GraphMap(2, 2, {EdgeWord(2, {}), word(2, {1})}));
    CHECK(empty.degree_one[0].empty());
    CHECK(empty.degree_two[0].empty());
}

TEST_CASE("degree d circle maps")
{
    for (int d = -2; d <= 3; ++d) {
        const InducedChainMap f(degree(d));
        Integer power = 1;
        for (int l = 1; l <= 4; ++l) {
            power *= d;
            CHECK(f.image(Chain(t({2 * l - 1}), 1)) == Chain(t({2 * l - 1}), power));
            const auto m = homology_matrix(degree(d), 2 * l - 1);
            CHECK(m.matrix == IntMatrix{{power.get_si()}});
        }
    }
    CHECK(homology_matrix(degree(3), 3).matrix == IntMatrix{{9}});
}

TEST_CASE("tau on chains")
{
    const InducedChainMap f(tau());
    const InducedChainMap bar(swap());
    for (int j = 1; j <= 6; ++j) {
        Chain expected(t({j, 0}), 1);
        if (j % 2 == 0) expected.add(t({j - 1, 1}), -2);
        CHECK(f.image(Chain(t({0, j}), 1)) == expected);
    }
    for (int d = 1; d <= 6; ++d)
        for (int l = 0; l <= d; ++l) {
            const int m = d - l;
            const Chain c(t({l, m}), 1);
            Chain expected = bar.image(c);
            if (l % 2 == 0 && m % 2 == 0 && m > 0) expected.add(t({m - 1, l + 1}), -2);
            CHECK(f.image(c) == expected);
        }
}

TEST_CASE("identity and constant maps")
{
    const InducedChainMap id(GraphMap::identity(3));
    for (int d = 1; d <= 5; ++d)
        for (const auto& j : enumerate_tuples(3, d)) CHECK(id.image(Chain(Cell::tilded(j), 1)) == Chain(Cell::tilded(j), 1));
    const GraphMap constant(2, 2, {EdgeWord(2, {}), EdgeWord(2, {})});
    for (int k = 1; k <= 4; ++k) CHECK(homology_matrix(constant, k).matrix == IntMatrix(betti_formula(k, 2).get_ui(), betti_formula(k, 2).get_ui()));
    CHECK(homology_matrix(GraphMap::identity(3), 4).matrix == IntMatrix::identity(betti_formula(4, 3).get_ui()));
}

TEST_CASE("tau and the plain swap agree on homology")
{
    for (int k = 1; k <= 5; ++k) {
        const auto a = homology_matrix(tau(), k);
        CHECK(a.matrix == homology_matrix(swap(), k).matrix);
        CHECK(a.column_legend == basis_Bkn(k, 2).generators);
    }
    CHECK(homology_matrix(tau(), 3).matrix.rows() == 3);
}

TEST_CASE("pairing oracle")
{
    CHECK(oracle_pairing(word(1, {1, 1, 1}), 1, {1}) == 3);
    CHECK(oracle_pairing(word(2, {2, 1, -2}), 2, {1, 1}) == -2);
    CHECK(oracle_pairing(word(1, {1}), 2, {2}) == 1);
    CHECK(oracle_pairing(word(1, {-1}), 1, {1}) == -1);
    CHECK(oracle_pairing(word(1, {1}), 2, {1}) == 0);

    for (int length = 0; length <= 4; ++length)
        for (const auto& w : reduced_words(length)) {
            const InducedChainMap f(GraphMap(1, 2, {w}));
            for (int j = 1; j <= 3; ++j) {
                const Chain image = f.image(Chain(t({j}), 1));
                for (const auto& l : enumerate_tuples(2, j))
                    CHECK_MESSAGE(image.coefficient(Cell::tilded(l)) == oracle_pairing(w, j, l),
                                  w.str() << " j=" << j << " L=" << l.str());
            }
        }
}

TEST_CASE("ring homomorphism")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const int m = 1 + static_cast<int>(rng() % 3);
        const InducedChainMap f(random_map(rng, n, m, 3));
        auto pick = [&] {
            while (true) {
                const int d = 1 + static_cast<int>(rng() % 3);
                const auto cells = enumerate_tuples(n, d);
                const EdgeTuple& j = cells[rng() % cells.size()];
                if (!j.is_zero()) return Chain(Cell::tilded(j), 1);
            }
        };
        const Chain x = pick();
        const Chain y = pick();
        const Chain xy = chain_product(x, y);
        CHECK(f.image(xy) == chain_product(f.image(x), f.image(y)));
    }
}

TEST_CASE("images of cycles are cycles")
{
    std::mt19937 rng(5);
    for (int k = 1; k <= 5; ++k)
        for (int n = 1; n <= 3; ++n) {
            const auto basis = basis_Bkn(k, n);
            for (int trial = 0; trial < 3; ++trial) {
                const int m = 1 + static_cast<int>(rng() % 3);
                const InducedChainMap f(random_map(rng, n, m, 3));
                for (const auto& z : basis.elements) CHECK(boundary(f.image(z)).empty());
            }
        }
}

TEST_CASE("homology functoriality")
{
    std::mt19937 rng(3);
    int checked = 0;
    while (checked < 120) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const int m = 1 + static_cast<int>(rng() % 3);
        const int p = 1 + static_cast<int>(rng() % 3);
        const int k = 1 + static_cast<int>(rng() % 4);
        const GraphMap psi = random_map(rng, n, m, 3);
        const GraphMap phi = random_map(rng, m, p, 3);
        const auto lhs = homology_matrix(compose(phi, psi), k).matrix;
        CHECK(lhs == homology_matrix(phi, k).matrix * homology_matrix(psi, k).matrix);
        ++checked;
    }
}

TEST_CASE("memo tables are safe to share")
{
    const auto basis = basis_Bkn(6, 3);
    const InducedChainMap reference(GraphMap(3, 3, {word(3, {2, -3}), word(3, {3, 1, -2}), word(3, {1, 1})}));
    std::vector<Chain> expected;
    for (const auto& z : basis.elements) expected.push_back(reference.image(z));

    const InducedChainMap shared(reference.map());
    std::vector<std::vector<Chain>> results(4);
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < results.size(); ++w)
        workers.emplace_back([&, w] {
            for (const auto& z : basis.elements) results[w].push_back(shared.image(z));
        });
    for (auto& th : workers) th.join();
    for (const auto& r : results) CHECK(r == expected);
}
