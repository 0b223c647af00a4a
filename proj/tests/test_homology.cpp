#include "fss/homology.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace fss;

namespace {

Cell s(std::initializer_list<int> j) { return Cell::untilded(EdgeTuple(j)); }
Cell t(std::initializer_list<int> j) { return Cell::tilded(EdgeTuple(j)); }

void check_smith(const IntMatrix& a)
{
    const SmithForm f = smith_normal_form(a);
    CHECK(f.U * a * f.V == f.diagonal_matrix());
    CHECK(f.U * f.Uinv == IntMatrix::identity(a.rows()));
    CHECK(f.V * f.Vinv == IntMatrix::identity(a.cols()));
    for (std::size_t i = 0; i < f.diagonal.size(); ++i) {
        CHECK(sgn(f.diagonal[i]) > 0);
        if (i) CHECK(mpz_divisible_p(f.diagonal[i].get_mpz_t(), f.diagonal[i - 1].get_mpz_t()));
    }
    CHECK(f.rank() == rank(a));
    CHECK(f.diagonal == smith_invariants(SparseMatrix::from_dense(a)));
}

}  // namespace

TEST_CASE("Smith normal form examples")
{
    CHECK(smith_normal_form(IntMatrix{{2, 4}, {6, 8}}).diagonal == std::vector<Integer>{2, 4});
    CHECK(smith_normal_form(IntMatrix::identity(3)).diagonal == std::vector<Integer>{1, 1, 1});
    CHECK(smith_normal_form(IntMatrix(2, 3)).diagonal.empty());
    CHECK(smith_normal_form(IntMatrix(0, 0)).diagonal.empty());
    CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).diagonal == std::vector<Integer>{1, 6});
    check_smith(IntMatrix{{2, 4}, {6, 8}});
    check_smith(IntMatrix{{2, 0}, {0, 3}});
}

TEST_CASE("Smith normal form certificates on random matrices")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + rng() % 6;
        const std::size_t c = 1 + rng() % 6;
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a(i, j) = (rng() % 3 == 0) ? long(rng() % 13) - 6 : 0L;
        check_smith(a);
    }
    // Rank-deficient product forces nontrivial invariant factors.
    const IntMatrix p = IntMatrix{{2, 0, 1}, {0, 4, 2}} * IntMatrix{{3, 1}, {1, 0}, {0, 6}};
    check_smith(p);
}

TEST_CASE("Betti numbers from the closed forms")
{
    CHECK(betti_formula(3, 3) == 7);
    CHECK(betti_formula(5, 2) == 4);
    CHECK(betti_formula(20, 10) == 5911762);
    CHECK_THROWS_AS(betti_formula(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(betti_formula(2, 0), std::invalid_argument);

    const auto one = betti_genfun(1, 6);
    CHECK(std::vector<Integer>(one.begin() + 1, one.end()) == std::vector<Integer>{1, 0, 1, 0, 1, 0});
    CHECK(betti_genfun(4, 7)[7] == 71);
    CHECK(betti_genfun(2, 1)[1] == 2);
    CHECK(betti_genfun(6, 10)[10] == 1791);
    for (int n = 1; n <= 10; ++n) {
        const auto series = betti_genfun(n, 20);
        CHECK(series[0] == 0);
        for (int k = 1; k <= 20; ++k) CHECK(series[static_cast<std::size_t>(k)] == betti_formula(k, n));
    }
}

TEST_CASE("Euler characteristics")
{
    for (int n = 1; n <= 4; ++n) CHECK(euler_characteristic(ComplexLabel::based(1, n)) == 1);
    CHECK(euler_characteristic(ComplexLabel::based(2, 2)) == -1);
    CHECK(euler_characteristic(ComplexLabel::unbased(2, 2)) == 0);
    for (int k = 1; k <= 7; ++k)
        for (int n = 1; n <= 5; ++n)
            for (const auto& label : {ComplexLabel::based(k, n), ComplexLabel::unbased(k, n)})
                CHECK(euler_characteristic(label) == build_complex(label).euler_characteristic());
    CHECK(euler_characteristic(ComplexLabel::cube(4)) == 0);
    CHECK(euler_characteristic(ComplexLabel::sub_l({1, 3})) == 0);
}

TEST_CASE("homology examples")
{
    const auto h31 = homology(build_complex(ComplexLabel::unbased(3, 1)), true);
    CHECK(h31.support() == std::vector<int>{3});
    CHECK(h31.rank(3) == 1);
    CHECK(h31.torsion_free());

    const auto h43 = homology(build_complex(ComplexLabel::unbased(4, 3)), true);
    CHECK(h43.support() == std::vector<int>{3, 4});
    CHECK(h43.rank(3) == 7);
    CHECK(h43.rank(4) == 8);

    const auto h42 = homology(build_complex(ComplexLabel::unbased(4, 2)), true);
    CHECK(h42.rank(3) == 3);
    CHECK(h42.rank(4) == 2);

    for (int n = 1; n <= 4; ++n) {
        const auto b = homology(build_complex(ComplexLabel::based(2, n)), true);
        CHECK(b.support() == std::vector<int>{1});
        CHECK(b.rank(1) == static_cast<std::size_t>(n));
    }
    const auto h13 = homology(build_complex(ComplexLabel::unbased(1, 3)), true);
    CHECK(h13.rank(0) == 0);
    CHECK(h13.rank(1) == 3);
    CHECK(homology(build_complex(ComplexLabel::unbased(1, 3)), false).rank(0) == 1);
}

TEST_CASE("Theorem 1 conformance for small parameters")
{
    for (int k = 2; k <= 6; ++k)
        for (int n = 1; n <= 4; ++n) {
            const auto u = homology(build_complex(ComplexLabel::unbased(k, n)), true);
            CHECK(u.torsion_free());
            for (int d = 0; d <= k; ++d) {
                Integer expected = 0;
                if (d == k) expected = betti_formula(k, n);
                if (d == k - 1) expected = betti_formula(k - 1, n);
                CHECK(Integer(static_cast<unsigned long>(u.rank(d))) == expected);
            }
            const auto b = homology(build_complex(ComplexLabel::based(k, n)), true);
            CHECK(b.torsion_free());
            for (int d = 0; d < k; ++d)
                CHECK(Integer(static_cast<unsigned long>(b.rank(d))) == (d == k - 1 ? betti_formula(k - 1, n) : 0));
        }
}

TEST_CASE("cube complexes are acyclic")
{
    for (int m = 1; m <= 8; ++m) {
        const auto h = homology(build_complex(ComplexLabel::cube(m)), false);
        CHECK(h.support().empty());
    }
}

TEST_CASE("truncated cube bases")
{
    const auto b21 = cube_truncated_basis(2, 1);
    REQUIRE(b21.size() == 1);
    CHECK(b21[0] == Chain(Cell::cube_face({1, 0}), 1) + Chain(Cell::cube_face({0, 1}), 1));
    CHECK(cube_truncated_basis(3, 1).size() == 2);
    CHECK(cube_truncated_basis(5, 3).size() == 4);
    CHECK_THROWS_AS(cube_truncated_basis(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(cube_truncated_basis(3, 0), std::invalid_argument);

    // V_j together with dV_{j+1} is a Z-basis of the j-chains.
    for (int m = 2; m <= 8; ++m) {
        const auto cube = build_complex(ComplexLabel::cube(m));
        for (int j = 1; j <= m - 1; ++j) {
            const auto upper = cube_truncated_basis(m, j);
            CHECK(Integer(static_cast<unsigned long>(upper.size())) == oracle::choose(m - 1, j));
            std::vector<std::vector<Integer>> cols;
            for (const auto& cell : cube.cells(j))
                if (cell.tuple.at(1) == 1) cols.push_back(cube.to_vector(Chain(cell, 1), j));
            for (const auto& c : upper) cols.push_back(cube.to_vector(c, j));
            REQUIRE(cols.size() == cube.count(j));
            IntMatrix square(cols.size(), cols.size());
            for (std::size_t c = 0; c < cols.size(); ++c)
                for (std::size_t r = 0; r < cols.size(); ++r) square(r, c) = cols[c][r];
            CHECK(abs(square.determinant()) == 1);
        }
    }
}

TEST_CASE("the basis B(k,n)")
{
    const auto b22 = basis_Bkn(2, 2);
    REQUIRE(b22.size() == 1);
    CHECK(b22.generators[0] == EdgeTuple{2, 1});
    CHECK(b22.elements[0] == Chain(t({1, 1}), -1));

    const auto b33 = basis_Bkn(3, 3);
    std::vector<EdgeTuple> gens = b33.generators;
    std::sort(gens.begin(), gens.end());
    CHECK(gens == std::vector<EdgeTuple>{{0, 0, 4}, {0, 2, 2}, {0, 4, 0}, {2, 0, 2}, {2, 1, 1}, {2, 2, 0}, {4, 0, 0}});
    // ascending filtration: (2,1,1) has index 0, the rest index 2
    CHECK(b33.generators[0] == EdgeTuple{2, 1, 1});
    CHECK(b33.filtration == std::vector<int>{0, 2, 2, 2, 2, 2, 2});
    CHECK(b33.blocks().size() == 2);

    for (int n = 1; n <= 5; ++n) {
        const auto b1 = basis_Bkn(1, n);
        CHECK(b1.size() == static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < b1.size(); ++i) {
            CHECK(b1.generators[i].norm() == 2);
            CHECK(b1.elements[i].size() == 1);
            CHECK(b1.elements[i].terms().begin()->second == -1);
        }
    }
}

TEST_CASE("B(k,n) size, cycles and independence")
{
    for (int k = 1; k <= 12; ++k)
        for (int n = 1; n <= 6; ++n) {
            const auto b = basis_Bkn(k, n);
            CHECK(static_cast<long>(b.size()) == oracle::compositions_first_odd(k, n));
            CHECK(Integer(static_cast<unsigned long>(b.size())) == betti_formula(k, n));
            if (k <= 7 && n <= 4) {
                const auto cx = build_complex(ComplexLabel::unbased(k, n));
                SparseMatrix m(cx.count(k), b.size());
                for (std::size_t e = 0; e < b.size(); ++e) {
                    CHECK(boundary(b.elements[e]).empty());
                    const auto v = cx.to_vector(b.elements[e], k);
                    std::vector<SparseMatrix::Entry> col;
                    for (std::size_t r = 0; r < v.size(); ++r)
                        if (sgn(v[r])) col.emplace_back(r, v[r]);
                    m.set_column(e, std::move(col));
                }
                CHECK(rank(m) == b.size());
            }
        }
}

TEST_CASE("coordinates in B(k,n)")
{
    const auto b22 = basis_Bkn(2, 2);
    CHECK(coordinates_in_basis(Chain(t({1, 1}), -1), b22) == std::vector<Integer>{1});
    CHECK(coordinates_in_basis(Chain(), b22) == std::vector<Integer>{0});

    const auto b33 = basis_Bkn(3, 3);
    const auto coords = coordinates_in_basis(Chain(t({3, 0, 0}), 1), b33);
    for (std::size_t e = 0; e < b33.size(); ++e)
        CHECK(coords[e] == (b33.generators[e] == EdgeTuple{4, 0, 0} ? -1 : 0));

    CHECK_THROWS_AS(coordinates_in_basis(Chain(t({2, 0, 1}), 1), b33), NotACycleError);
    CHECK_THROWS_AS(coordinates_in_basis(Chain(s({3, 0, 0}), 1), b33), std::invalid_argument);

    // Random integer combinations round-trip.
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 5);
        const int n = 1 + static_cast<int>(rng() % 4);
        const auto b = basis_Bkn(k, n);
        std::vector<Integer> want(b.size());
        Chain z;
        for (std::size_t e = 0; e < b.size(); ++e) {
            want[e] = static_cast<long>(rng() % 9) - 4;
            z += want[e] * b.elements[e];
        }
        CHECK(coordinates_in_basis(z, b) == want);
    }
}

TEST_CASE("homology presentations")
{
    const auto cx = build_complex(ComplexLabel::unbased(3, 3));
    const HomologyPresentation h3(cx, 3);
    const HomologyPresentation h2(cx, 2);
    CHECK(h3.free_rank() == 7);
    CHECK(h2.free_rank() == 3);
    CHECK(h3.torsion().empty());
    for (std::size_t j = 0; j < h3.free_rank(); ++j) {
        auto coords = h3.free_coordinates(h3.generator(j));
        for (std::size_t i = 0; i < coords.size(); ++i) CHECK(coords[i] == (i == j ? 1 : 0));
    }
    CHECK_THROWS_AS((void)h3.free_coordinates(Chain(t({2, 1, 0}), 1)), std::invalid_argument);
}

TEST_CASE("maps of Theorem 1 on homology")
{
    auto identity = [](const Chain& c) { return c; };
    for (int k = 2; k <= 6; ++k)
        for (int n = 1; n <= 4; ++n) {
            const auto based_k = build_complex(ComplexLabel::based(k, n));
            const auto based_k1 = build_complex(ComplexLabel::based(k + 1, n));
            const auto unbased_k = build_complex(ComplexLabel::unbased(k, n));
            const auto unbased_k1 = build_complex(ComplexLabel::unbased(k + 1, n));

            // i: exp_k(G,v) -> exp_k(G) on H_{k-1}
            const HomologyPresentation bk(based_k, k - 1), uk_low(unbased_k, k - 1);
            const IntMatrix i_star = induced_on_homology(bk, uk_low, identity);
            REQUIRE(i_star.square());
            CHECK(abs(i_star.determinant()) == 1);

            // U{v}: exp_k(G) -> exp_{k+1}(G,v) on H_k
            const HomologyPresentation uk(unbased_k, k), bk1(based_k1, k);
            const IntMatrix cup = induced_on_homology(uk, bk1, erase_tilde);
            REQUIRE(cup.square());
            CHECK(abs(cup.determinant()) == 1);

            // inclusion = 2 (i o U{v})_* on H_k
            const HomologyPresentation uk1(unbased_k1, k);
            const IntMatrix incl = induced_on_homology(uk, uk1, identity);
            const IntMatrix composite = induced_on_homology(uk, uk1, erase_tilde);
            CHECK(incl == Integer(2) * composite);
        }
}
