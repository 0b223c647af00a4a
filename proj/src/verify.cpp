#include "fss/verify.hpp"

#include "fss/braid.hpp"
#include "fss/chainring.hpp"
#include "fss/homology.hpp"
#include "fss/maps.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace fss {

bool VerifyReport::passed() const
{
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

std::string VerifyReport::json() const
{
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["passed"] = passed();
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["suite"] = c.suite;
        e["name"] = c.name;
        e["passed"] = c.passed;
        e["cases"] = c.cases;
        if (!c.passed) e["witness"] = c.witness;
        list.push_back(std::move(e));
    }
    j["checks"] = std::move(list);
    return j.dump(2);
}

const std::vector<std::string>& verify_suites()
{
    static const std::vector<std::string> names{"all", "complex", "homology", "ring", "maps", "braid"};
    return names;
}

namespace {

// A check body counts its cases and returns a witness string on failure.
struct Probe {
    long cases = 0;
    std::string witness;

    bool expect(bool ok, const std::function<std::string()>& describe)
    {
        ++cases;
        if (!ok && witness.empty()) witness = describe();
        return ok;
    }
};

class Runner {
public:
    explicit Runner(VerifyReport& report) : report_(report) {}

    void run(const std::string& suite, const std::string& name, const std::function<void(Probe&)>& body)
    {
        CheckResult r;
        r.suite = suite;
        r.name = name;
        Probe p;
        const auto start = std::chrono::steady_clock::now();
        try {
            body(p);
        } catch (const std::exception& e) {
            if (p.witness.empty()) p.witness = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.cases = p.cases;
        r.passed = p.witness.empty();
        r.witness = p.witness;
        report_.checks.push_back(std::move(r));
    }

private:
    VerifyReport& report_;
};

std::string kn(int k, int n) { return "(k,n)=(" + std::to_string(k) + "," + std::to_string(n) + ")"; }

long brute_shuffles(int m, int r)
{
    long total = 0;
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
        if (__builtin_popcountl(mask) != r) continue;
        int inversions = 0;
        int seen_out = 0;
        for (int i = 0; i < m; ++i) {
            if (mask >> i & 1)
                inversions += seen_out;
            else
                ++seen_out;
        }
        total += inversions % 2 ? -1 : 1;
    }
    return total;
}

void complex_suite(Runner& run)
{
    run.run("complex", "boundary squares to zero", [](Probe& p) {
        for (int k = 1; k <= 8; ++k)
            for (int n = 1; n <= 5; ++n)
                for (const auto& label : {ComplexLabel::based(k, n), ComplexLabel::unbased(k, n)}) {
                    const auto cx = build_complex(label);
                    for (int d = 2; d <= cx.top_dimension(); ++d) {
                        const IntMatrix prod = cx.boundary_matrix(d - 1).to_dense() * cx.boundary_matrix(d).to_dense();
                        p.expect(prod == IntMatrix(prod.rows(), prod.cols()),
                                 [&] { return label.str() + " dim " + std::to_string(d); });
                    }
                }
    });
    run.run("complex", "cube complexes are acyclic", [](Probe& p) {
        for (int m = 1; m <= 8; ++m) {
            const auto h = homology(build_complex(ComplexLabel::cube(m)), false);
            p.expect(h.support().empty(), [&] { return "Cube(" + std::to_string(m) + ")"; });
        }
    });
    run.run("complex", "cell census", [](Probe& p) {
        for (int k = 1; k <= 8; ++k)
            for (int n = 1; n <= 5; ++n)
                for (const auto& label : {ComplexLabel::based(k, n), ComplexLabel::unbased(k, n)}) {
                    const auto cx = build_complex(label);
                    for (int d = 0; d <= cx.top_dimension(); ++d)
                        p.expect(Integer(static_cast<unsigned long>(cx.count(d))) == census(label, d),
                                 [&] { return label.str() + " dim " + std::to_string(d); });
                }
    });
}

void homology_suite(Runner& run)
{
    run.run("homology", "formula and generating function agree on Table 1", [](Probe& p) {
        for (int n = 1; n <= 10; ++n) {
            const auto g = betti_genfun(n, 20);
            for (int k = 1; k <= 20; ++k) p.expect(g[static_cast<std::size_t>(k)] == betti_formula(k, n), [&] { return kn(k, n); });
        }
    });
    run.run("homology", "complex homology matches Table 1", [](Probe& p) {
        std::vector<std::pair<int, int>> cells;
        for (int k = 1; k <= 8; ++k)
            for (int n = 1; n <= 5; ++n) cells.emplace_back(k, n);
        cells.emplace_back(10, 3);
        for (const auto& [k, n] : cells) {
            const auto h = homology(build_complex(ComplexLabel::unbased(k, n)), true);
            p.expect(Integer(static_cast<unsigned long>(h.rank(k))) == betti_formula(k, n), [&] { return kn(k, n) + " top rank"; });
            if (k >= 2)
                p.expect(Integer(static_cast<unsigned long>(h.rank(k - 1))) == betti_formula(k - 1, n),
                         [&] { return kn(k, n) + " rank below top"; });
            p.expect(h.torsion_free(), [&] { return kn(k, n) + " torsion"; });
            for (int d : h.support()) p.expect(d == k || d == k - 1, [&] { return kn(k, n) + " dim " + std::to_string(d); });
        }
    });
    run.run("homology", "based complexes are reduced-exact below k-1", [](Probe& p) {
        for (int k = 1; k <= 8; ++k)
            for (int n = 1; n <= 5; ++n) {
                const auto h = homology(build_complex(ComplexLabel::based(k, n)), true);
                for (int d : h.support()) p.expect(d == k - 1, [&] { return "Based" + kn(k, n) + " dim " + std::to_string(d); });
            }
    });
    run.run("homology", "truncated cube ranks", [](Probe& p) {
        for (int m = 2; m <= 8; ++m)
            for (int j = 1; j <= m - 1; ++j)
                p.expect(Integer(static_cast<unsigned long>(cube_truncated_basis(m, j).size())) == binomial(m - 1, j),
                         [&] { return "m=" + std::to_string(m) + " j=" + std::to_string(j); });
    });
    run.run("homology", "basis B(k,n) has b_k elements", [](Probe& p) {
        for (int k = 1; k <= 12; ++k)
            for (int n = 1; n <= 6; ++n)
                p.expect(Integer(static_cast<unsigned long>(basis_Bkn(k, n).size())) == betti_formula(k, n),
                         [&] { return kn(k, n); });
    });
}

void ring_suite(Runner& run)
{
    run.run("ring", "Pascal recurrence and symmetry", [](Probe& p) {
        for (int m = 1; m <= 64; ++m)
            for (int r = 0; r <= m; ++r) {
                p.expect(signed_binomial(m, r) == signed_binomial(m, m - r), [&] { return "symmetry m=" + std::to_string(m); });
                if (r >= 1 && r <= m - 1) {
                    const Integer rhs = signed_binomial(m - 1, r - 1) + (r % 2 ? -1 : 1) * signed_binomial(m - 1, r);
                    p.expect(signed_binomial(m, r) == rhs,
                             [&] { return "recurrence m=" + std::to_string(m) + " r=" + std::to_string(r); });
                }
            }
    });
    run.run("ring", "signed shuffle counts", [](Probe& p) {
        for (int m = 0; m <= 10; ++m)
            for (int r = 0; r <= m; ++r)
                p.expect(signed_binomial(m, r) == brute_shuffles(m, r),
                         [&] { return "m=" + std::to_string(m) + " r=" + std::to_string(r); });
    });
    run.run("ring", "associativity", [](Probe& p) {
        std::mt19937 rng(1);
        auto pick = [&](int n) {
            while (true) {
                std::vector<int> e(static_cast<std::size_t>(n));
                for (auto& v : e) v = static_cast<int>(rng() % 4);
                EdgeTuple j(e);
                if (!j.is_zero() && j.norm() <= 6) return RingElement(Cell::tilded(j), 1);
            }
        };
        for (int trial = 0; trial < 500; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 4);
            const auto a = pick(n), b = pick(n), c = pick(n);
            p.expect(chain_product(chain_product(a, b), c) == chain_product(a, chain_product(b, c)),
                     [&] { return to_string(a) + " * " + to_string(b) + " * " + to_string(c); });
        }
    });
    run.run("ring", "triple product identity", [](Probe& p) {
        for (int r = 0; r <= 8; ++r)
            for (int s = 0; s <= 8; ++s)
                for (int t = 0; t <= 8; ++t)
                    p.expect(signed_binomial(r + s, r) * signed_binomial(r + s + t, r + s) ==
                                 signed_binomial(r + s + t, r) * signed_binomial(s + t, s),
                             [&] { return std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t); });
    });
    run.run("ring", "generated over Q", [](Probe& p) {
        const RingElement one(basic_cell(1, 1, 1), 1);
        const RingElement two(basic_cell(2, 1, 1), 1);
        RingElement power = two;
        Integer factorial = 1;
        for (int l = 1; l <= 5; ++l) {
            factorial *= l;
            p.expect(power == RingElement(basic_cell(2 * l, 1, 1), Rational(factorial)), [&] { return "even l=" + std::to_string(l); });
            p.expect(chain_product(one, power) == RingElement(basic_cell(2 * l + 1, 1, 1), Rational(factorial)),
                     [&] { return "odd l=" + std::to_string(l); });
            power = chain_product(power, two);
        }
    });
}

EdgeWord random_word(std::mt19937& rng, int m, int max_length)
{
    std::vector<Letter> ls;
    const int length = static_cast<int>(rng() % static_cast<unsigned>(max_length + 1));
    for (int i = 0; i < length; ++i) ls.push_back({1 + static_cast<int>(rng() % static_cast<unsigned>(m)), rng() % 2 ? 1 : -1});
    return EdgeWord(m, ls);
}

void maps_suite(Runner& run)
{
    run.run("maps", "degree d circle maps", [](Probe& p) {
        for (int d = -2; d <= 3; ++d) {
            std::vector<Letter> ls(static_cast<std::size_t>(d < 0 ? -d : d), Letter{1, d < 0 ? -1 : 1});
            const GraphMap phi(1, 1, {EdgeWord(1, ls)});
            Integer power = 1;
            for (int l = 1; l <= 4; ++l) {
                power *= d;
                p.expect(homology_matrix(phi, 2 * l - 1).matrix == IntMatrix{{power.get_si()}},
                         [&] { return "d=" + std::to_string(d) + " l=" + std::to_string(l); });
            }
        }
    });
    const GraphMap tau = braid_generator_map(1, 2, 1);
    const GraphMap bar = GraphMap::permutation({2, 1});
    run.run("maps", "tau chain images", [&](Probe& p) {
        const InducedChainMap f(tau), g(bar);
        for (int d = 1; d <= 6; ++d)
            for (int l = 0; l <= d; ++l) {
                const int m = d - l;
                const Chain c(Cell::tilded(EdgeTuple{l, m}), 1);
                Chain expected = g.image(c);
                if (l % 2 == 0 && m % 2 == 0 && m > 0) expected.add(Cell::tilded(EdgeTuple{m - 1, l + 1}), -2);
                p.expect(f.image(c) == expected, [&] { return c.terms().begin()->first.str(); });
            }
    });
    run.run("maps", "tau and the swap agree on homology", [&](Probe& p) {
        for (int k = 1; k <= 5; ++k)
            p.expect(homology_matrix(tau, k).matrix == homology_matrix(bar, k).matrix, [&] { return "k=" + std::to_string(k); });
    });
    run.run("maps", "pairing oracle", [](Probe& p) {
        std::vector<std::vector<Letter>> words{{}};
        std::vector<std::vector<Letter>> frontier{{}};
        for (int len = 1; len <= 4; ++len) {
            std::vector<std::vector<Letter>> next;
            for (const auto& w : frontier)
                for (Letter l : {Letter{1, 1}, Letter{1, -1}, Letter{2, 1}, Letter{2, -1}})
                    if (w.empty() || !(w.back() == l.inverse())) {
                        next.push_back(w);
                        next.back().push_back(l);
                    }
            words.insert(words.end(), next.begin(), next.end());
            frontier = std::move(next);
        }
        for (const auto& ls : words) {
            const EdgeWord w(2, ls);
            const InducedChainMap f(GraphMap(1, 2, {w}));
            for (int j = 1; j <= 3; ++j) {
                const Chain image = f.image(Chain(Cell::tilded(EdgeTuple{j}), 1));
                for (const auto& l : enumerate_tuples(2, j))
                    p.expect(image.coefficient(Cell::tilded(l)) == oracle_pairing(w, j, l),
                             [&] { return w.str() + " j=" + std::to_string(j) + " L=" + l.str(); });
            }
        }
    });
    run.run("maps", "homology functoriality", [](Probe& p) {
        std::mt19937 rng(2);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 3), m = 1 + static_cast<int>(rng() % 3), q = 1 + static_cast<int>(rng() % 3);
            const int k = 1 + static_cast<int>(rng() % 4);
            std::vector<EdgeWord> a, b;
            for (int i = 0; i < n; ++i) a.push_back(random_word(rng, m, 3));
            for (int i = 0; i < m; ++i) b.push_back(random_word(rng, q, 3));
            const GraphMap psi(n, m, a), phi(m, q, b);
            p.expect(homology_matrix(compose(phi, psi), k).matrix == homology_matrix(phi, k).matrix * homology_matrix(psi, k).matrix,
                     [&] { return "trial " + std::to_string(trial); });
        }
    });
}

BraidWord letters(int n, std::initializer_list<int> gs)
{
    std::vector<BraidLetter> ls;
    for (int g : gs) ls.push_back({g > 0 ? g : -g, g > 0 ? 1 : -1});
    return BraidWord(n, ls);
}

void braid_suite(Runner& run)
{
    run.run("braid", "braid relations", [](Probe& p) {
        for (int n = 2; n <= 4; ++n)
            for (int k = 1; k <= 4; ++k) {
                const BraidRepresentation rep(k, n);
                for (int i = 1; i + 1 < n; ++i)
                    p.expect(rep.matrix(letters(n, {i, i + 1, i})) == rep.matrix(letters(n, {i + 1, i, i + 1})),
                             [&] { return kn(k, n) + " i=" + std::to_string(i); });
                for (int i = 1; i < n; ++i)
                    for (int j = i + 2; j < n; ++j)
                        p.expect(rep.matrix(letters(n, {i, j})) == rep.matrix(letters(n, {j, i})), [&] { return kn(k, n); });
            }
    });
    run.run("braid", "the B_3 matrices on V + W", [](Probe& p) {
        const BraidRepresentation rep(3, 3);
        const IntMatrix expected[] = {
            {{-1, -2, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}},
            {{-1, 0, -2, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}},
            {{-1, 0, -2, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}},
            {{-1, 0, 0, -2}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}},
        };
        const BraidWord words[] = {letters(3, {1}), letters(3, {2}), letters(3, {-1}), letters(3, {-2})};
        for (int i = 0; i < 4; ++i)
            p.expect(restrict_to_vw(rep.matrix(words[i]), rep.basis()) == expected[i], [&] { return words[i].str(); });
    });
    run.run("braid", "Sigma invariant", [](Probe& p) {
        const BraidRepresentation rep(3, 3);
        std::mt19937 rng(3);
        for (int trial = 0; trial < 500; ++trial) {
            std::vector<BraidLetter> ls;
            const int len = static_cast<int>(rng() % 13);
            for (int i = 0; i < len; ++i) ls.push_back({1 + static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1});
            const BraidWord b(3, ls);
            try {
                (void)b3_sigma_invariant(restrict_to_vw(rep.matrix(b), rep.basis()));
                p.expect(true, [] { return std::string(); });
            } catch (const std::exception& e) {
                p.expect(false, [&] { return b.str() + ": " + e.what(); });
            }
        }
    });
    run.run("braid", "P_2 acts trivially", [](Probe& p) {
        for (int k = 1; k <= 6; ++k) {
            const auto m = braid_matrix(letters(2, {1, 1}), k).matrix;
            p.expect(m == IntMatrix::identity(m.rows()), [&] { return "k=" + std::to_string(k); });
        }
    });
    run.run("braid", "filtration and diagonal blocks", [](Probe& p) {
        for (int n = 2; n <= 5; ++n)
            for (int k = 1; k <= 5; ++k) {
                std::vector<BraidWord> gens;
                for (int i = 1; i < n; ++i) {
                    gens.push_back(letters(n, {i}));
                    gens.push_back(letters(n, {-i}));
                }
                const auto r = verify_structure(gens, k, n, 1);
                p.expect(r.ok, [&] { return kn(k, n) + ": " + r.failure; });
            }
    });
    run.run("braid", "iterated commutators of pure braids", [](Probe& p) {
        for (const auto& [k, n] : {std::pair{3, 3}, std::pair{4, 4}, std::pair{5, 4}, std::pair{5, 5}}) {
            const auto r = verify_structure(default_pure_samples(n, 6), k, n);
            p.expect(r.ok, [&] { return kn(k, n) + ": " + r.failure; });
        }
    });
    run.run("braid", "P_3 has rank two on V + W", [](Probe& p) {
        const BraidRepresentation rep(3, 3);
        const IntMatrix a = restrict_to_vw(rep.matrix(letters(3, {1, 1})), rep.basis());
        const IntMatrix b = restrict_to_vw(rep.matrix(letters(3, {2, 2})), rep.basis());
        p.expect(a * b == b * a, [] { return std::string("T_1^2 and T_2^2 do not commute"); });
        IntMatrix v(2, 3);
        for (std::size_t c = 0; c < 3; ++c) {
            v(0, c) = a(0, c + 1);
            v(1, c) = b(0, c + 1);
        }
        p.expect(rank(v) == 2, [] { return std::string("p vectors are dependent"); });
    });
}

}  // namespace

VerifyReport run_verify(const std::string& suite)
{
    const auto& names = verify_suites();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw std::invalid_argument("unknown suite '" + suite + "'");
    VerifyReport report;
    report.suite = suite;
    Runner run(report);
    const bool all = suite == "all";
    if (all || suite == "complex") complex_suite(run);
    if (all || suite == "homology") homology_suite(run);
    if (all || suite == "ring") ring_suite(run);
    if (all || suite == "maps") maps_suite(run);
    if (all || suite == "braid") braid_suite(run);
    return report;
}

}  // namespace fss
