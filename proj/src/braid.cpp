#include "fss/braid.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace fss {

BraidWord::BraidWord(int n_, std::vector<BraidLetter> letters_) : n(n_), letters(std::move(letters_))
{
    if (n < 1) throw std::invalid_argument("BraidWord: need at least one strand");
    for (const auto& l : letters) {
        if (l.generator < 1 || l.generator > n - 1)
            throw std::invalid_argument("BraidWord: generator s" + std::to_string(l.generator) + " outside B_" +
                                        std::to_string(n));
        if (l.exponent != 1 && l.exponent != -1) throw std::invalid_argument("BraidWord: exponent must be +1 or -1");
    }
}

BraidWord BraidWord::inverse() const
{
    std::vector<BraidLetter> inv;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) inv.push_back({it->generator, -it->exponent});
    return BraidWord(n, std::move(inv));
}

BraidWord BraidWord::then(const BraidWord& next) const
{
    if (next.n != n) throw std::invalid_argument("BraidWord: strand counts differ");
    std::vector<BraidLetter> all = letters;
    all.insert(all.end(), next.letters.begin(), next.letters.end());
    return BraidWord(n, std::move(all));
}

std::string BraidWord::str() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) os << ' ';
        os << 's' << letters[i].generator << (letters[i].exponent < 0 ? "'" : "");
    }
    return os.str();
}

GraphMap braid_generator_map(int i, int n, int exponent)
{
    if (i < 1 || i > n - 1) throw std::invalid_argument("braid_generator_map: index out of range");
    if (exponent != 1 && exponent != -1) throw std::invalid_argument("braid_generator_map: exponent must be +1 or -1");
    std::vector<EdgeWord> words;
    for (int a = 1; a <= n; ++a) {
        std::vector<Letter> w{{a, 1}};
        if (exponent > 0) {
            if (a == i) w = {{i + 1, 1}};
            if (a == i + 1) w = {{i + 1, 1}, {i, 1}, {i + 1, -1}};
        } else {
            if (a == i) w = {{i, -1}, {i + 1, 1}, {i, 1}};
            if (a == i + 1) w = {{i, 1}};
        }
        words.emplace_back(n, w);
    }
    return GraphMap(n, n, std::move(words));
}

GraphMap braid_graph_map(const BraidWord& beta)
{
    GraphMap total = GraphMap::identity(beta.n);
    for (const auto& l : beta.letters) total = compose(braid_generator_map(l.generator, beta.n, l.exponent), total);
    return total;
}

std::vector<int> braid_permutation(const BraidWord& beta)
{
    std::vector<int> perm(static_cast<std::size_t>(beta.n));
    for (int a = 0; a < beta.n; ++a) perm[static_cast<std::size_t>(a)] = a + 1;
    for (const auto& l : beta.letters)
        for (int& p : perm) {
            if (p == l.generator)
                p = l.generator + 1;
            else if (p == l.generator + 1)
                p = l.generator;
        }
    return perm;
}

IntMatrix symmetric_action_matrix(const std::vector<int>& perm, int k, int n)
{
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("symmetric_action_matrix: wrong length");
    return homology_matrix(GraphMap::permutation(perm), k).matrix;
}

// ---------------------------------------------------------------------------

BraidRepresentation::BraidRepresentation(int k, int n) : k_(k), n_(n), basis_(basis_Bkn(k, n)) {}

IntMatrix BraidRepresentation::generator_matrix(int i, int exponent) const
{
    const auto key = std::make_pair(i, exponent);
    {
        std::shared_lock lock(mutex_);
        auto it = generators_.find(key);
        if (it != generators_.end()) return it->second;
    }
    const InducedChainMap f(braid_generator_map(i, n_, exponent));
    IntMatrix m = homology_matrix(f, basis_, basis_).matrix;
    std::unique_lock lock(mutex_);
    return generators_.emplace(key, std::move(m)).first->second;
}

IntMatrix BraidRepresentation::matrix(const BraidWord& beta) const
{
    if (beta.n != n_) throw std::invalid_argument("BraidRepresentation: word has the wrong strand count");
    IntMatrix m = IntMatrix::identity(basis_.size());
    for (const auto& l : beta.letters) m = generator_matrix(l.generator, l.exponent) * m;
    return m;
}

IntMatrix BraidRepresentation::permutation_matrix(const std::vector<int>& perm) const
{
    {
        std::shared_lock lock(mutex_);
        auto it = permutations_.find(perm);
        if (it != permutations_.end()) return it->second;
    }
    const InducedChainMap f(GraphMap::permutation(perm));
    IntMatrix m = homology_matrix(f, basis_, basis_).matrix;
    std::unique_lock lock(mutex_);
    return permutations_.emplace(perm, std::move(m)).first->second;
}

std::vector<FiltrationBlock> filtration_blocks(const HomologyBasis& basis)
{
    std::vector<FiltrationBlock> out;
    for (const auto& [index, range] : basis.blocks()) out.push_back({index, range.first, range.second});
    return out;
}

namespace {

bool is_block_upper_triangular(const IntMatrix& m, const std::vector<int>& filtration)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (sgn(m(r, c)) && filtration[r] > filtration[c]) return false;
    return true;
}

bool is_unipotent(const IntMatrix& m)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c <= r; ++c)
            if (m(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

bool is_identity_permutation(const std::vector<int>& p)
{
    for (std::size_t a = 0; a < p.size(); ++a)
        if (p[a] != static_cast<int>(a) + 1) return false;
    return true;
}

std::string matrix_key(const IntMatrix& m)
{
    std::string key;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (sgn(m(r, c))) key += std::to_string(r * m.cols() + c) + ":" + m(r, c).get_str() + ",";
    return key;
}

struct Element {
    IntMatrix m;
    IntMatrix inv;
};

}  // namespace

ActionReport braid_matrix(const BraidRepresentation& rep, const BraidWord& beta)
{
    ActionReport out;
    out.matrix = rep.matrix(beta);
    out.permutation = braid_permutation(beta);
    out.pure = is_identity_permutation(out.permutation);
    out.blocks = filtration_blocks(rep.basis());
    out.block_upper_triangular = is_block_upper_triangular(out.matrix, rep.basis().filtration);
    out.unipotent = is_unipotent(out.matrix);
    return out;
}

ActionReport braid_matrix(const BraidWord& beta, int k) { return braid_matrix(BraidRepresentation(k, beta.n), beta); }

int nilpotency_class_bound(int k, int n)
{
    if (k < 1 || n < 1) throw std::invalid_argument("nilpotency_class_bound: k and n must be positive");
    if (k % 2) return std::min((k - 1) / 2, (n - 1) / 2);
    return std::max(0, std::min((k - 2) / 2, (n - 2) / 2));
}

int nontrivial_block_count(int k, int n)
{
    int count = 0;
    for (int l = 1; l <= std::min(n, k); ++l)
        if ((l - k) % 2 == 0) ++count;
    return count;
}

BraidWord pure_generator(int i, int j, int n)
{
    if (i < 1 || i >= j || j > n) throw std::invalid_argument("pure_generator: need 1 <= i < j <= n");
    std::vector<BraidLetter> letters;
    for (int g = j - 1; g > i; --g) letters.push_back({g, 1});
    letters.push_back({i, 1});
    letters.push_back({i, 1});
    for (int g = i + 1; g <= j - 1; ++g) letters.push_back({g, -1});
    return BraidWord(n, std::move(letters));
}

std::vector<BraidWord> pure_generators(int n)
{
    std::vector<BraidWord> out;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) out.push_back(pure_generator(i, j, n));
    return out;
}

std::vector<BraidWord> default_pure_samples(int n, int extra, unsigned seed)
{
    std::vector<BraidWord> out = pure_generators(n);
    if (out.empty()) return out;
    const std::vector<BraidWord> gens = out;
    std::mt19937 rng(seed);
    for (int s = 0; s < extra; ++s) {
        const int length = 2 + static_cast<int>(rng() % 7);
        BraidWord w(n, {});
        for (int t = 0; t < length; ++t) {
            const BraidWord& g = gens[rng() % gens.size()];
            w = w.then(rng() % 2 ? g : g.inverse());
        }
        out.push_back(std::move(w));
    }
    return out;
}

// ---------------------------------------------------------------------------

StructureReport verify_structure(const BraidRepresentation& rep, const std::vector<BraidWord>& samples,
                                 std::optional<int> depth)
{
    StructureReport report;
    const int k = rep.k();
    const int n = rep.n();
    const auto& basis = rep.basis();
    report.class_bound = nilpotency_class_bound(k, n);
    report.commutator_depth = depth.value_or(report.class_bound + 1);
    report.nontrivial_blocks = filtration_blocks(basis).size();

    auto fail = [&](const std::string& why) {
        if (report.ok) {
            report.ok = false;
            report.failure = why;
        }
    };
    if (report.nontrivial_blocks != static_cast<std::size_t>(nontrivial_block_count(k, n)))
        fail("block count " + std::to_string(report.nontrivial_blocks) + " differs from the predicted " +
             std::to_string(nontrivial_block_count(k, n)));

    const auto blocks = filtration_blocks(basis);
    std::vector<Element> pure;
    for (const auto& beta : samples) {
        const ActionReport a = braid_matrix(rep, beta);
        if (!a.block_upper_triangular) fail("not block upper triangular: [" + beta.str() + "]");
        const IntMatrix p = rep.permutation_matrix(a.permutation);
        for (const auto& b : blocks) {
            const std::size_t len = b.end - b.begin;
            if (!(a.matrix.block(b.begin, b.begin, len, len) == p.block(b.begin, b.begin, len, len)))
                fail("diagonal block F_" + std::to_string(b.index) + " differs from the permutation action: [" +
                     beta.str() + "]");
        }
        if (a.pure) {
            if (!a.unipotent) fail("pure braid not unipotent: [" + beta.str() + "]");
            pure.push_back({a.matrix, rep.matrix(beta.inverse())});
        }
    }
    if (!report.ok || pure.empty()) return report;

    const std::size_t size = basis.size();
    const IntMatrix one = IntMatrix::identity(size);
    std::vector<Element> level;
    {
        std::unordered_set<std::string> seen;
        for (const auto& e : pure)
            if (!(e.m == one) && seen.insert(matrix_key(e.m)).second) level.push_back(e);
    }
    if (!level.empty()) report.max_nontrivial_depth = 1;
    if (report.commutator_depth <= 1) {
        report.commutators_checked = pure.size();
        if (!level.empty()) fail("a pure sample acts nontrivially at depth 1");
        return report;
    }
    for (int t = 2; t <= report.commutator_depth && !level.empty(); ++t) {
        std::vector<Element> next;
        std::unordered_set<std::string> seen;
        const bool last = t == report.commutator_depth;
        for (const auto& x : pure)
            for (const auto& c : level) {
                ++report.commutators_checked;
                const IntMatrix xc = x.m * c.m;
                const IntMatrix cx = c.m * x.m;
                if (xc == cx) continue;
                report.max_nontrivial_depth = t;
                if (last) {
                    fail("depth-" + std::to_string(t) + " commutator is not the identity");
                    return report;
                }
                Element comm{xc * (x.inv * c.inv), cx * (c.inv * x.inv)};
                if (seen.insert(matrix_key(comm.m)).second) next.push_back(std::move(comm));
            }
        level = std::move(next);
    }
    return report;
}

StructureReport verify_structure(const std::vector<BraidWord>& samples, int k, int n, std::optional<int> depth)
{
    return verify_structure(BraidRepresentation(k, n), samples, depth);
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> b3_vw_positions(const HomologyBasis& basis)
{
    if (basis.k != 3 || basis.n != 3) throw std::invalid_argument("b3_vw_positions: needs B(3,3)");
    std::vector<std::size_t> out;
    for (const EdgeTuple& j : {EdgeTuple{2, 1, 1}, EdgeTuple{0, 2, 2}, EdgeTuple{2, 0, 2}, EdgeTuple{2, 2, 0}}) {
        auto it = std::find(basis.generators.begin(), basis.generators.end(), j);
        out.push_back(static_cast<std::size_t>(it - basis.generators.begin()));
    }
    return out;
}

IntMatrix restrict_to_vw(const IntMatrix& m, const HomologyBasis& basis)
{
    const auto pos = b3_vw_positions(basis);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (std::find(pos.begin(), pos.end(), r) != pos.end()) continue;
        for (std::size_t c : pos)
            if (sgn(m(r, c))) throw std::invalid_argument("restrict_to_vw: span of v, w_i is not invariant");
    }
    return m.select(pos, pos);
}

long b3_sigma_invariant(const IntMatrix& m)
{
    if (m.rows() != 4 || m.cols() != 4) throw std::invalid_argument("b3_sigma_invariant: expected a 4x4 matrix");
    for (std::size_t r = 1; r < 4; ++r)
        if (sgn(m(r, 0))) throw std::invalid_argument("b3_sigma_invariant: first column is not (det, 0, 0, 0)");
    std::vector<int> perm(3, -1);
    for (std::size_t r = 1; r < 4; ++r)
        for (std::size_t c = 1; c < 4; ++c) {
            const Integer& v = m(r, c);
            if (v == 0) continue;
            if (v != 1 || perm[c - 1] != -1) throw std::invalid_argument("b3_sigma_invariant: lower block is not a permutation");
            perm[c - 1] = static_cast<int>(r) - 1;
        }
    if (std::count(perm.begin(), perm.end(), -1)) throw std::invalid_argument("b3_sigma_invariant: lower block is singular");
    int inversions = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
    const int det = inversions % 2 ? -1 : 1;
    if (m(0, 0) != det) throw std::invalid_argument("b3_sigma_invariant: corner entry is not det of the permutation");
    const Integer sigma = m(0, 1) + m(0, 2) + m(0, 3);
    if (sigma != (det > 0 ? 0 : -2))
        throw std::logic_error("b3_sigma_invariant: Sigma = " + sigma.get_str() + " breaks the parity law");
    return sigma.get_si();
}

}  // namespace fss
