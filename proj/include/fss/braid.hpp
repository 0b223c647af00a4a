#pragma once

// The Artin action of B_n on H_k(exp_k Gamma_n) in the basis B(k,n).
//
// Word convention: a braid word is read left to right, first letter applied
// first. Matrices act on column vectors, so the matrix of s_1 s_2 ... s_r is
// M(s_r) ... M(s_2) M(s_1), and its strand permutation is pi_r o ... o pi_1.

#include "fss/maps.hpp"

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace fss {

struct BraidLetter {
    int generator = 1;  // tau_i, 1 <= i <= n-1
    int exponent = 1;   // +1 or -1

    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
    int n = 2;
    std::vector<BraidLetter> letters;

    BraidWord() = default;
    /// Validates generator indices and exponents; no normalization.
    BraidWord(int n, std::vector<BraidLetter> letters);

    [[nodiscard]] BraidWord inverse() const;
    [[nodiscard]] BraidWord then(const BraidWord& next) const;
    /// Tokens as in the braid file format: s1, s2' for the inverse.
    [[nodiscard]] std::string str() const;
};

/// tau_i (exponent +1): e_i -> e_{i+1}, e_{i+1} -> e_{i+1} e_i E_{i+1};
/// exponent -1: e_i -> E_i e_{i+1} e_i, e_{i+1} -> e_i.
GraphMap braid_generator_map(int i, int n, int exponent);

/// The graph map of a whole word, composed generator by generator.
GraphMap braid_graph_map(const BraidWord& beta);

/// perm[a-1] is the image of strand a.
std::vector<int> braid_permutation(const BraidWord& beta);

/// The S_n action on H_k by permuting edges, e_a -> e_{perm[a-1]}.
IntMatrix symmetric_action_matrix(const std::vector<int>& perm, int k, int n);

/// Memoized generator matrices on H_k(exp_k Gamma_n); shares one basis.
class BraidRepresentation {
public:
    BraidRepresentation(int k, int n);

    [[nodiscard]] int k() const { return k_; }
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const HomologyBasis& basis() const { return basis_; }

    [[nodiscard]] IntMatrix generator_matrix(int i, int exponent) const;
    [[nodiscard]] IntMatrix matrix(const BraidWord& beta) const;
    [[nodiscard]] IntMatrix permutation_matrix(const std::vector<int>& perm) const;

private:
    int k_;
    int n_;
    HomologyBasis basis_;
    mutable std::shared_mutex mutex_;
    mutable std::map<std::pair<int, int>, IntMatrix> generators_;
    mutable std::map<std::vector<int>, IntMatrix> permutations_;
};

struct FiltrationBlock {
    int index = 0;          // filtration index j
    std::size_t begin = 0;  // positions [begin, end) in the ordered basis
    std::size_t end = 0;
};

std::vector<FiltrationBlock> filtration_blocks(const HomologyBasis& basis);

struct ActionReport {
    IntMatrix matrix;
    std::vector<int> permutation;
    bool pure = false;
    std::vector<FiltrationBlock> blocks;
    bool block_upper_triangular = false;
    bool unipotent = false;  // upper triangular with unit diagonal
};

ActionReport braid_matrix(const BraidRepresentation& rep, const BraidWord& beta);
ActionReport braid_matrix(const BraidWord& beta, int k);

/// min{(k-1)/2, floor((n-1)/2)} for odd k, min{(k-2)/2, floor((n-2)/2)} for even k.
int nilpotency_class_bound(int k, int n);

/// #{1 <= l <= min(n,k) : l = k mod 2}, the number of nonzero quotients F_j / F_{j-1}.
int nontrivial_block_count(int k, int n);

/// The standard generators A_ij (1 <= i < j <= n) of the pure braid group.
BraidWord pure_generator(int i, int j, int n);
std::vector<BraidWord> pure_generators(int n);
/// The A_ij followed by `extra` random products of length <= 8 in the A_ij
/// and their inverses, drawn from a fixed seed.
std::vector<BraidWord> default_pure_samples(int n, int extra, unsigned seed = 1);

struct StructureReport {
    bool ok = true;
    std::string failure;  // first violated assertion with a witness
    int class_bound = 0;
    int commutator_depth = 0;       // depth checked
    int max_nontrivial_depth = 0;   // largest depth with a non-identity commutator seen
    std::size_t nontrivial_blocks = 0;
    std::size_t commutators_checked = 0;
};

/// Checks block upper-triangularity, agreement of the diagonal blocks with
/// the permutation action, unipotence of pure braids, and vanishing of the
/// left-normed commutators [x_d, [..., [x_2, x_1]]] of the pure samples at
/// depth d = `depth` (default class bound + 1).
StructureReport verify_structure(const std::vector<BraidWord>& samples, int k, int n,
                                 std::optional<int> depth = std::nullopt);
StructureReport verify_structure(const BraidRepresentation& rep, const std::vector<BraidWord>& samples,
                                 std::optional<int> depth = std::nullopt);

/// Positions in B(3,3) of the classes v, w_1, w_2, w_3 (negated basis
/// elements generated by (2,1,1), (0,2,2), (2,0,2), (2,2,0)).
std::vector<std::size_t> b3_vw_positions(const HomologyBasis& basis);

/// Restriction of a B(3,3) matrix to the invariant span of v, w_1, w_2, w_3.
/// Throws std::invalid_argument if that span is not invariant.
IntMatrix restrict_to_vw(const IntMatrix& m, const HomologyBasis& basis);

/// Sigma(P) = p_1 + p_2 + p_3 for P = [[det pi, p], [0, pi]]. Throws
/// std::invalid_argument if M lacks that shape and std::logic_error if the
/// parity law (0 for even pi, -2 for odd) fails.
long b3_sigma_invariant(const IntMatrix& m);

}  // namespace fss
