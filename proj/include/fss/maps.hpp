#pragma once

// Pointed graph maps Gamma_n -> Gamma_m given by reduced edge words, the
// chain maps they induce on the chain ring, and their matrices on H_k.

#include "fss/chainring.hpp"
#include "fss/homology.hpp"

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

namespace fss {

struct Letter {
    int edge = 1;  // 1-based target edge
    int sign = 1;  // +1 for e_a, -1 for the barred letter

    [[nodiscard]] Letter inverse() const { return {edge, -sign}; }
    friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word in the letters e_1..e_m and their inverses.
class EdgeWord {
public:
    EdgeWord() = default;
    /// Validates the letters against m and reduces.
    EdgeWord(int m, const std::vector<Letter>& letters);

    [[nodiscard]] int m() const { return m_; }
    [[nodiscard]] const std::vector<Letter>& letters() const { return letters_; }
    [[nodiscard]] bool empty() const { return letters_.empty(); }
    [[nodiscard]] std::size_t length() const { return letters_.size(); }
    [[nodiscard]] EdgeWord inverse() const;
    /// Tokens as in the map file format: e3, E3 (barred), or 1 when empty.
    [[nodiscard]] std::string str() const;

    friend bool operator==(const EdgeWord&, const EdgeWord&) = default;

private:
    int m_ = 1;
    std::vector<Letter> letters_;
};

/// Free reduction of a raw letter sequence.
std::vector<Letter> reduce_word(const std::vector<Letter>& raw);

struct GraphMap {
    int n = 1;
    int m = 1;
    std::vector<EdgeWord> words;  // words[i-1] is the image of e_i

    GraphMap() = default;
    GraphMap(int n, int m, std::vector<EdgeWord> words);

    static GraphMap identity(int n);
    /// Edge permutation e_i -> e_{perm[i-1]}.
    static GraphMap permutation(const std::vector<int>& perm);

    [[nodiscard]] const EdgeWord& word(int edge) const { return words[static_cast<std::size_t>(edge - 1)]; }
    friend bool operator==(const GraphMap&, const GraphMap&) = default;
};

/// phi o psi: substitute phi's words into psi's words and reduce.
GraphMap compose(const GraphMap& phi, const GraphMap& psi);

int winding_number(const EdgeWord& w, int a);
/// Pairs (p, q) of letters on edges a and b, signed by the bars and by -1 when
/// q precedes p. Throws std::invalid_argument when a == b.
int signed_pair_count(const EdgeWord& w, int a, int b);

struct BasicImages {
    std::vector<RingElement> degree_one;  // images of sigma~_1^(i)
    std::vector<RingElement> degree_two;  // images of sigma~_2^(i)
};

BasicImages basic_images(const GraphMap& phi);

/// The ring homomorphism (exp phi)_# on tilded chains. Thread safe: the memo
/// tables take a shared lock to read and an exclusive lock to insert.
class InducedChainMap {
public:
    explicit InducedChainMap(GraphMap phi);

    [[nodiscard]] const GraphMap& map() const { return phi_; }
    [[nodiscard]] const BasicImages& basics() const { return basics_; }

    /// Image of sigma~_J over Q.
    [[nodiscard]] RingElement image_of_cell(const EdgeTuple& j) const;
    /// Image of a chain of tilded cells; throws IntegralityError if an
    /// integral input has a non-integral image.
    [[nodiscard]] Chain image(const Chain& c) const;

private:
    [[nodiscard]] RingElement edge_image(int edge, int j) const;

    GraphMap phi_;
    BasicImages basics_;
    mutable std::shared_mutex mutex_;
    mutable std::map<std::pair<int, int>, RingElement> edge_memo_;
    mutable std::map<EdgeTuple, RingElement> cell_memo_;
};

Chain chain_image(const GraphMap& phi, const Chain& c);

struct HomologyMatrix {
    int k = 0;
    IntMatrix matrix;
    std::vector<EdgeTuple> column_legend;  // generating tuples of B(k,n)
    std::vector<EdgeTuple> row_legend;     // generating tuples of B(k,m)
};

/// Matrix of (exp_k phi)_* on H_k in the bases B(k,n) and B(k,m).
HomologyMatrix homology_matrix(const GraphMap& phi, int k);
/// Same, reusing an induced map and precomputed bases.
HomologyMatrix homology_matrix(const InducedChainMap& f, const HomologyBasis& source, const HomologyBasis& target);

/// Signed count of preimages of a generic point of sigma~_L under the map of
/// j-point configurations on one source edge whose image word is w.
/// Realized combinatorially: each target point picks a letter occurrence on
/// its edge, and the sign combines the bars with the permutation from source
/// order to the canonical target order.
long oracle_pairing(const EdgeWord& w, int j, const EdgeTuple& l);

}  // namespace fss
