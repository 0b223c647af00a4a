#pragma once

// Integral homology of the constructed complexes, the closed forms for the
// Betti numbers b_k(exp_k Gamma_n), and the explicit basis B(k,n).

#include "fss/complex.hpp"
#include "fss/smith.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace fss {

struct DimensionHomology {
    int dim = 0;
    std::size_t rank = 0;
    std::vector<Integer> torsion;  // invariant factors > 1
};

struct HomologySummary {
    ComplexLabel label;
    bool reduced = false;
    std::vector<DimensionHomology> groups;  // dimensions 0..top

    [[nodiscard]] std::size_t rank(int d) const;
    [[nodiscard]] const std::vector<Integer>& torsion(int d) const;
    [[nodiscard]] bool torsion_free() const;
    /// Dimensions with nonzero rank or torsion.
    [[nodiscard]] std::vector<int> support() const;
};

/// Ranks by fraction-free elimination; torsion from the sparse Smith
/// invariants of the incoming boundary, whose count is checked against the
/// rank. Reduced mode subtracts the augmentation in dimension 0.
HomologySummary homology(const ChainComplex& complex, bool reduced);

/// H_d of a complex as an explicit quotient Z_d / B_d with lifts of the free
/// generators, built from two dense Smith forms. Used to express chain maps
/// on homology. The complex must outlive the presentation.
class HomologyPresentation {
public:
    HomologyPresentation(const ChainComplex& complex, int d);

    [[nodiscard]] int dimension() const { return d_; }
    [[nodiscard]] const ChainComplex& complex() const { return *complex_; }
    [[nodiscard]] std::size_t free_rank() const { return lifts_.size(); }
    [[nodiscard]] const std::vector<Integer>& torsion() const { return torsion_; }

    /// A cycle representing the j-th free generator.
    [[nodiscard]] const Chain& generator(std::size_t j) const { return lifts_[j]; }

    /// Coordinates of the class of a d-cycle on the free generators.
    /// Throws std::invalid_argument if the chain is not a cycle.
    [[nodiscard]] std::vector<Integer> free_coordinates(const Chain& cycle) const;

private:
    const ChainComplex* complex_;
    int d_;
    std::size_t boundary_rank_ = 0;  // rank of the outgoing boundary d_d
    std::size_t image_rank_ = 0;     // rank of d_{d+1} inside the cycles
    IntMatrix vinv_;                 // change of basis of C_d
    IntMatrix u2_;                   // change of basis of Z_d
    std::vector<Integer> torsion_;
    std::vector<Chain> lifts_;
};

/// Matrix of the map induced on free homology by a chain-level map; columns
/// follow the generators of `from`.
IntMatrix induced_on_homology(const HomologyPresentation& from, const HomologyPresentation& to,
                              const std::function<Chain(const Chain&)>& chain_map);

/// sum_{j=1}^k (-1)^{j-k} binom(n+j-1, n-1), checked against the cased
/// positive form. Throws std::invalid_argument unless k, n >= 1.
Integer betti_formula(int k, int n);

/// Coefficients 0..kmax of (1-(1-x)^n) / ((1+x)(1-x)^n); entry k is b_k.
std::vector<Integer> betti_genfun(int n, int kmax);

/// Closed forms for Based and Unbased; alternating census sums otherwise.
Integer euler_characteristic(const ComplexLabel& label);

/// n - |J|_2, the number of even-or-zero entries.
inline int filtration_index(const EdgeTuple& j) { return j.even_count(); }

/// B(k,n): tilde(d sigma_J) for |J| = k+1 with first nonzero entry even,
/// ordered by filtration index then J.
struct HomologyBasis {
    int k = 0;
    int n = 0;
    std::vector<Chain> elements;
    std::vector<EdgeTuple> generators;  // J for each element
    std::vector<int> filtration;        // common index of the element's terms
    /// The term d_{i0} J, i0 = min supp J, which appears in exactly one
    /// element, with coefficient -1.
    std::vector<EdgeTuple> leading;

    [[nodiscard]] std::size_t size() const { return elements.size(); }
    /// Positions [begin, end) of the elements with each filtration index that
    /// occurs, in increasing index order.
    [[nodiscard]] std::vector<std::pair<int, std::pair<std::size_t, std::size_t>>> blocks() const;
};

HomologyBasis basis_Bkn(int k, int n);

class NotACycleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotInSpanError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Integer coordinates of a tilded k-cycle in B(k,n).
std::vector<Integer> coordinates_in_basis(const Chain& z, const HomologyBasis& basis);

/// {dS : S in [m], |S| = j+1, 1 in S}, the basis of H_j of Cube(m)
/// truncated above j. Requires 1 <= j <= m-1.
std::vector<Chain> cube_truncated_basis(int m, int j);

}  // namespace fss
