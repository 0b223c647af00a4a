#pragma once

// Boundary operators and the cellular chain complexes of exp_k(Gamma_n, v),
// exp_k(Gamma_n), the m-cube complex and the support/odd-part subcomplexes.
//
// Orientation follows the convention with the overall minus sign in the
// untilded boundary:
//   d sigma_J  = - sum_{i in supp J, j_i even} (-1)^{|J|_[i-1]|} sigma_{d_i J}
//   d tsigma_J =   sum_{i in supp J, j_i even} (-1)^{|J|_[i-1]|} (tsigma_{d_i J} - 2 sigma_{d_i J})

#include "fss/chain.hpp"
#include "fss/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fss {

Chain boundary_untilded(const EdgeTuple& j);
/// Throws std::invalid_argument for the zero tuple.
Chain boundary_tilded(const EdgeTuple& j);
/// Boundary of a subset generator S of the m-cube complex:
///   d S = sum_{i in S} (-1)^{|[i-1] \ S|} S \ {i}.
Chain boundary_cube(const EdgeTuple& indicator);
Chain boundary(const Cell& cell);
/// Linear extension; mixed chains are handled piece by piece.
Chain boundary(const Chain& chain);

/// d(tilde c) == 2 d c - tilde(d c) for an untilded chain c in dimensions >= 1.
bool tilde_relation_check(const Chain& chain);

enum class ComplexKind { Based, Unbased, Cube, Sub, SubL };

struct ComplexLabel {
    ComplexKind kind = ComplexKind::Based;
    int k = 0;
    int n = 0;
    int m = 0;
    std::vector<int> subset;   // Sub: the support S (1-based edges)
    int max_dim = 0;           // Sub: dimension bound
    EdgeTuple odd_part;        // SubL: the all-odd m-tuple L

    static ComplexLabel based(int k, int n);
    static ComplexLabel unbased(int k, int n);
    static ComplexLabel cube(int m);
    static ComplexLabel sub(int n, std::vector<int> subset, int max_dim);
    static ComplexLabel sub_l(EdgeTuple odd_part);

    [[nodiscard]] std::string str() const;
};

class ChainComplex {
public:
    [[nodiscard]] const ComplexLabel& label() const { return label_; }
    /// Largest dimension carrying a cell, or -1 for the empty complex.
    [[nodiscard]] int top_dimension() const { return static_cast<int>(cells_.size()) - 1; }
    [[nodiscard]] const std::vector<Cell>& cells(int d) const;
    [[nodiscard]] std::size_t count(int d) const;
    [[nodiscard]] std::size_t total_cells() const;

    /// Matrix of d from d-cells (columns) to (d-1)-cells (rows). Zero-shaped
    /// outside 1..top_dimension.
    [[nodiscard]] SparseMatrix boundary_matrix(int d) const;

    [[nodiscard]] std::optional<std::size_t> index_of(const Cell& cell) const;
    [[nodiscard]] bool contains(const Cell& cell) const { return index_of(cell).has_value(); }

    /// Coordinates of a homogeneous chain of dimension d in the cell basis.
    /// Throws std::invalid_argument when a term is not a cell of this complex.
    [[nodiscard]] std::vector<Integer> to_vector(const Chain& chain, int d) const;
    [[nodiscard]] Chain from_vector(const std::vector<Integer>& coords, int d) const;

    [[nodiscard]] long euler_characteristic() const;

private:
    friend ChainComplex build_complex(const ComplexLabel& label);

    ComplexLabel label_;
    std::vector<std::vector<Cell>> cells_;
    std::vector<SparseMatrix> boundaries_;
    std::map<Cell, std::size_t> index_;
};

/// Builds the complex and checks d o d = 0 (std::logic_error on failure).
ChainComplex build_complex(const ComplexLabel& label);

/// The (support, odd part) signature of an untilded cell: cells in different
/// classes never meet under the boundary map.
struct CellSignature {
    std::vector<int> support;
    std::vector<int> odd_part;  // entries on the support, even ones lowered by one

    friend bool operator==(const CellSignature&, const CellSignature&) = default;
    friend auto operator<=>(const CellSignature&, const CellSignature&) = default;
};

CellSignature cell_signature(const EdgeTuple& j);

/// The even-entry set S of a cell of C^[m](L) as a cube-face indicator.
EdgeTuple even_indicator(const EdgeTuple& j);

/// Number of cells of dimension d in build_complex(label) predicted by the
/// stars-and-bars census.
Integer census(const ComplexLabel& label, int d);

}  // namespace fss
