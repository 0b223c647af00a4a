#pragma once

// Exact integer matrices: a dense row-major IntMatrix for induced maps and
// Smith forms, and a column-sparse SparseMatrix for boundary operators.

#include "fss/tuples.hpp"

#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

namespace fss {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t size);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool square() const { return rows_ == cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_identity() const;
    [[nodiscard]] IntMatrix transpose() const;
    /// Rows [r0, r0+nr) and columns [c0, c0+nc).
    [[nodiscard]] IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    /// Submatrix picking the given rows and columns, in the given order.
    [[nodiscard]] IntMatrix select(const std::vector<std::size_t>& row_ids,
                                   const std::vector<std::size_t>& col_ids) const;

    [[nodiscard]] std::vector<Integer> column(std::size_t c) const;

    /// Exact determinant by fraction-free elimination. Requires a square matrix.
    [[nodiscard]] Integer determinant() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& v);
    friend IntMatrix operator*(const Integer& s, const IntMatrix& a);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Column-compressed integer matrix; each column holds (row, value) pairs
/// sorted by row with no stored zeros.
class SparseMatrix {
public:
    using Entry = std::pair<std::size_t, Integer>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] const std::vector<Entry>& column(std::size_t c) const { return columns_[c]; }
    [[nodiscard]] std::size_t nonzeros() const;
    [[nodiscard]] bool is_zero() const { return nonzeros() == 0; }

    /// Replaces column c; entries may be unsorted and contain repeats or zeros.
    void set_column(std::size_t c, std::vector<Entry> entries);

    [[nodiscard]] IntMatrix to_dense() const;
    static SparseMatrix from_dense(const IntMatrix& m);

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::vector<Entry>> columns_;
};

/// Rank over the rationals by fraction-free sparse elimination.
std::size_t rank(const SparseMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith form, computed by
/// sparse elimination without transforms. Pivot: smallest nonzero absolute
/// value, ties broken by row-major position.
std::vector<Integer> smith_invariants(const SparseMatrix& m);

/// Normalises a list of nonzero diagonal entries into the divisibility chain
/// of the equivalent Smith form.
std::vector<Integer> normalize_diagonal(std::vector<Integer> diagonal);

}  // namespace fss
