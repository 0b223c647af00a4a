#include "fss/linalg.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace fss {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t size)
{
    IntMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return sgn(v) == 0; });
}

bool IntMatrix::is_identity() const
{
    if (!square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("IntMatrix::block out of range");
    IntMatrix out(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    return out;
}

IntMatrix IntMatrix::select(const std::vector<std::size_t>& row_ids, const std::vector<std::size_t>& col_ids) const
{
    IntMatrix out(row_ids.size(), col_ids.size());
    for (std::size_t r = 0; r < row_ids.size(); ++r)
        for (std::size_t c = 0; c < col_ids.size(); ++c) out(r, c) = (*this)(row_ids[r], col_ids[c]);
    return out;
}

std::vector<Integer> IntMatrix::column(std::size_t c) const
{
    std::vector<Integer> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

Integer IntMatrix::determinant() const
{
    if (!square()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Integer sign = 1;
    Integer previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && sgn(a(swap_row, k)) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                a(i, j) = v;
            }
            a(i, k) = 0;
        }
        previous = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix product: shape mismatch");
    IntMatrix out(a.rows_, b.cols_);
    Integer term;
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& left = a(i, k);
            if (sgn(left) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Integer& right = b(k, j);
                if (sgn(right) == 0) continue;
                mpz_addmul(out(i, j).get_mpz_t(), left.get_mpz_t(), right.get_mpz_t());
            }
        }
    }
    return out;
}

std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& v)
{
    if (a.cols_ != v.size()) throw std::invalid_argument("IntMatrix-vector product: shape mismatch");
    std::vector<Integer> out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) out[i] += a(i, k) * v[k];
    return out;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a)
{
    IntMatrix out = a;
    for (auto& v : out.data_) v *= s;
    return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("IntMatrix sum: shape mismatch");
    IntMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("IntMatrix difference: shape mismatch");
    IntMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m)
{
    std::vector<std::string> cells(m.rows() * m.cols());
    std::size_t width = 1;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            cells[r * m.cols() + c] = m(r, c).get_str();
            width = std::max(width, cells[r * m.cols() + c].size());
        }
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& s = cells[r * m.cols() + c];
            if (c) os << ' ';
            os << std::string(width - s.size(), ' ') << s;
        }
        os << "]\n";
    }
    return os;
}

// ---------------------------------------------------------------------------

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t total = 0;
    for (const auto& col : columns_) total += col.size();
    return total;
}

void SparseMatrix::set_column(std::size_t c, std::vector<Entry> entries)
{
    if (c >= cols_) throw std::out_of_range("SparseMatrix::set_column");
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    std::vector<Entry> merged;
    for (auto& e : entries) {
        if (e.first >= rows_) throw std::out_of_range("SparseMatrix::set_column row");
        if (!merged.empty() && merged.back().first == e.first)
            merged.back().second += e.second;
        else
            merged.push_back(std::move(e));
    }
    std::erase_if(merged, [](const Entry& e) { return sgn(e.second) == 0; });
    columns_[c] = std::move(merged);
}

IntMatrix SparseMatrix::to_dense() const
{
    IntMatrix out(rows_, cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        for (const auto& [r, v] : columns_[c]) out(r, c) = v;
    return out;
}

SparseMatrix SparseMatrix::from_dense(const IntMatrix& m)
{
    SparseMatrix out(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        auto& col = out.columns_[c];
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (sgn(m(r, c)) != 0) col.emplace_back(r, m(r, c));
    }
    return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.cols_ != b.rows_) throw std::invalid_argument("SparseMatrix product: shape mismatch");
    SparseMatrix out(a.rows_, b.cols_);
    for (std::size_t j = 0; j < b.cols_; ++j) {
        std::map<std::size_t, Integer> acc;
        for (const auto& [k, bv] : b.columns_[j])
            for (const auto& [i, av] : a.columns_[k]) acc[i] += av * bv;
        std::vector<SparseMatrix::Entry> col;
        for (auto& [i, v] : acc)
            if (sgn(v) != 0) col.emplace_back(i, std::move(v));
        out.columns_[j] = std::move(col);
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

using SparseVector = std::vector<SparseMatrix::Entry>;

// a*u - b*w for sorted sparse vectors.
SparseVector combine(const Integer& a, const SparseVector& u, const Integer& b, const SparseVector& w)
{
    SparseVector out;
    out.reserve(u.size() + w.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < u.size() || j < w.size()) {
        if (j == w.size() || (i < u.size() && u[i].first < w[j].first)) {
            out.emplace_back(u[i].first, a * u[i].second);
            ++i;
        } else if (i == u.size() || w[j].first < u[i].first) {
            out.emplace_back(w[j].first, -b * w[j].second);
            ++j;
        } else {
            Integer v = a * u[i].second - b * w[j].second;
            if (sgn(v) != 0) out.emplace_back(u[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

void make_primitive(SparseVector& v)
{
    if (v.empty()) return;
    Integer g = 0;
    for (const auto& e : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
        if (g == 1) return;
    }
    for (auto& e : v) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

std::size_t rank(const SparseMatrix& m)
{
    // Incremental echelon form on columns keyed by leading row index.
    std::vector<std::optional<SparseVector>> pivots(m.rows());
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        SparseVector v = m.column(c);
        while (!v.empty()) {
            const std::size_t lead = v.front().first;
            auto& pivot = pivots[lead];
            if (!pivot) {
                make_primitive(v);
                pivot = std::move(v);
                ++r;
                break;
            }
            // Fraction-free: cancel the leading entry with the stored pivot.
            Integer g;
            mpz_gcd(g.get_mpz_t(), pivot->front().second.get_mpz_t(), v.front().second.get_mpz_t());
            Integer a = pivot->front().second / g;
            Integer b = v.front().second / g;
            v = combine(a, v, b, *pivot);
            make_primitive(v);
        }
    }
    return r;
}

std::size_t rank(const IntMatrix& m)
{
    return rank(SparseMatrix::from_dense(m));
}

std::vector<Integer> normalize_diagonal(std::vector<Integer> diagonal)
{
    std::vector<Integer> units;
    std::vector<Integer> rest;
    for (auto& d : diagonal) {
        Integer a = abs(d);
        if (sgn(a) == 0) throw std::invalid_argument("normalize_diagonal: zero entry");
        if (a == 1)
            units.push_back(a);
        else
            rest.push_back(std::move(a));
    }
    for (std::size_t i = 0; i < rest.size(); ++i) {
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
            Integer g;
            Integer l;
            mpz_gcd(g.get_mpz_t(), rest[i].get_mpz_t(), rest[j].get_mpz_t());
            mpz_lcm(l.get_mpz_t(), rest[i].get_mpz_t(), rest[j].get_mpz_t());
            rest[i] = g;
            rest[j] = l;
        }
    }
    for (auto& d : rest) units.push_back(std::move(d));
    return units;
}

std::vector<Integer> smith_invariants(const SparseMatrix& m)
{
    const std::size_t nrows = m.rows();
    std::vector<std::map<std::size_t, Integer>> rows(nrows);
    std::vector<std::set<std::size_t>> col_rows(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.column(c)) {
            rows[r].emplace(c, v);
            col_rows[c].insert(r);
        }
    std::set<std::size_t> active;
    for (std::size_t r = 0; r < nrows; ++r)
        if (!rows[r].empty()) active.insert(r);

    auto set_entry = [&](std::size_t r, std::size_t c, Integer v) {
        if (sgn(v) == 0) {
            rows[r].erase(c);
            col_rows[c].erase(r);
        } else {
            rows[r][c] = std::move(v);
            col_rows[c].insert(r);
        }
    };

    std::vector<Integer> diagonal;
    while (true) {
        std::size_t prow = 0;
        std::size_t pcol = 0;
        const Integer* best = nullptr;
        for (auto it = active.begin(); it != active.end();) {
            if (rows[*it].empty()) {
                it = active.erase(it);
                continue;
            }
            for (const auto& [c, v] : rows[*it]) {
                if (!best || mpz_cmpabs(v.get_mpz_t(), best->get_mpz_t()) < 0) {
                    best = &v;
                    prow = *it;
                    pcol = c;
                }
                if (mpz_cmpabs_ui(best->get_mpz_t(), 1) == 0) break;
            }
            if (best && mpz_cmpabs_ui(best->get_mpz_t(), 1) == 0) break;
            ++it;
        }
        if (!best) break;
        const Integer pivot = *best;

        bool column_clean = true;
        const std::vector<std::size_t> others(col_rows[pcol].begin(), col_rows[pcol].end());
        const auto pivot_row = rows[prow];
        for (std::size_t r : others) {
            if (r == prow) continue;
            Integer q;
            Integer rem;
            mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), rows[r][pcol].get_mpz_t(), pivot.get_mpz_t());
            for (const auto& [c, v] : pivot_row) {
                auto found = rows[r].find(c);
                Integer updated = (found == rows[r].end() ? Integer(0) : found->second) - q * v;
                set_entry(r, c, std::move(updated));
            }
            if (sgn(rem) != 0) {
                column_clean = false;
                active.insert(r);
            }
        }
        if (!column_clean) continue;

        bool row_clean = true;
        for (const auto& [c, v] : pivot_row) {
            if (c == pcol) continue;
            Integer q;
            Integer rem;
            mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), pivot.get_mpz_t());
            // Column operations touch only the pivot row: its column is clear.
            set_entry(prow, c, rem);
            if (sgn(rem) != 0) row_clean = false;
        }
        if (!row_clean) continue;

        diagonal.push_back(pivot);
        set_entry(prow, pcol, 0);
        active.erase(prow);
    }
    return normalize_diagonal(std::move(diagonal));
}

}  // namespace fss
