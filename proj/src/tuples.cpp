#include "fss/tuples.hpp"

#include <sstream>
#include <stdexcept>

namespace fss {

EdgeTuple EdgeTuple::zero(int n)
{
    return EdgeTuple(std::vector<int>(n < 0 ? 0 : static_cast<std::size_t>(n), 0));
}

EdgeTuple::EdgeTuple(std::vector<int> entries) : entries_(std::move(entries))
{
    validate_and_cache();
}

EdgeTuple::EdgeTuple(std::initializer_list<int> entries) : entries_(entries)
{
    validate_and_cache();
}

void EdgeTuple::validate_and_cache()
{
    if (entries_.empty())
        throw std::invalid_argument("EdgeTuple: length must be at least 1");
    norm_ = 0;
    norm2_ = 0;
    for (int j : entries_) {
        if (j < 0)
            throw std::invalid_argument("EdgeTuple: entries must be non-negative");
        norm_ += j;
        norm2_ += j & 1;
    }
}

int EdgeTuple::at(int edge) const
{
    if (edge < 1 || edge > n())
        throw std::invalid_argument("EdgeTuple: edge index " + std::to_string(edge) + " out of range");
    return entries_[static_cast<std::size_t>(edge - 1)];
}

std::vector<int> EdgeTuple::support() const
{
    std::vector<int> out;
    for (int i = 0; i < n(); ++i)
        if (entries_[i] != 0) out.push_back(i + 1);
    return out;
}

std::vector<int> EdgeTuple::support2() const
{
    std::vector<int> out;
    for (int i = 0; i < n(); ++i)
        if (entries_[i] & 1) out.push_back(i + 1);
    return out;
}

int EdgeTuple::prefix_norm(int edge) const
{
    int sum = 0;
    for (int i = 0; i + 1 < edge && i < n(); ++i) sum += entries_[i];
    return sum;
}

int EdgeTuple::first_support() const
{
    for (int i = 0; i < n(); ++i)
        if (entries_[i] != 0) return i + 1;
    return 0;
}

std::string EdgeTuple::str() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

EdgeTuple operator+(const EdgeTuple& a, const EdgeTuple& b)
{
    if (a.n() != b.n()) throw std::invalid_argument("EdgeTuple: length mismatch in sum");
    std::vector<int> out(a.entries_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.entries_[i];
    return EdgeTuple(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const EdgeTuple& tuple)
{
    os << '(';
    for (int i = 0; i < tuple.n(); ++i) {
        if (i) os << ',';
        os << tuple[static_cast<std::size_t>(i)];
    }
    return os << ')';
}

TupleStats tuple_stats(const EdgeTuple& tuple)
{
    return {tuple.norm(), tuple.support(), tuple.support2(), tuple.norm2()};
}

EdgeTuple lower_neighbor(const EdgeTuple& tuple, int edge)
{
    if (tuple.at(edge) == 0)
        throw std::invalid_argument("lower_neighbor: entry " + std::to_string(edge) + " of " + tuple.str() +
                                    " is zero");
    std::vector<int> out(tuple.entries().begin(), tuple.entries().end());
    --out[static_cast<std::size_t>(edge - 1)];
    return EdgeTuple(std::move(out));
}

EdgeTuple raise_neighbor(const EdgeTuple& tuple, int edge)
{
    (void)tuple.at(edge);
    std::vector<int> out(tuple.entries().begin(), tuple.entries().end());
    ++out[static_cast<std::size_t>(edge - 1)];
    return EdgeTuple(std::move(out));
}

namespace {

void enumerate_into(std::vector<int>& prefix, int position, int remaining, std::vector<EdgeTuple>& out)
{
    const int n = static_cast<int>(prefix.size());
    if (position == n - 1) {
        prefix[static_cast<std::size_t>(position)] = remaining;
        out.emplace_back(prefix);
        return;
    }
    for (int value = 0; value <= remaining; ++value) {
        prefix[static_cast<std::size_t>(position)] = value;
        enumerate_into(prefix, position + 1, remaining - value, out);
    }
}

}  // namespace

std::vector<EdgeTuple> enumerate_tuples(int n, int j)
{
    if (n < 1) throw std::invalid_argument("enumerate_tuples: n must be positive");
    if (j < 0) throw std::invalid_argument("enumerate_tuples: norm must be non-negative");
    std::vector<EdgeTuple> out;
    std::vector<int> prefix(static_cast<std::size_t>(n), 0);
    enumerate_into(prefix, 0, j, out);
    return out;
}

Integer binomial(long top, long bottom)
{
    if (top < 0 || bottom < 0 || bottom > top) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
    return out;
}

Integer signed_binomial(int m, int r)
{
    if (r < 0 || r > m)
        throw std::invalid_argument("signed_binomial: need 0 <= r <= m, got m=" + std::to_string(m) +
                                    " r=" + std::to_string(r));
    // (1 + (-1)^{r(m-r)}) / 2 vanishes exactly when r and m - r are both odd.
    if ((r & 1) && ((m - r) & 1)) return 0;
    return binomial(m / 2, r / 2);
}

}  // namespace fss
