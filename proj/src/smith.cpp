#include "fss/smith.hpp"

#include <optional>
#include <utility>

namespace fss {

namespace {

struct Position {
    std::size_t r;
    std::size_t c;
};

class Reducer {
public:
    explicit Reducer(const IntMatrix& a)
        : a_(a),
          u_(IntMatrix::identity(a.rows())),
          uinv_(IntMatrix::identity(a.rows())),
          v_(IntMatrix::identity(a.cols())),
          vinv_(IntMatrix::identity(a.cols()))
    {
    }

    SmithForm run()
    {
        const std::size_t limit = std::min(a_.rows(), a_.cols());
        std::size_t t = 0;
        for (; t < limit; ++t) {
            auto p = smallest_in_block(t);
            if (!p) break;
            move_to(*p, t);
            reduce_at(t);
            if (sgn(a_(t, t)) < 0) negate_row(t);
        }
        SmithForm out;
        out.rows = a_.rows();
        out.cols = a_.cols();
        for (std::size_t i = 0; i < t; ++i) out.diagonal.push_back(a_(i, i));
        out.U = std::move(u_);
        out.Uinv = std::move(uinv_);
        out.V = std::move(v_);
        out.Vinv = std::move(vinv_);
        return out;
    }

private:
    // row i += q * row j
    void add_row(std::size_t i, std::size_t j, const Integer& q)
    {
        for (std::size_t c = 0; c < a_.cols(); ++c)
            if (sgn(a_(j, c))) a_(i, c) += q * a_(j, c);
        for (std::size_t c = 0; c < u_.cols(); ++c)
            if (sgn(u_(j, c))) u_(i, c) += q * u_(j, c);
        for (std::size_t r = 0; r < uinv_.rows(); ++r)
            if (sgn(uinv_(r, i))) uinv_(r, j) -= q * uinv_(r, i);
    }

    // column i += q * column j
    void add_col(std::size_t i, std::size_t j, const Integer& q)
    {
        for (std::size_t r = 0; r < a_.rows(); ++r)
            if (sgn(a_(r, j))) a_(r, i) += q * a_(r, j);
        for (std::size_t r = 0; r < v_.rows(); ++r)
            if (sgn(v_(r, j))) v_(r, i) += q * v_(r, j);
        for (std::size_t c = 0; c < vinv_.cols(); ++c)
            if (sgn(vinv_(i, c))) vinv_(j, c) -= q * vinv_(i, c);
    }

    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j) return;
        for (std::size_t c = 0; c < a_.cols(); ++c) swap(a_(i, c), a_(j, c));
        for (std::size_t c = 0; c < u_.cols(); ++c) swap(u_(i, c), u_(j, c));
        for (std::size_t r = 0; r < uinv_.rows(); ++r) swap(uinv_(r, i), uinv_(r, j));
    }

    void swap_cols(std::size_t i, std::size_t j)
    {
        if (i == j) return;
        for (std::size_t r = 0; r < a_.rows(); ++r) swap(a_(r, i), a_(r, j));
        for (std::size_t r = 0; r < v_.rows(); ++r) swap(v_(r, i), v_(r, j));
        for (std::size_t c = 0; c < vinv_.cols(); ++c) swap(vinv_(i, c), vinv_(j, c));
    }

    void negate_row(std::size_t i)
    {
        for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) = -a_(i, c);
        for (std::size_t c = 0; c < u_.cols(); ++c) u_(i, c) = -u_(i, c);
        for (std::size_t r = 0; r < uinv_.rows(); ++r) uinv_(r, i) = -uinv_(r, i);
    }

    void consider(std::optional<Position>& best, std::size_t r, std::size_t c) const
    {
        if (!sgn(a_(r, c))) return;
        if (!best || mpz_cmpabs(a_(r, c).get_mpz_t(), a_(best->r, best->c).get_mpz_t()) < 0) best = Position{r, c};
    }

    std::optional<Position> smallest_in_block(std::size_t t) const
    {
        std::optional<Position> best;
        for (std::size_t r = t; r < a_.rows(); ++r)
            for (std::size_t c = t; c < a_.cols(); ++c) consider(best, r, c);
        return best;
    }

    // Among the pivot row and column only, again in row-major order.
    std::optional<Position> smallest_in_cross(std::size_t t) const
    {
        std::optional<Position> best;
        for (std::size_t c = t; c < a_.cols(); ++c) consider(best, t, c);
        for (std::size_t r = t + 1; r < a_.rows(); ++r) consider(best, r, t);
        return best;
    }

    void move_to(Position p, std::size_t t)
    {
        swap_rows(p.r, t);
        swap_cols(p.c, t);
    }

    void reduce_at(std::size_t t)
    {
        while (true) {
            bool residue = false;
            for (std::size_t r = t + 1; r < a_.rows(); ++r) {
                if (!sgn(a_(r, t))) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a_(r, t).get_mpz_t(), a_(t, t).get_mpz_t());
                add_row(r, t, -q);
                if (sgn(a_(r, t))) residue = true;
            }
            for (std::size_t c = t + 1; c < a_.cols(); ++c) {
                if (!sgn(a_(t, c))) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a_(t, c).get_mpz_t(), a_(t, t).get_mpz_t());
                add_col(c, t, -q);
                if (sgn(a_(t, c))) residue = true;
            }
            if (residue) {
                move_to(*smallest_in_cross(t), t);
                continue;
            }
            bool divisible = true;
            for (std::size_t r = t + 1; r < a_.rows() && divisible; ++r)
                for (std::size_t c = t + 1; c < a_.cols(); ++c)
                    if (sgn(a_(r, c)) && !mpz_divisible_p(a_(r, c).get_mpz_t(), a_(t, t).get_mpz_t())) {
                        add_row(t, r, 1);
                        divisible = false;
                        break;
                    }
            if (divisible) return;
        }
    }

    IntMatrix a_, u_, uinv_, v_, vinv_;
};

}  // namespace

IntMatrix SmithForm::diagonal_matrix() const
{
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < diagonal.size(); ++i) d(i, i) = diagonal[i];
    return d;
}

SmithForm smith_normal_form(const IntMatrix& a) { return Reducer(a).run(); }

}  // namespace fss
