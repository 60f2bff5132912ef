#include "linkform/snf.hpp"

#include <algorithm>
#include <optional>

namespace linkform::linalg {

namespace {

Integer rounded_quotient(const Integer& a, const Integer& p)
{
    Integer q = a / p;
    Integer r = a - q * p;
    if (2 * abs(r) > abs(p))
        q += ((r < 0) == (p < 0)) ? 1 : -1;
    return q;
}

const Entry* find_entry(const SparseRow& row, std::size_t c)
{
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
    return (it != row.end() && it->col == c) ? &*it : nullptr;
}

struct Pivot {
    std::size_t row;
    std::size_t col;
    Integer value;
};

class Eliminator {
public:
    Eliminator(const IntMatrix& a, bool track) : work_(a), track_(track)
    {
        row_active_.assign(a.rows(), true);
        col_active_.assign(a.cols(), true);
        if (track_) {
            L_ = IntMatrix::identity(a.rows());
            Linv_t_ = IntMatrix::identity(a.rows());
            R_t_ = IntMatrix::identity(a.cols());
            Rinv_ = IntMatrix::identity(a.cols());
        }
    }

    void run()
    {
        std::optional<Pivot> piv = select();
        while (piv) {
            if (!clear_column(*piv) || !clear_row(*piv)) {
                piv = select();
                continue;
            }
            if (auto bad = non_divisible(*piv)) {
                row_op(piv->row, *bad, 1);
                clear_row(*piv);
                piv = select();
                continue;
            }
            if (piv->value < 0) {
                negate(piv->row);
                piv->value = -piv->value;
            }
            row_active_[piv->row] = false;
            col_active_[piv->col] = false;
            pivots_.push_back(*piv);
            piv = select();
        }
    }

    std::vector<Integer> diagonal() const
    {
        std::vector<Integer> d;
        for (const auto& p : pivots_)
            d.push_back(p.value);
        return d;
    }

    SnfResult result() const
    {
        const std::size_t m = work_.rows(), n = work_.cols();
        std::vector<std::size_t> row_order, col_order;
        std::vector<bool> row_used(m, false), col_used(n, false);
        for (const auto& p : pivots_) {
            row_order.push_back(p.row);
            col_order.push_back(p.col);
            row_used[p.row] = true;
            col_used[p.col] = true;
        }
        for (std::size_t i = 0; i < m; ++i)
            if (!row_used[i])
                row_order.push_back(i);
        for (std::size_t j = 0; j < n; ++j)
            if (!col_used[j])
                col_order.push_back(j);

        SnfResult res;
        IntMatrix u_t(m, m), u_inv(m, m), v(n, n), v_inv_t(n, n);
        for (std::size_t t = 0; t < m; ++t) {
            u_t.set_row(t, Linv_t_.row(row_order[t]));
            u_inv.set_row(t, L_.row(row_order[t]));
        }
        for (std::size_t t = 0; t < n; ++t) {
            v.set_row(t, Rinv_.row(col_order[t]));
            v_inv_t.set_row(t, R_t_.row(col_order[t]));
        }
        res.U = u_t.transpose();
        res.U_inv = std::move(u_inv);
        res.V = std::move(v);
        res.V_inv = v_inv_t.transpose();
        res.D = IntMatrix(m, n);
        for (std::size_t t = 0; t < pivots_.size(); ++t)
            res.D.set(t, t, pivots_[t].value);
        res.diagonal = diagonal();
        return res;
    }

private:
    std::optional<Pivot> select() const
    {
        std::optional<Pivot> best;
        for (std::size_t r = 0; r < work_.rows(); ++r) {
            if (!row_active_[r])
                continue;
            for (const auto& e : work_.row(r)) {
                if (!col_active_[e.col])
                    continue;
                if (!best || abs(e.value) < abs(best->value))
                    best = Pivot{r, e.col, e.value};
            }
        }
        return best;
    }

    // Reduces the pivot column; true when only the pivot remains.
    bool clear_column(const Pivot& p)
    {
        bool clean = true;
        for (std::size_t r = 0; r < work_.rows(); ++r) {
            if (r == p.row || !row_active_[r])
                continue;
            const Entry* e = find_entry(work_.row(r), p.col);
            if (!e)
                continue;
            Integer q = rounded_quotient(e->value, p.value);
            row_op(r, p.row, -q);
            if (find_entry(work_.row(r), p.col))
                clean = false;
        }
        return clean;
    }

    // Column operations; the pivot column is already clean, so only the
    // pivot row changes in the working matrix.
    bool clear_row(const Pivot& p)
    {
        bool clean = true;
        SparseRow row = work_.row(p.row);
        SparseRow updated;
        for (auto& e : row) {
            if (e.col == p.col || !col_active_[e.col]) {
                updated.push_back(e);
                continue;
            }
            Integer q = rounded_quotient(e.value, p.value);
            Integer rem = e.value - q * p.value;
            if (track_ && q != 0) {
                // col_j -= q col_c
                R_t_.add_row_multiple(e.col, p.col, -q);
                Rinv_.add_row_multiple(p.col, e.col, q);
            }
            if (rem != 0) {
                updated.push_back({e.col, rem});
                clean = false;
            }
        }
        work_.set_row(p.row, std::move(updated));
        return clean;
    }

    std::optional<std::size_t> non_divisible(const Pivot& p) const
    {
        if (abs(p.value) == 1)
            return std::nullopt;
        for (std::size_t r = 0; r < work_.rows(); ++r) {
            if (r == p.row || !row_active_[r])
                continue;
            for (const auto& e : work_.row(r))
                if (col_active_[e.col] && e.value % p.value != 0)
                    return r;
        }
        return std::nullopt;
    }

    // row_t += c * row_s
    void row_op(std::size_t t, std::size_t s, const Integer& c)
    {
        if (c == 0)
            return;
        work_.add_row_multiple(t, s, c);
        if (track_) {
            L_.add_row_multiple(t, s, c);
            Linv_t_.add_row_multiple(s, t, -c);
        }
    }

    void negate(std::size_t r)
    {
        work_.negate_row(r);
        if (track_) {
            L_.negate_row(r);
            Linv_t_.negate_row(r);
        }
    }

    IntMatrix work_;
    bool track_;
    std::vector<bool> row_active_, col_active_;
    std::vector<Pivot> pivots_;
    // current = L * A * R; L_inv and R are stored transposed so that every
    // update is a row operation.
    IntMatrix L_, Linv_t_, R_t_, Rinv_;
};

} // namespace

SnfResult smith_normal_form(const IntMatrix& a)
{
    Eliminator e(a, true);
    e.run();
    return e.result();
}

std::vector<Integer> invariant_factors(const IntMatrix& a)
{
    Eliminator e(a, false);
    e.run();
    return e.diagonal();
}

std::vector<Integer> solve_mod(const IntMatrix& a, const std::vector<Integer>& b, const Integer& m)
{
    if (b.size() != a.rows())
        throw DimensionMismatch("right-hand side length does not match matrix rows");
    return solve_mod(smith_normal_form(a), b, m);
}

std::vector<Integer> solve_mod(const SnfResult& snf, const std::vector<Integer>& b, const Integer& m)
{
    if (b.size() != snf.U_inv.cols())
        throw DimensionMismatch("right-hand side length does not match matrix rows");
    std::vector<Integer> c = snf.U_inv.apply(b);
    std::vector<Integer> y(snf.V.rows());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < snf.rank()) {
            const Integer& d = snf.diagonal[i];
            if (m == 0) {
                if (c[i] % d != 0)
                    throw NoSolution("system has no integer solution");
                y[i] = c[i] / d;
            } else {
                Integer g = gcd(d, m);
                Integer ci = mod_floor(c[i], m);
                if (ci % g != 0)
                    throw NoSolution("system has no solution modulo " + m.str());
                Integer mg = m / g;
                if (mg == 1) {
                    y[i] = 0;
                } else {
                    std::int64_t inv = inverse_mod(to_int64(mod_floor(d / g, mg)), to_int64(mg));
                    y[i] = mod_floor((ci / g) * inv, mg);
                }
            }
        } else if (mod_floor(c[i], m) != 0) {
            throw NoSolution("system is inconsistent");
        }
    }
    std::vector<Integer> x = snf.V_inv.apply(y);
    for (auto& v : x)
        v = mod_floor(v, m);
    return x;
}

std::vector<std::vector<Integer>> kernel_mod(const IntMatrix& a, const Integer& m)
{
    return kernel_mod(smith_normal_form(a), m);
}

std::vector<std::vector<Integer>> kernel_mod(const SnfResult& snf, const Integer& m)
{
    const std::size_t n = snf.V_inv.rows();
    IntMatrix cols = snf.V_inv.transpose();
    std::vector<std::vector<Integer>> gens;
    for (std::size_t i = 0; i < n; ++i) {
        Integer scale = 1;
        if (i < snf.rank()) {
            if (m == 0)
                continue;
            scale = m / gcd(snf.diagonal[i], m);
        }
        std::vector<Integer> g(n);
        bool nonzero = false;
        for (const auto& e : cols.row(i)) {
            g[e.col] = mod_floor(e.value * scale, m);
            nonzero = nonzero || g[e.col] != 0;
        }
        if (nonzero)
            gens.push_back(std::move(g));
    }
    return gens;
}

} // namespace linkform::linalg
