#include "linkform/reduction.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "linkform/errors.hpp"

namespace linkform {

namespace {

template <class T>
struct CellEntry {
    std::uint32_t col;
    T value;
};

template <class T>
using Row = std::vector<CellEntry<T>>;

inline std::int64_t add_checked(std::int64_t a, std::int64_t b) { return checked_add(a, b); }
inline std::int64_t mul_checked(std::int64_t a, std::int64_t b) { return checked_mul(a, b); }
inline Integer add_checked(const Integer& a, const Integer& b) { return a + b; }
inline Integer mul_checked(const Integer& a, const Integer& b) { return a * b; }

inline std::int64_t as_int64(std::int64_t v) { return v; }
inline std::int64_t as_int64(const Integer& v) { return to_int64(v); }

inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(const Integer& v) { return v == 1 || v == -1; }

template <class T>
const CellEntry<T>* lookup(const Row<T>& row, std::uint32_t c)
{
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const CellEntry<T>& e, std::uint32_t col) { return e.col < col; });
    return (it != row.end() && it->col == c) ? &*it : nullptr;
}

// Modular or checked-integer arithmetic for applying the stored maps.
struct Arith {
    std::int64_t m;
    std::int64_t norm(std::int64_t v) const { return mod_floor(v, m); }
    std::int64_t mul(std::int64_t a, std::int64_t b) const
    {
        if (m == 0)
            return checked_mul(a, b);
        return static_cast<std::int64_t>(mod_floor(static_cast<std::int64_t>(static_cast<__int128>(a) * b % m), m));
    }
    std::int64_t add(std::int64_t a, std::int64_t b) const
    {
        if (m == 0)
            return checked_add(a, b);
        return mod_floor(static_cast<std::int64_t>((static_cast<__int128>(a) + b) % m), m);
    }
};

} // namespace

ChainReduction::ChainReduction(const SimplexIndex& idx)
{
    try {
        build<std::int64_t>(idx);
    } catch (const OverflowError&) {
        build<Integer>(idx);
    }
}

template <class T>
void ChainReduction::build(const SimplexIndex& idx)
{
    const int dim = idx.dimension();
    counts_.assign(dim + 1, 0);
    for (int k = 0; k <= dim; ++k)
        counts_[k] = idx.count(k);
    std::vector<std::vector<char>> alive(dim + 1);
    for (int k = 0; k <= dim; ++k)
        alive[k].assign(counts_[k], 1);
    steps_.assign(std::max(dim, 0), {});
    std::vector<std::vector<Row<T>>> final_rows(std::max(dim, 0));

    for (int k = 0; k < dim; ++k) {
        const std::size_t nrows = counts_[k + 1], ncols = counts_[k];
        std::vector<Row<T>> rows(nrows);
        std::vector<std::vector<std::uint32_t>> col_rows(ncols);
        std::vector<std::uint32_t> col_count(ncols, 0);
        for (std::size_t s = 0; s < nrows; ++s) {
            auto& row = rows[s];
            for (int j = 0; j <= k + 1; ++j) {
                std::uint32_t c = idx.boundary_face(k + 1, s, j);
                if (alive[k][c])
                    row.push_back({c, T(j % 2 ? -1 : 1)});
            }
            std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
            for (const auto& e : row) {
                col_rows[e.col].push_back(static_cast<std::uint32_t>(s));
                ++col_count[e.col];
            }
        }
        using Cand = std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>;
        std::priority_queue<Cand, std::vector<Cand>, std::greater<Cand>> heap;
        auto cost = [&](std::uint32_t s, std::uint32_t c) {
            return static_cast<std::uint64_t>(col_count[c] - 1) * static_cast<std::uint64_t>(rows[s].size() - 1);
        };
        for (std::uint32_t s = 0; s < nrows; ++s)
            for (const auto& e : rows[s])
                if (is_unit(e.value))
                    heap.emplace(cost(s, e.col), s, e.col);

        std::vector<char> row_alive(nrows, 1), col_alive(ncols);
        for (std::size_t c = 0; c < ncols; ++c)
            col_alive[c] = alive[k][c];

        while (!heap.empty()) {
            auto [cst, s, c] = heap.top();
            heap.pop();
            if (!row_alive[s] || !col_alive[c])
                continue;
            const CellEntry<T>* piv = lookup(rows[s], c);
            if (!piv || !is_unit(piv->value))
                continue;
            const std::uint64_t now = cost(s, c);
            if (now > cst) {
                heap.emplace(now, s, c);
                continue;
            }
            const T u = piv->value;
            ReductionStep step;
            step.sigma = c;
            step.tau = s;
            step.unit = as_int64(u);
            auto& owners = col_rows[c];
            std::sort(owners.begin(), owners.end());
            owners.erase(std::unique(owners.begin(), owners.end()), owners.end());
            Row<T> pivot_row = rows[s];
            for (const auto& e : pivot_row)
                if (e.col != c)
                    step.beta.emplace_back(e.col, as_int64(e.value));
            for (std::uint32_t r : owners) {
                if (r == s || !row_alive[r])
                    continue;
                const CellEntry<T>* hit = lookup(rows[r], c);
                if (!hit)
                    continue;
                const T a = hit->value;
                step.alpha.emplace_back(r, as_int64(a));
                const T factor = -mul_checked(a, u);
                Row<T> merged;
                const Row<T>& old = rows[r];
                merged.reserve(old.size() + pivot_row.size());
                std::size_t i = 0, j = 0;
                while (i < old.size() || j < pivot_row.size()) {
                    if (j == pivot_row.size() || (i < old.size() && old[i].col < pivot_row[j].col)) {
                        merged.push_back(old[i++]);
                    } else if (i == old.size() || pivot_row[j].col < old[i].col) {
                        const auto& pe = pivot_row[j++];
                        merged.push_back({pe.col, mul_checked(factor, pe.value)});
                        col_rows[pe.col].push_back(r);
                        ++col_count[pe.col];
                        if (is_unit(merged.back().value))
                            heap.emplace(0, r, pe.col);
                    } else {
                        T v = add_checked(old[i].value, mul_checked(factor, pivot_row[j].value));
                        if (v != 0) {
                            merged.push_back({old[i].col, v});
                            if (is_unit(v) && !is_unit(old[i].value))
                                heap.emplace(0, r, old[i].col);
                        } else {
                            --col_count[old[i].col];
                        }
                        ++i;
                        ++j;
                    }
                }
                rows[r] = std::move(merged);
            }
            for (const auto& e : pivot_row)
                --col_count[e.col];
            Row<T>().swap(rows[s]);
            row_alive[s] = 0;
            col_alive[c] = 0;
            col_count[c] = 0;
            std::vector<std::uint32_t>().swap(owners);
            alive[k][c] = 0;
            alive[k + 1][s] = 0;
            steps_[k].push_back(std::move(step));
        }
        final_rows[k] = std::move(rows);
    }

    critical_.assign(dim + 1, {});
    position_.assign(dim + 1, {});
    for (int k = 0; k <= dim; ++k) {
        position_[k].assign(counts_[k], -1);
        for (std::size_t c = 0; c < counts_[k]; ++c) {
            if (alive[k][c]) {
                position_[k][c] = static_cast<std::int32_t>(critical_[k].size());
                critical_[k].push_back(static_cast<std::uint32_t>(c));
            }
        }
    }
    reduced_.clear();
    for (int k = 0; k < dim; ++k) {
        linalg::IntMatrix m(critical_[k + 1].size(), critical_[k].size());
        for (std::size_t r = 0; r < critical_[k + 1].size(); ++r) {
            linalg::SparseRow row;
            for (const auto& e : final_rows[k][critical_[k + 1][r]])
                if (alive[k][e.col])
                    row.push_back({static_cast<std::size_t>(position_[k][e.col]), Integer(e.value)});
            m.set_row(r, std::move(row));
        }
        reduced_.push_back(std::move(m));
    }
}

std::size_t ChainReduction::original_count(int k) const
{
    return (k < 0 || k > dimension()) ? 0 : counts_[k];
}

std::size_t ChainReduction::critical_count(int k) const
{
    return (k < 0 || k > dimension()) ? 0 : critical_[k].size();
}

std::size_t ChainReduction::step_count() const
{
    std::size_t n = 0;
    for (const auto& s : steps_)
        n += s.size();
    return n;
}

linalg::IntMatrix ChainReduction::reduced_delta(int k) const
{
    if (k < 0 || k >= dimension())
        return linalg::IntMatrix(critical_count(k + 1), critical_count(k));
    return reduced_[k];
}

std::vector<std::int64_t> ChainReduction::project(int k, std::vector<std::int64_t> x, Ring ring) const
{
    if (x.size() != original_count(k))
        throw DimensionMismatch("cochain length does not match the complex");
    const Arith ar{ring.modulus};
    if (k >= 1) {
        for (const auto& st : steps_[k - 1]) {
            const std::int64_t xt = x[st.tau];
            if (xt == 0)
                continue;
            const std::int64_t c = ar.mul(st.unit, xt);
            for (const auto& [b, a] : st.alpha)
                x[b] = ar.add(x[b], -ar.mul(a, c));
        }
    }
    std::vector<std::int64_t> out;
    out.reserve(critical_count(k));
    for (std::uint32_t c : critical_[k])
        out.push_back(ar.norm(x[c]));
    return out;
}

std::vector<std::int64_t> ChainReduction::include(int k, const std::vector<std::int64_t>& x, Ring ring) const
{
    if (x.size() != critical_count(k))
        throw DimensionMismatch("reduced cochain has the wrong length");
    const Arith ar{ring.modulus};
    std::vector<std::int64_t> out(original_count(k), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        out[critical_[k][i]] = ar.norm(x[i]);
    if (k < dimension()) {
        const auto& steps = steps_[k];
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
            std::int64_t acc = 0;
            for (const auto& [a, bv] : it->beta)
                if (out[a] != 0)
                    acc = ar.add(acc, ar.mul(bv, out[a]));
            out[it->sigma] = ar.norm(-ar.mul(it->unit, acc));
        }
    }
    return out;
}

std::vector<std::int64_t> ChainReduction::homotopy(int k, std::vector<std::int64_t> z, Ring ring) const
{
    if (z.size() != original_count(k + 1))
        throw DimensionMismatch("cochain length does not match the complex");
    std::vector<std::int64_t> out(original_count(k), 0);
    if (k < 0 || k >= dimension())
        return out;
    const Arith ar{ring.modulus};
    const auto& steps = steps_[k];
    std::vector<std::int64_t> coef(steps.size(), 0);
    for (std::size_t j = 0; j < steps.size(); ++j) {
        const auto& st = steps[j];
        const std::int64_t xt = ar.norm(z[st.tau]);
        if (xt == 0)
            continue;
        const std::int64_t c = ar.mul(st.unit, xt);
        coef[j] = c;
        for (const auto& [b, a] : st.alpha)
            z[b] = ar.add(z[b], -ar.mul(a, c));
    }
    for (std::size_t jj = steps.size(); jj-- > 0;) {
        const auto& st = steps[jj];
        std::int64_t acc = 0;
        for (const auto& [a, bv] : st.beta)
            if (out[a] != 0)
                acc = ar.add(acc, ar.mul(bv, out[a]));
        out[st.sigma] = ar.add(coef[jj], -ar.mul(st.unit, acc));
    }
    return out;
}

} // namespace linkform
