#include "linkform/int_matrix.hpp"

#include <algorithm>

namespace linkform::linalg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.data_[i].push_back({i, Integer(1)});
    return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<Integer>>& rows, std::size_t cols)
{
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw DimensionMismatch("ragged dense matrix");
        for (std::size_t c = 0; c < cols; ++c)
            if (rows[r][c] != 0)
                m.data_[r].push_back({c, rows[r][c]});
    }
    return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<long long>>& rows, std::size_t cols)
{
    std::vector<std::vector<Integer>> conv(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        conv[r].assign(rows[r].begin(), rows[r].end());
    return from_dense(conv, cols);
}

std::size_t IntMatrix::nnz() const
{
    std::size_t n = 0;
    for (const auto& r : data_)
        n += r.size();
    return n;
}

namespace {
template <class Row>
auto find_col(Row& row, std::size_t c)
{
    return std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
}
} // namespace

Integer IntMatrix::at(std::size_t r, std::size_t c) const
{
    if (r >= rows_ || c >= cols_)
        throw DimensionMismatch("matrix index out of range");
    const auto& row = data_[r];
    auto it = find_col(row, c);
    if (it != row.end() && it->col == c)
        return it->value;
    return 0;
}

void IntMatrix::set(std::size_t r, std::size_t c, const Integer& v)
{
    if (r >= rows_ || c >= cols_)
        throw DimensionMismatch("matrix index out of range");
    auto& row = data_[r];
    auto it = find_col(row, c);
    bool present = it != row.end() && it->col == c;
    if (v == 0) {
        if (present)
            row.erase(it);
    } else if (present) {
        it->value = v;
    } else {
        row.insert(it, {c, v});
    }
}

void IntMatrix::add_to(std::size_t r, std::size_t c, const Integer& v)
{
    set(r, c, at(r, c) + v);
}

void IntMatrix::set_row(std::size_t r, SparseRow row)
{
    std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
    row.erase(std::remove_if(row.begin(), row.end(), [](const Entry& e) { return e.value == 0; }), row.end());
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i].col >= cols_ || (i > 0 && row[i].col == row[i - 1].col))
            throw DimensionMismatch("bad sparse row");
    }
    data_[r] = std::move(row);
}

SparseRow axpy(const SparseRow& a, const SparseRow& b, const Integer& factor)
{
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].col < a[i].col) {
            out.push_back({b[j].col, factor * b[j].value});
            ++j;
        } else {
            Integer v = a[i].value + factor * b[j].value;
            if (v != 0)
                out.push_back({a[i].col, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor)
{
    if (factor == 0)
        return;
    data_[target] = axpy(data_[target], data_[source], factor);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    std::swap(data_[a], data_[b]);
}

void IntMatrix::negate_row(std::size_t r)
{
    for (auto& e : data_[r])
        e.value = -e.value;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& e : data_[r])
            t.data_[e.col].push_back({r, e.value});
    return t;
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& x) const
{
    if (x.size() != cols_)
        throw DimensionMismatch("vector length does not match matrix columns");
    std::vector<Integer> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& e : data_[r])
            y[r] += e.value * x[e.col];
    return y;
}

std::vector<std::vector<Integer>> IntMatrix::to_dense() const
{
    std::vector<std::vector<Integer>> d(rows_, std::vector<Integer>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& e : data_[r])
            d[r][e.col] = e.value;
    return d;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("matrix product dimension mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        SparseRow acc;
        for (const auto& e : a.data_[r])
            acc = axpy(acc, b.data_[e.col], e.value);
        out.data_[r] = std::move(acc);
    }
    return out;
}

} // namespace linkform::linalg
