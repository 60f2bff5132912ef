#pragma once

#include <cstddef>
#include <vector>

#include "linkform/integer.hpp"

namespace linkform::linalg {

struct Entry {
    std::size_t col;
    Integer value;

    bool operator==(const Entry&) const = default;
};

using SparseRow = std::vector<Entry>;

// Row-compressed sparse integer matrix. Rows keep entries sorted by column and
// never store zeros.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_dense(const std::vector<std::vector<Integer>>& rows, std::size_t cols);
    static IntMatrix from_dense(const std::vector<std::vector<long long>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const;

    Integer at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Integer& v);
    void add_to(std::size_t r, std::size_t c, const Integer& v);

    const SparseRow& row(std::size_t r) const { return data_[r]; }
    void set_row(std::size_t r, SparseRow row);

    // target += factor * source
    void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
    void swap_rows(std::size_t a, std::size_t b);
    void negate_row(std::size_t r);

    IntMatrix transpose() const;
    std::vector<Integer> apply(const std::vector<Integer>& x) const;
    std::vector<std::vector<Integer>> to_dense() const;

    bool is_zero() const { return nnz() == 0; }
    bool operator==(const IntMatrix& other) const = default;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseRow> data_;
};

// Sparse row merge: returns a + factor * b.
SparseRow axpy(const SparseRow& a, const SparseRow& b, const Integer& factor);

} // namespace linkform::linalg
