#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "linkform/int_matrix.hpp"

namespace linkform::linalg {

// Dense GF(2) matrix, one bit per entry, rows packed into 64-bit words.
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool v);
    void flip(std::size_t r, std::size_t c);

    // Row echelon in place; returns the rank.
    std::size_t eliminate();

private:
    std::uint64_t* row_ptr(std::size_t r) { return words_.data() + r * stride_; }
    const std::uint64_t* row_ptr(std::size_t r) const { return words_.data() + r * stride_; }

    std::size_t rows_, cols_, stride_;
    std::vector<std::uint64_t> words_;
};

// Rank of A reduced mod 2. Uses the packed dense path when more than 5% of
// the entries are odd, a sparse elimination otherwise.
std::size_t rank_gf2(const IntMatrix& a);
std::size_t rank_gf2_dense(const IntMatrix& a);
std::size_t rank_gf2_sparse(const IntMatrix& a);

} // namespace linkform::linalg
