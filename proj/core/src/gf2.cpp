#include "linkform/gf2.hpp"

#include <algorithm>
#include <map>

namespace linkform::linalg {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), words_(rows * ((cols + 63) / 64), 0)
{
}

bool BitMatrix::get(std::size_t r, std::size_t c) const
{
    return (row_ptr(r)[c / 64] >> (c % 64)) & 1u;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v)
{
    std::uint64_t mask = std::uint64_t{1} << (c % 64);
    if (v)
        row_ptr(r)[c / 64] |= mask;
    else
        row_ptr(r)[c / 64] &= ~mask;
}

void BitMatrix::flip(std::size_t r, std::size_t c)
{
    row_ptr(r)[c / 64] ^= std::uint64_t{1} << (c % 64);
}

std::size_t BitMatrix::eliminate()
{
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        std::size_t pivot = rank;
        while (pivot < rows_ && !(row_ptr(pivot)[w] & mask))
            ++pivot;
        if (pivot == rows_)
            continue;
        if (pivot != rank)
            std::swap_ranges(row_ptr(pivot), row_ptr(pivot) + stride_, row_ptr(rank));
        const std::uint64_t* src = row_ptr(rank);
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            std::uint64_t* dst = row_ptr(r);
            if (dst[w] & mask)
                for (std::size_t k = w; k < stride_; ++k)
                    dst[k] ^= src[k];
        }
        ++rank;
    }
    return rank;
}

namespace {

std::vector<std::vector<std::size_t>> odd_support(const IntMatrix& a)
{
    std::vector<std::vector<std::size_t>> rows(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (const auto& e : a.row(r))
            if (boost::multiprecision::bit_test(abs(e.value), 0))
                rows[r].push_back(e.col);
    return rows;
}

} // namespace

std::size_t rank_gf2_dense(const IntMatrix& a)
{
    BitMatrix m(a.rows(), a.cols());
    auto rows = odd_support(a);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c : rows[r])
            m.set(r, c, true);
    return m.eliminate();
}

std::size_t rank_gf2_sparse(const IntMatrix& a)
{
    // Pivot rows keyed by leading column; each incoming row is reduced
    // against them until it is zero or has a fresh leading column.
    std::map<std::size_t, std::vector<std::size_t>> pivots;
    std::vector<std::size_t> scratch;
    for (auto& row : odd_support(a)) {
        while (!row.empty()) {
            auto it = pivots.find(row.front());
            if (it == pivots.end()) {
                pivots.emplace(row.front(), std::move(row));
                break;
            }
            scratch.clear();
            std::set_symmetric_difference(row.begin(), row.end(), it->second.begin(), it->second.end(),
                                          std::back_inserter(scratch));
            row.swap(scratch);
        }
    }
    return pivots.size();
}

std::size_t rank_gf2(const IntMatrix& a)
{
    const double cells = static_cast<double>(a.rows()) * static_cast<double>(a.cols());
    if (cells == 0)
        return 0;
    std::size_t odd = 0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (const auto& e : a.row(r))
            odd += boost::multiprecision::bit_test(abs(e.value), 0) ? 1 : 0;
    return static_cast<double>(odd) / cells > 0.05 ? rank_gf2_dense(a) : rank_gf2_sparse(a);
}

} // namespace linkform::linalg
