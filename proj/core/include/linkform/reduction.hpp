#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "linkform/cochains.hpp"
#include "linkform/int_matrix.hpp"

namespace linkform {

// One cancellation of a unit entry u = delta(sigma)(tau) between a k-cell
// sigma and a (k+1)-cell tau. alpha is the sigma column and beta the tau row
// of the coboundary at the time of cancellation, both without the pivot.
struct ReductionStep {
    std::uint32_t sigma = 0;
    std::uint32_t tau = 0;
    std::int64_t unit = 1;
    std::vector<std::pair<std::uint32_t, std::int64_t>> alpha; // (k+1)-cells
    std::vector<std::pair<std::uint32_t, std::int64_t>> beta;  // k-cells
};

// Deformation retraction of the simplicial cochain complex onto a smaller
// complex C', obtained by cancelling unit entries of the coboundary. Carries
// the projection p : C -> C', the inclusion i : C' -> C and the homotopy
// h : C^{k+1} -> C^k with id - i p = delta h + h delta and p i = id.
class ChainReduction {
public:
    explicit ChainReduction(const SimplexIndex& idx);

    int dimension() const { return static_cast<int>(critical_.size()) - 1; }
    std::size_t original_count(int k) const;
    std::size_t critical_count(int k) const;
    const std::vector<std::uint32_t>& critical(int k) const { return critical_[k]; }
    std::size_t step_count() const;

    // delta' : C'^k -> C'^{k+1}; zero matrices outside 0 <= k < dim.
    linalg::IntMatrix reduced_delta(int k) const;

    std::vector<std::int64_t> project(int k, std::vector<std::int64_t> x, Ring ring) const;
    std::vector<std::int64_t> include(int k, const std::vector<std::int64_t>& x, Ring ring) const;
    // z in C^{k+1}, result in C^k.
    std::vector<std::int64_t> homotopy(int k, std::vector<std::int64_t> z, Ring ring) const;

private:
    template <class T>
    void build(const SimplexIndex& idx);

    std::vector<std::size_t> counts_;
    std::vector<std::vector<std::uint32_t>> critical_;
    std::vector<std::vector<std::int32_t>> position_; // cell -> index in critical_, or -1
    std::vector<std::vector<ReductionStep>> steps_;   // steps_[k]: cancellations inside delta_k
    std::vector<linalg::IntMatrix> reduced_;          // reduced_[k] = delta'_k
};

} // namespace linkform
