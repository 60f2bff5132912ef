#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linkform/cohomology.hpp"
#include "linkform/lattice.hpp"

namespace linkform {

// One graded piece E_r^k = cycles / boundaries, both lattices of coordinate
// vectors of H^k(K; Z/2^n) containing its relations.
struct BssPiece {
    int degree = 0;
    linalg::Lattice cycles{0};
    linalg::Lattice boundaries{0};
    int length = 0; // log2 |E_r^k|
    // d_r of each basis vector of `cycles`, as coordinates in H^{k+1}(K; Z/2^n)
    // reduced modulo the boundaries of degree k+1.
    std::vector<linalg::IntVector> differential;
    int image_length = 0; // log2 |d_r(E_r^k)|
    // Orders of the integral lifts a' of nonzero differentials.
    std::vector<std::int64_t> lift_orders;
};

// Page r of the 2^n-adic Bockstein spectral sequence of the exact couple
// H(Z) --2^n--> H(Z) --red--> H(Z/2^n) --beta~--> H(Z). E_1 = H^*(Z/2^n) and
// d_1 is the Bockstein. d_r(x) is the reduction of any y with
// 2^{n(r-1)} y = beta~(x), which is the class of a' for a lift a with
// delta a = 2^{nr} a'.
struct BssPage {
    int n = 1;
    int r = 1;
    std::vector<BssPiece> pieces; // degrees 0 .. dim

    int length(int k) const { return (k < 0 || k >= static_cast<int>(pieces.size())) ? 0 : pieces[k].length; }
    int differential_length(int k) const
    {
        return (k < 0 || k >= static_cast<int>(pieces.size())) ? 0 : pieces[k].image_length;
    }
};

BssPage bss_page(const Space& space, int n, int r);

// Internal consistency of page r against page r+1: d_r d_r = 0, the cycles
// and boundaries of page r+1 equal ker d_r and im d_r, and
// length(E_{r+1}) = length(ker d_r) - length(im d_r). Returns failure
// descriptions; empty when everything holds.
std::vector<std::string> check_bss_page(const Space& space, int n, int r);

} // namespace linkform
