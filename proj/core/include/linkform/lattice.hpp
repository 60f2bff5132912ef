#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "linkform/integer.hpp"

namespace linkform::linalg {

using IntVector = std::vector<Integer>;
using DenseMatrix = std::vector<IntVector>; // row-major

// Sublattice of Z^n held as a row Hermite normal form: pivot columns strictly
// increase, pivots are positive, entries above a pivot lie in [0, pivot).
// Finite abelian groups are handled as quotients of such lattices.
class Lattice {
public:
    explicit Lattice(std::size_t dim) : dim_(dim) {}

    static Lattice span(std::size_t dim, const DenseMatrix& generators);
    // Span of d_i e_i; zero entries contribute nothing.
    static Lattice diagonal(const IntVector& d);
    static Lattice full(std::size_t dim);

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return basis_.size(); }
    const DenseMatrix& basis() const { return basis_; }

    // Canonical representative of v modulo the lattice.
    IntVector reduce(IntVector v) const;
    bool contains(const IntVector& v) const;
    bool contains(const Lattice& other) const;
    // Integer c with v = sum c_i basis_i; throws NotInKernel if v is outside.
    IntVector coordinates(const IntVector& v) const;

    Lattice operator+(const Lattice& other) const;
    bool operator==(const Lattice& other) const = default;

    // [super : *this]; both must have the same rank and *this must lie in super.
    Integer index_in(const Lattice& super) const;

private:
    std::size_t pivot_col(std::size_t i) const;

    std::size_t dim_;
    DenseMatrix basis_;
};

// {x in Z^a : F x in target}, F given as b rows of length a.
Lattice preimage(const DenseMatrix& f, std::size_t a, const Lattice& target);
// F(source) + nothing else, as a lattice in Z^b.
Lattice image(const DenseMatrix& f, std::size_t b, const Lattice& source);

// Some x in Z^a with F x - rhs in target, or nothing.
std::optional<IntVector> solve_affine(const DenseMatrix& f, std::size_t a, const Lattice& target, const IntVector& rhs);

IntVector mat_vec(const DenseMatrix& f, const IntVector& x);

} // namespace linkform::linalg
