#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "linkform/complex.hpp"
#include "linkform/int_matrix.hpp"
#include "linkform/integer.hpp"

namespace linkform {

// Coefficient ring: the integers (modulus 0) or Z/m.
struct Ring {
    std::int64_t modulus = 0;

    static Ring integers() { return Ring{0}; }
    static Ring mod(std::int64_t m);

    bool is_integers() const { return modulus == 0; }
    std::int64_t normalize(std::int64_t v) const { return mod_floor(v, modulus); }
    std::string name() const;
    bool operator==(const Ring&) const = default;
};

// Every simplex of a complex, sorted lexicographically within each degree,
// plus a table giving the index of each face of each simplex by vertex
// position mask.
class SimplexIndex {
public:
    explicit SimplexIndex(const SimplicialComplex& k);

    int dimension() const { return static_cast<int>(counts_.size()) - 1; }
    std::size_t count(int k) const;
    const Vertex* vertices(int k, std::size_t i) const { return verts_[k].data() + i * (k + 1); }
    Simplex simplex(int k, std::size_t i) const;
    std::optional<std::size_t> find(const Simplex& s) const;

    // Index of the face of simplex i (degree k) made of the vertices at the
    // positions set in mask; the face has degree popcount(mask) - 1.
    std::uint32_t face(int k, std::size_t i, unsigned mask) const
    {
        return faces_[k][(i << (k + 1)) | mask];
    }
    // Face opposite position j.
    std::uint32_t boundary_face(int k, std::size_t i, int j) const
    {
        return face(k, i, ((1u << (k + 1)) - 1) & ~(1u << j));
    }

private:
    std::vector<std::size_t> counts_;
    std::vector<std::vector<Vertex>> verts_;
    std::vector<std::vector<std::uint32_t>> faces_;
};

struct Cochain {
    int degree = 0;
    Ring ring;
    std::vector<std::int64_t> values;

    bool is_zero() const;
    bool operator==(const Cochain&) const = default;
};

struct CochainComplex {
    Ring ring;
    std::vector<std::vector<Simplex>> basis;
    std::vector<linalg::IntMatrix> delta; // delta[k] : C^k -> C^{k+1}, rows are (k+1)-simplices
};

CochainComplex coboundary_matrices(const SimplicialComplex& k, Ring ring);

Cochain zero_cochain(const SimplexIndex& idx, int degree, Ring ring);
Cochain make_cochain(const SimplexIndex& idx, int degree, Ring ring, std::vector<std::int64_t> values);
Cochain random_cochain(const SimplexIndex& idx, int degree, Ring ring, std::mt19937_64& rng);

// (delta f)(s) = sum_j (-1)^j f(d_j s)
Cochain coboundary(const SimplexIndex& idx, const Cochain& f);
bool is_cocycle(const SimplexIndex& idx, const Cochain& f);

Cochain add(const Cochain& a, const Cochain& b);
Cochain subtract(const Cochain& a, const Cochain& b);
Cochain scale(const Cochain& a, std::int64_t c);
// Reduction to a ring whose modulus divides the current one.
Cochain reduce(const Cochain& a, Ring target);
// Coefficientwise lift to Z with values in [0, m).
Cochain lift(const Cochain& a);
// Exact division of an integral cochain.
Cochain divide_exact(const Cochain& a, std::int64_t d);

// Pullback along a simplicial map given on vertices. Over Z the value picks
// up the sign of the permutation sorting the image vertices. Throws if the
// map collapses a simplex.
Cochain pullback(const SimplexIndex& source, const SimplexIndex& target, const std::vector<Vertex>& vertex_map,
                 const Cochain& u);

// Cochain-level suspension isomorphism into the suspension built by
// suspension(): u(s) moves to the simplex s + {first apex}.
Cochain suspend(const SimplexIndex& base, const SimplexIndex& susp, const Cochain& u);

} // namespace linkform
