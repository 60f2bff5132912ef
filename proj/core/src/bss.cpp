#include "linkform/bss.hpp"

#include <algorithm>
#include <numeric>

#include "linkform/errors.hpp"

namespace linkform {

namespace {

using linalg::DenseMatrix;
using linalg::IntVector;
using linalg::Lattice;

int log2_exact(const Integer& v)
{
    int e = 0;
    Integer x = v;
    while (x > 1) {
        if (x % 2 != 0)
            throw std::logic_error("group order is not a power of two");
        x /= 2;
        ++e;
    }
    return e;
}

// Maps between the groups of one degree, in generator coordinates.
struct CoupleData {
    int n;
    Ring ring;
    std::vector<const CohomologyGroup*> modular; // H^k(Z/2^n), k = 0..dim+1
    std::vector<const CohomologyGroup*> integral; // H^k(Z)
    std::vector<DenseMatrix> bockstein; // H^k(Z/2^n) -> H^{k+1}(Z), one column per generator (stored row-major)
    std::vector<DenseMatrix> reduction; // H^k(Z) -> H^k(Z/2^n)
};

DenseMatrix columns_to_matrix(const std::vector<std::vector<std::int64_t>>& cols, std::size_t rows)
{
    DenseMatrix m(rows, IntVector(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r)
            m[r][c] = cols[c][r];
    return m;
}

CoupleData couple(const Space& space, int n)
{
    CoupleData d;
    d.n = n;
    d.ring = Ring::mod(std::int64_t{1} << n);
    const int dim = space.dimension();
    for (int k = 0; k <= dim + 1; ++k) {
        d.modular.push_back(&space.cohomology(d.ring, k));
        d.integral.push_back(&space.cohomology(Ring::integers(), k));
    }
    for (int k = 0; k <= dim; ++k) {
        std::vector<std::vector<std::int64_t>> cols;
        for (std::size_t j = 0; j < d.modular[k]->rank(); ++j) {
            std::vector<std::int64_t> e(d.modular[k]->rank(), 0);
            e[j] = 1;
            cols.push_back(connecting(space, SesSpec::integral(n), class_from_coords(space, d.ring, k, e)).coords);
        }
        d.bockstein.push_back(columns_to_matrix(cols, d.integral[k + 1]->rank()));
        cols.clear();
        for (const auto& g : d.integral[k]->generators)
            cols.push_back(class_of(space, reduce(g, d.ring)).coords);
        d.reduction.push_back(columns_to_matrix(cols, d.modular[k]->rank()));
    }
    d.reduction.push_back(DenseMatrix());
    return d;
}

Lattice multiples(const CohomologyGroup& g, const Integer& s)
{
    DenseMatrix gens;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        IntVector e(g.rank());
        e[j] = s;
        gens.push_back(e);
    }
    return Lattice::span(g.rank(), gens) + g.relations();
}

// Elements of H(Z) killed by s.
Lattice torsion_of_exponent(const CohomologyGroup& g, const Integer& s)
{
    DenseMatrix gens;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        const std::int64_t t = g.order(j);
        if (t == 0)
            continue;
        IntVector e(g.rank());
        e[j] = Integer(t) / gcd(Integer(t), s);
        gens.push_back(e);
    }
    return Lattice::span(g.rank(), gens);
}

struct Lifted {
    IntVector image;     // d_r(x) coordinates in H^{k+1}(Z/2^n)
    std::int64_t order;  // order of the integral lift y
};

// y with s * y = b in H(Z), free parameters zero.
IntVector divide_in_group(const CohomologyGroup& g, const IntVector& b, const Integer& s)
{
    IntVector y(g.rank());
    for (std::size_t j = 0; j < g.rank(); ++j) {
        const std::int64_t t = g.order(j);
        if (t == 0) {
            if (b[j] % s != 0)
                throw std::logic_error("Bockstein image is not divisible in the free part");
            y[j] = b[j] / s;
            continue;
        }
        const Integer tt = t;
        const Integer bj = mod_floor(b[j], tt);
        const Integer gg = gcd(s, tt);
        if (bj % gg != 0)
            throw std::logic_error("Bockstein image is not divisible in a torsion summand");
        const Integer tg = tt / gg;
        if (tg == 1) {
            y[j] = 0;
        } else {
            std::int64_t inv = inverse_mod(to_int64(mod_floor(s / gg, tg)), to_int64(tg));
            y[j] = mod_floor((bj / gg) * inv, tg);
        }
    }
    return y;
}

std::int64_t element_order(const CohomologyGroup& g, const IntVector& y)
{
    std::int64_t order = 1;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        const std::int64_t t = g.order(j);
        if (t == 0) {
            if (y[j] != 0)
                return 0;
            continue;
        }
        const std::int64_t yj = to_int64(mod_floor(y[j], Integer(t)));
        const std::int64_t o = t / std::gcd(yj, t);
        order = std::lcm(order, o);
    }
    return order;
}

Lifted differential(const CoupleData& d, int k, int r, const IntVector& x)
{
    const Integer s = Integer(1) << (d.n * (r - 1));
    const auto b = linalg::mat_vec(d.bockstein[k], x);
    const auto y = divide_in_group(*d.integral[k + 1], b, s);
    Lifted out;
    out.order = element_order(*d.integral[k + 1], y);
    if (d.integral[k + 1]->rank() == 0)
        out.image = IntVector(d.modular[k + 1]->rank());
    else
        out.image = linalg::mat_vec(d.reduction[k + 1], y);
    return out;
}

struct PageLattices {
    std::vector<Lattice> cycles, boundaries;
};

PageLattices page_lattices(const CoupleData& d, int dim, int r)
{
    PageLattices p;
    const Integer s = Integer(1) << (d.n * (r - 1));
    for (int k = 0; k <= dim; ++k) {
        const auto& mod_k = *d.modular[k];
        const auto target = multiples(*d.integral[k + 1], s);
        p.cycles.push_back(linalg::preimage(d.bockstein[k], mod_k.rank(), target) + mod_k.relations());
        const auto ker = torsion_of_exponent(*d.integral[k], s);
        Lattice bnd = mod_k.relations();
        if (d.integral[k]->rank() > 0)
            bnd = bnd + linalg::image(d.reduction[k], mod_k.rank(), ker);
        p.boundaries.push_back(bnd);
    }
    return p;
}

int length_of(const Lattice& sub, const Lattice& super)
{
    if (super.dim() == 0)
        return 0;
    return log2_exact(sub.index_in(super));
}

} // namespace

BssPage bss_page(const Space& space, int n, int r)
{
    if (n < 1 || r < 1)
        throw ValidationError("Bockstein spectral sequence needs n >= 1 and r >= 1");
    const int dim = space.dimension();
    const auto d = couple(space, n);
    const auto lat = page_lattices(d, dim, r);
    BssPage page;
    page.n = n;
    page.r = r;
    for (int k = 0; k <= dim; ++k) {
        BssPiece piece;
        piece.degree = k;
        piece.cycles = lat.cycles[k];
        piece.boundaries = lat.boundaries[k];
        piece.length = length_of(piece.boundaries, piece.cycles);
        const Lattice next_bnd = k < dim ? lat.boundaries[k + 1] : Lattice::full(d.modular[k + 1]->rank());
        Lattice image = next_bnd;
        for (const auto& z : piece.cycles.basis()) {
            auto lifted = differential(d, k, r, z);
            auto v = next_bnd.reduce(lifted.image);
            bool nonzero = std::any_of(v.begin(), v.end(), [](const Integer& t) { return t != 0; });
            if (nonzero)
                piece.lift_orders.push_back(lifted.order);
            image = image + Lattice::span(next_bnd.dim(), {v});
            piece.differential.push_back(std::move(v));
        }
        piece.image_length = k < dim ? length_of(next_bnd, image) : 0;
        page.pieces.push_back(std::move(piece));
    }
    return page;
}

std::vector<std::string> check_bss_page(const Space& space, int n, int r)
{
    std::vector<std::string> failures;
    const int dim = space.dimension();
    const auto d = couple(space, n);
    const auto cur = page_lattices(d, dim, r);
    const auto nxt = page_lattices(d, dim, r + 1);
    const std::string where = "n=" + std::to_string(n) + " r=" + std::to_string(r);

    // kernels[k] = ker(d_r on E_r^k), images[k] = im(d_r into E_r^k), both
    // as lattices containing the page-r boundaries.
    std::vector<Lattice> kernels, images;
    for (int k = 0; k <= dim; ++k)
        images.push_back(cur.boundaries[k]);
    for (int k = 0; k <= dim; ++k) {
        if (k == dim) {
            kernels.push_back(cur.cycles[k]);
            continue;
        }
        const std::size_t gk = d.modular[k]->rank();
        const std::size_t gk1 = d.modular[k + 1]->rank();
        const auto& basis = cur.cycles[k].basis();
        DenseMatrix dmat(gk1, IntVector(basis.size()));
        DenseMatrix igens;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            auto img = differential(d, k, r, basis[i]).image;
            if (!cur.cycles[k + 1].contains(img))
                failures.push_back(where + ": d_r leaves the cycles in degree " + std::to_string(k + 1));
            else if (k + 1 < dim && !cur.boundaries[k + 2].contains(differential(d, k + 1, r, img).image))
                failures.push_back(where + ": d_r d_r != 0 from degree " + std::to_string(k));
            for (std::size_t row = 0; row < gk1; ++row)
                dmat[row][i] = img[row];
            igens.push_back(std::move(img));
        }
        images[k + 1] = images[k + 1] + Lattice::span(gk1, igens);
        const auto coeffs = linalg::preimage(dmat, basis.size(), cur.boundaries[k + 1]);
        DenseMatrix kgens;
        for (const auto& c : coeffs.basis()) {
            IntVector v(gk);
            for (std::size_t i = 0; i < basis.size(); ++i)
                for (std::size_t t = 0; t < gk; ++t)
                    v[t] += c[i] * basis[i][t];
            kgens.push_back(std::move(v));
        }
        kernels.push_back(Lattice::span(gk, kgens) + cur.boundaries[k]);
    }
    for (int k = 0; k <= dim; ++k) {
        const std::string deg = " in degree " + std::to_string(k);
        if (!(nxt.cycles[k] == kernels[k]))
            failures.push_back(where + ": next-page cycles differ from ker d_r" + deg);
        if (!(nxt.boundaries[k] == images[k]))
            failures.push_back(where + ": next-page boundaries differ from im d_r" + deg);
        const int lhs = length_of(nxt.boundaries[k], nxt.cycles[k]);
        const int ker_len = length_of(cur.boundaries[k], kernels[k]);
        const int im_len = length_of(cur.boundaries[k], images[k]);
        if (lhs != ker_len - im_len)
            failures.push_back(where + ": length(E_{r+1}) != length(ker) - length(im)" + deg);
    }
    return failures;
}

} // namespace linkform
