#include "linkform/lattice.hpp"

#include <algorithm>

#include "linkform/int_matrix.hpp"
#include "linkform/snf.hpp"

namespace linkform::linalg {

namespace {

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

void axpy_dense(IntVector& dst, const IntVector& src, const Integer& f)
{
    if (f == 0)
        return;
    for (std::size_t i = 0; i < dst.size(); ++i)
        if (src[i] != 0)
            dst[i] += f * src[i];
}

bool is_zero(const IntVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

} // namespace

Lattice Lattice::span(std::size_t dim, const DenseMatrix& generators)
{
    DenseMatrix rows;
    for (const auto& g : generators) {
        if (g.size() != dim)
            throw DimensionMismatch("lattice generator has wrong length");
        if (!is_zero(g))
            rows.push_back(g);
    }
    std::size_t k = 0;
    for (std::size_t c = 0; c < dim && k < rows.size(); ++c) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = k; i < rows.size(); ++i)
                if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])))
                    best = i;
            if (best == rows.size())
                break;
            std::swap(rows[k], rows[best]);
            bool done = true;
            for (std::size_t i = k + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0)
                    continue;
                axpy_dense(rows[i], rows[k], -floor_div(rows[i][c], rows[k][c]));
                if (rows[i][c] != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (rows[k][c] == 0)
            continue;
        if (rows[k][c] < 0)
            for (auto& x : rows[k])
                x = -x;
        for (std::size_t i = 0; i < k; ++i)
            axpy_dense(rows[i], rows[k], -floor_div(rows[i][c], rows[k][c]));
        ++k;
    }
    rows.resize(k);
    Lattice l(dim);
    l.basis_ = std::move(rows);
    return l;
}

Lattice Lattice::diagonal(const IntVector& d)
{
    DenseMatrix gens;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0)
            continue;
        IntVector g(d.size());
        g[i] = abs(d[i]);
        gens.push_back(std::move(g));
    }
    return span(d.size(), gens);
}

Lattice Lattice::full(std::size_t dim)
{
    return diagonal(IntVector(dim, 1));
}

std::size_t Lattice::pivot_col(std::size_t i) const
{
    const auto& r = basis_[i];
    for (std::size_t c = 0; c < dim_; ++c)
        if (r[c] != 0)
            return c;
    return dim_;
}

IntVector Lattice::reduce(IntVector v) const
{
    if (v.size() != dim_)
        throw DimensionMismatch("vector length does not match lattice dimension");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        std::size_t c = pivot_col(i);
        axpy_dense(v, basis_[i], -floor_div(v[c], basis_[i][c]));
    }
    return v;
}

bool Lattice::contains(const IntVector& v) const
{
    return is_zero(reduce(v));
}

bool Lattice::contains(const Lattice& other) const
{
    return std::all_of(other.basis_.begin(), other.basis_.end(), [this](const IntVector& v) { return contains(v); });
}

IntVector Lattice::coordinates(const IntVector& v) const
{
    IntVector rest = v;
    IntVector coords(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        std::size_t c = pivot_col(i);
        if (rest[c] % basis_[i][c] != 0)
            throw NotInKernel("vector is not in the lattice");
        coords[i] = rest[c] / basis_[i][c];
        axpy_dense(rest, basis_[i], -coords[i]);
    }
    if (!is_zero(rest))
        throw NotInKernel("vector is not in the lattice");
    return coords;
}

Lattice Lattice::operator+(const Lattice& other) const
{
    if (other.dim_ != dim_)
        throw DimensionMismatch("lattice dimensions differ");
    DenseMatrix gens = basis_;
    gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
    return span(dim_, gens);
}

Integer Lattice::index_in(const Lattice& super) const
{
    if (super.rank() != rank() || !super.contains(*this))
        throw ValidationError("index requires a sublattice of equal rank");
    Integer num = 1, den = 1;
    for (std::size_t i = 0; i < rank(); ++i) {
        num *= basis_[i][pivot_col(i)];
        den *= super.basis_[i][super.pivot_col(i)];
    }
    return num / den;
}

IntVector mat_vec(const DenseMatrix& f, const IntVector& x)
{
    IntVector y(f.size());
    for (std::size_t r = 0; r < f.size(); ++r) {
        if (f[r].size() != x.size())
            throw DimensionMismatch("matrix/vector size mismatch");
        for (std::size_t c = 0; c < x.size(); ++c)
            if (f[r][c] != 0 && x[c] != 0)
                y[r] += f[r][c] * x[c];
    }
    return y;
}

Lattice preimage(const DenseMatrix& f, std::size_t a, const Lattice& target)
{
    const std::size_t b = target.dim();
    if (f.size() != b)
        throw DimensionMismatch("map target does not match lattice dimension");
    const std::size_t k = target.rank();
    IntMatrix m(b, a + k);
    for (std::size_t r = 0; r < b; ++r) {
        for (std::size_t c = 0; c < a; ++c)
            if (f[r][c] != 0)
                m.set(r, c, f[r][c]);
        for (std::size_t j = 0; j < k; ++j)
            if (target.basis()[j][r] != 0)
                m.set(r, a + j, -target.basis()[j][r]);
    }
    DenseMatrix gens;
    for (auto& g : kernel_mod(m, 0)) {
        g.resize(a);
        gens.push_back(std::move(g));
    }
    return Lattice::span(a, gens);
}

Lattice image(const DenseMatrix& f, std::size_t b, const Lattice& source)
{
    DenseMatrix gens;
    for (const auto& v : source.basis())
        gens.push_back(mat_vec(f, v));
    return Lattice::span(b, gens);
}

std::optional<IntVector> solve_affine(const DenseMatrix& f, std::size_t a, const Lattice& target, const IntVector& rhs)
{
    const std::size_t b = target.dim();
    if (f.size() != b || rhs.size() != b)
        throw DimensionMismatch("map target does not match lattice dimension");
    // Rows (F e_i, e_i) and (t, 0). Reducing (rhs, 0) clears the first block
    // exactly when rhs lies in F(Z^a) + target, leaving (0, -x).
    DenseMatrix gens;
    for (std::size_t i = 0; i < a; ++i) {
        IntVector row(b + a);
        for (std::size_t r = 0; r < b; ++r)
            row[r] = f[r][i];
        row[b + i] = 1;
        gens.push_back(std::move(row));
    }
    for (const auto& t : target.basis()) {
        IntVector row(b + a);
        std::copy(t.begin(), t.end(), row.begin());
        gens.push_back(std::move(row));
    }
    IntVector v(b + a);
    std::copy(rhs.begin(), rhs.end(), v.begin());
    v = Lattice::span(b + a, gens).reduce(std::move(v));
    for (std::size_t r = 0; r < b; ++r)
        if (v[r] != 0)
            return std::nullopt;
    IntVector x(a);
    for (std::size_t i = 0; i < a; ++i)
        x[i] = -v[b + i];
    return x;
}

} // namespace linkform::linalg
