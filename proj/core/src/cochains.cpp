#include "linkform/cochains.hpp"

#include <algorithm>
#include <numeric>

#include "linkform/errors.hpp"

namespace linkform {

Ring Ring::mod(std::int64_t m)
{
    if (m < 2)
        throw ValidationError("coefficient modulus must be at least 2");
    return Ring{m};
}

std::string Ring::name() const
{
    return is_integers() ? "Z" : "Z/" + std::to_string(modulus);
}

SimplexIndex::SimplexIndex(const SimplicialComplex& k)
{
    if (k.dimension > 12)
        throw ValidationError("complexes above dimension 12 are not supported");
    const int dim = k.dimension;
    counts_.assign(dim + 1, 0);
    verts_.resize(dim + 1);
    faces_.resize(dim + 1);
    for (int d = 0; d <= dim; ++d) {
        const std::size_t w = d + 1;
        std::vector<Vertex> flat;
        for (const auto& f : k.facets) {
            const unsigned n = static_cast<unsigned>(f.size());
            if (n < w)
                continue;
            std::vector<bool> pick(n, false);
            std::fill(pick.end() - w, pick.end(), true);
            do {
                for (unsigned j = 0; j < n; ++j)
                    if (pick[j])
                        flat.push_back(f[j]);
            } while (std::next_permutation(pick.begin(), pick.end()));
        }
        const std::size_t total = flat.size() / w;
        std::vector<std::uint32_t> order(total);
        std::iota(order.begin(), order.end(), 0u);
        auto less = [&](std::uint32_t a, std::uint32_t b) {
            return std::lexicographical_compare(flat.begin() + a * w, flat.begin() + (a + 1) * w, flat.begin() + b * w,
                                                flat.begin() + (b + 1) * w);
        };
        std::sort(order.begin(), order.end(), less);
        auto& out = verts_[d];
        for (std::size_t t = 0; t < total; ++t) {
            if (t > 0 && !less(order[t - 1], order[t]))
                continue;
            out.insert(out.end(), flat.begin() + order[t] * w, flat.begin() + (order[t] + 1) * w);
        }
        counts_[d] = out.size() / w;
    }
    for (int d = 0; d <= dim; ++d) {
        const unsigned masks = 1u << (d + 1);
        const unsigned full = masks - 1;
        auto& table = faces_[d];
        table.assign(counts_[d] * masks, 0);
        for (std::size_t i = 0; i < counts_[d]; ++i) {
            std::uint32_t* row = table.data() + i * masks;
            row[full] = static_cast<std::uint32_t>(i);
            if (d == 0)
                continue;
            const Vertex* v = vertices(d, i);
            for (int j = 0; j <= d; ++j) {
                Simplex s;
                for (int t = 0; t <= d; ++t)
                    if (t != j)
                        s.push_back(v[t]);
                row[full & ~(1u << j)] = static_cast<std::uint32_t>(*find(s));
            }
            for (unsigned mask = 1; mask < full; ++mask) {
                if (__builtin_popcount(mask) == d)
                    continue;
                const int j = __builtin_ctz(~mask);
                const unsigned low = mask & ((1u << j) - 1);
                const unsigned compressed = low | ((mask >> (j + 1)) << j);
                row[mask] = face(d - 1, row[full & ~(1u << j)], compressed);
            }
        }
    }
}

std::size_t SimplexIndex::count(int k) const
{
    if (k < 0 || k > dimension())
        return 0;
    return counts_[k];
}

Simplex SimplexIndex::simplex(int k, std::size_t i) const
{
    const Vertex* v = vertices(k, i);
    return Simplex(v, v + k + 1);
}

std::optional<std::size_t> SimplexIndex::find(const Simplex& s) const
{
    const int k = static_cast<int>(s.size()) - 1;
    if (k < 0 || k > dimension())
        return std::nullopt;
    std::size_t lo = 0, hi = counts_[k];
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        const Vertex* v = vertices(k, mid);
        if (std::lexicographical_compare(v, v + k + 1, s.begin(), s.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < counts_[k] && std::equal(s.begin(), s.end(), vertices(k, lo)))
        return lo;
    return std::nullopt;
}

bool Cochain::is_zero() const
{
    return std::all_of(values.begin(), values.end(), [](std::int64_t v) { return v == 0; });
}

CochainComplex coboundary_matrices(const SimplicialComplex& k, Ring ring)
{
    SimplexIndex idx(k);
    CochainComplex c;
    c.ring = ring;
    for (int d = 0; d <= idx.dimension(); ++d) {
        std::vector<Simplex> b;
        for (std::size_t i = 0; i < idx.count(d); ++i)
            b.push_back(idx.simplex(d, i));
        c.basis.push_back(std::move(b));
    }
    for (int d = 0; d < idx.dimension(); ++d) {
        linalg::IntMatrix m(idx.count(d + 1), idx.count(d));
        for (std::size_t s = 0; s < idx.count(d + 1); ++s) {
            linalg::SparseRow row;
            for (int j = 0; j <= d + 1; ++j) {
                std::int64_t v = ring.normalize(j % 2 ? -1 : 1);
                if (v != 0)
                    row.push_back({idx.boundary_face(d + 1, s, j), Integer(v)});
            }
            m.set_row(s, std::move(row));
        }
        c.delta.push_back(std::move(m));
    }
    return c;
}

Cochain zero_cochain(const SimplexIndex& idx, int degree, Ring ring)
{
    return Cochain{degree, ring, std::vector<std::int64_t>(idx.count(degree), 0)};
}

Cochain make_cochain(const SimplexIndex& idx, int degree, Ring ring, std::vector<std::int64_t> values)
{
    if (values.size() != idx.count(degree))
        throw DimensionMismatch("cochain length does not match the number of simplices");
    for (auto& v : values)
        v = ring.normalize(v);
    return Cochain{degree, ring, std::move(values)};
}

Cochain random_cochain(const SimplexIndex& idx, int degree, Ring ring, std::mt19937_64& rng)
{
    Cochain c = zero_cochain(idx, degree, ring);
    const std::int64_t m = ring.is_integers() ? 7 : ring.modulus;
    std::uniform_int_distribution<std::int64_t> dist(ring.is_integers() ? -3 : 0, ring.is_integers() ? 3 : m - 1);
    for (auto& v : c.values)
        v = dist(rng);
    return c;
}

Cochain coboundary(const SimplexIndex& idx, const Cochain& f)
{
    const int k = f.degree;
    if (f.values.size() != idx.count(k))
        throw DimensionMismatch("cochain does not belong to this complex");
    Cochain out = zero_cochain(idx, k + 1, f.ring);
    if (k < 0)
        return out;
    for (std::size_t s = 0; s < idx.count(k + 1); ++s) {
        std::int64_t acc = 0;
        for (int j = 0; j <= k + 1; ++j) {
            std::int64_t v = f.values[idx.boundary_face(k + 1, s, j)];
            acc = checked_add(acc, j % 2 ? -v : v);
        }
        out.values[s] = f.ring.normalize(acc);
    }
    return out;
}

bool is_cocycle(const SimplexIndex& idx, const Cochain& f)
{
    return coboundary(idx, f).is_zero();
}

namespace {
void check_compatible(const Cochain& a, const Cochain& b)
{
    if (!(a.ring == b.ring))
        throw RingMismatch("cochains have different coefficient rings");
    if (a.degree != b.degree || a.values.size() != b.values.size())
        throw DimensionMismatch("cochains have different degrees or complexes");
}
} // namespace

Cochain add(const Cochain& a, const Cochain& b)
{
    check_compatible(a, b);
    Cochain c = a;
    for (std::size_t i = 0; i < c.values.size(); ++i)
        c.values[i] = a.ring.normalize(checked_add(a.values[i], b.values[i]));
    return c;
}

Cochain subtract(const Cochain& a, const Cochain& b)
{
    return add(a, scale(b, -1));
}

Cochain scale(const Cochain& a, std::int64_t c)
{
    Cochain out = a;
    const std::int64_t cc = a.ring.normalize(c);
    for (auto& v : out.values)
        v = a.ring.normalize(a.ring.is_integers() ? checked_mul(v, cc) : static_cast<std::int64_t>(static_cast<__int128>(v) * cc % a.ring.modulus));
    return out;
}

Cochain reduce(const Cochain& a, Ring target)
{
    if (target.is_integers() && !a.ring.is_integers())
        throw RingMismatch("cannot reduce Z/m coefficients to Z");
    if (!a.ring.is_integers() && !target.is_integers() && a.ring.modulus % target.modulus != 0)
        throw RingMismatch("target modulus must divide the source modulus");
    Cochain out = a;
    out.ring = target;
    for (auto& v : out.values)
        v = target.normalize(v);
    return out;
}

Cochain lift(const Cochain& a)
{
    Cochain out = a;
    out.ring = Ring::integers();
    return out;
}

Cochain divide_exact(const Cochain& a, std::int64_t d)
{
    if (!a.ring.is_integers())
        throw RingMismatch("exact division needs integral cochains");
    Cochain out = a;
    for (auto& v : out.values) {
        if (v % d != 0)
            throw NotACocycle("cochain is not divisible by " + std::to_string(d));
        v /= d;
    }
    return out;
}

Cochain pullback(const SimplexIndex& source, const SimplexIndex& target, const std::vector<Vertex>& vertex_map,
                 const Cochain& u)
{
    const int k = u.degree;
    if (u.values.size() != target.count(k))
        throw DimensionMismatch("cochain does not belong to the target complex");
    Cochain out = zero_cochain(source, k, u.ring);
    for (std::size_t i = 0; i < source.count(k); ++i) {
        const Vertex* v = source.vertices(k, i);
        Simplex img;
        for (int t = 0; t <= k; ++t)
            img.push_back(vertex_map.at(v[t]));
        int inversions = 0;
        for (int a = 0; a <= k; ++a)
            for (int b = a + 1; b <= k; ++b)
                inversions += img[a] > img[b] ? 1 : 0;
        std::sort(img.begin(), img.end());
        if (std::adjacent_find(img.begin(), img.end()) != img.end())
            throw ValidationError("simplicial map collapses a simplex");
        auto j = target.find(img);
        if (!j)
            throw ValidationError("vertex map is not simplicial");
        out.values[i] = u.ring.normalize(inversions % 2 ? -u.values[*j] : u.values[*j]);
    }
    return out;
}

Cochain suspend(const SimplexIndex& base, const SimplexIndex& susp, const Cochain& u)
{
    const int k = u.degree;
    if (u.values.size() != base.count(k))
        throw DimensionMismatch("cochain does not belong to the base complex");
    Vertex apex = 0;
    if (base.count(0) > 0)
        apex = static_cast<Vertex>(base.count(0));
    Cochain out = zero_cochain(susp, k + 1, u.ring);
    for (std::size_t i = 0; i < base.count(k); ++i) {
        if (u.values[i] == 0)
            continue;
        Simplex s = base.simplex(k, i);
        s.push_back(apex);
        auto j = susp.find(s);
        if (!j)
            throw ValidationError("complex is not the suspension of the base");
        out.values[*j] = u.values[i];
    }
    return out;
}

} // namespace linkform
