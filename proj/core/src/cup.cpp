#include "linkform/cup.hpp"

#include <algorithm>

#include "linkform/errors.hpp"

namespace linkform {

std::vector<CupTerm> cup_terms(int n, int i, int p)
{
    std::vector<CupTerm> terms;
    if (i < 0 || n < 0 || p < 0 || i + 1 > n + 1)
        return terms;
    const int q = n + i - p;
    if (q < 0)
        return terms;
    std::vector<bool> pick(n + 1, false);
    std::fill(pick.end() - (i + 1), pick.end(), true);
    do {
        std::vector<int> cuts;
        for (int t = 0; t <= n; ++t)
            if (pick[t])
                cuts.push_back(t);
        std::vector<int> bounds{0};
        bounds.insert(bounds.end(), cuts.begin(), cuts.end());
        bounds.push_back(n);
        std::vector<int> upos, vpos;
        for (int t = 0; t + 1 < static_cast<int>(bounds.size()); ++t)
            for (int x = bounds[t]; x <= bounds[t + 1]; ++x)
                (t % 2 == 0 ? upos : vpos).push_back(x);
        if (static_cast<int>(upos.size()) != p + 1 || static_cast<int>(vpos.size()) != q + 1)
            continue;
        std::vector<int> seq;
        for (int x : vpos)
            if (!pick[x])
                seq.push_back(x);
        seq.insert(seq.end(), upos.begin(), upos.end());
        int inv = 0;
        for (std::size_t a = 0; a < seq.size(); ++a)
            for (std::size_t b = a + 1; b < seq.size(); ++b)
                inv += seq[a] > seq[b] ? 1 : 0;
        const int e = inv + p * q + (i % 2 == 0 ? q : 0);
        CupTerm term{0, 0, e % 2 ? -1 : 1};
        for (int x : upos)
            term.umask |= 1u << x;
        for (int x : vpos)
            term.vmask |= 1u << x;
        terms.push_back(term);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return terms;
}

Cochain cup_i(const SimplexIndex& idx, const Cochain& u, const Cochain& v, int i)
{
    if (!(u.ring == v.ring))
        throw RingMismatch("cup product of cochains over different rings");
    if (u.values.size() != idx.count(u.degree) || v.values.size() != idx.count(v.degree))
        throw DimensionMismatch("cochain does not belong to this complex");
    const int p = u.degree, q = v.degree, n = p + q - i;
    Cochain out = zero_cochain(idx, n, u.ring);
    if (i < 0 || n < 0 || n > idx.dimension())
        return out;
    const auto terms = cup_terms(n, i, p);
    const std::int64_t m = u.ring.modulus;
    for (std::size_t s = 0; s < idx.count(n); ++s) {
        __int128 acc = 0;
        for (const auto& t : terms) {
            const std::int64_t a = u.values[idx.face(n, s, t.umask)];
            if (a == 0)
                continue;
            const std::int64_t b = v.values[idx.face(n, s, t.vmask)];
            if (b == 0)
                continue;
            acc += static_cast<__int128>(t.sign) * a * b;
        }
        if (m != 0) {
            acc %= m;
            if (acc < 0)
                acc += m;
        } else if (acc > std::numeric_limits<std::int64_t>::max() || acc < std::numeric_limits<std::int64_t>::min()) {
            throw OverflowError("cup product value exceeds 64 bits");
        }
        out.values[s] = static_cast<std::int64_t>(acc);
    }
    return out;
}

Cochain cup(const SimplexIndex& idx, const Cochain& u, const Cochain& v)
{
    return cup_i(idx, u, v, 0);
}

} // namespace linkform
