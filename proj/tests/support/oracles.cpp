#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "linkform/snf.hpp"

namespace oracle {

using namespace linkform;

Integer bareiss_determinant(std::vector<std::vector<Integer>> a)
{
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

namespace {

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out)
{
    std::vector<std::size_t> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    if (k > n)
        return;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
}

} // namespace

std::vector<Integer> determinantal_invariant_factors(const linalg::IntMatrix& m)
{
    const auto a = m.to_dense();
    std::vector<Integer> out;
    Integer prev = 1;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        subsets(m.rows(), k, rs);
        subsets(m.cols(), k, cs);
        Integer g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                std::vector<std::vector<Integer>> minor(k, std::vector<Integer>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        minor[i][j] = a[r[i]][c[j]];
                g = gcd(g, abs(bareiss_determinant(std::move(minor))));
            }
        if (g == 0)
            break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

std::vector<std::int64_t> cohomology_orders(const SimplicialComplex& k, std::int64_t m, int degree)
{
    const auto cc = coboundary_matrices(k, Ring::integers());
    const int dim = k.dimension;
    auto count = [&](int d) -> std::int64_t {
        return d < 0 || d > dim ? 0 : static_cast<std::int64_t>(cc.basis[d].size());
    };
    auto factors = [&](int d) -> std::vector<Integer> {
        if (d < 0 || d >= dim)
            return {};
        return linalg::invariant_factors(cc.delta[d]);
    };
    // H^k(Z) = Z^{c_k - r_k - r_{k-1}} + sum over factors of delta_{k-1};
    // H^k(Z/m) adds Tor(H^{k+1}(Z), Z/m), i.e. the factors of delta_k.
    const auto in = factors(degree - 1), out_f = factors(degree);
    const std::int64_t free =
        count(degree) - static_cast<std::int64_t>(in.size()) - static_cast<std::int64_t>(out_f.size());
    std::vector<std::int64_t> orders;
    for (std::int64_t i = 0; i < free; ++i)
        orders.push_back(m);
    for (const auto& d : in) {
        const Integer e = m == 0 ? d : gcd(d, Integer(m));
        if (e != 1)
            orders.push_back(to_int64(e));
    }
    if (m != 0)
        for (const auto& d : out_f) {
            const Integer e = gcd(d, Integer(m));
            if (e != 1)
                orders.push_back(to_int64(e));
        }
    return orders;
}

std::vector<std::int64_t> primary_parts(const std::vector<std::int64_t>& orders)
{
    std::vector<std::int64_t> out;
    for (auto o : orders) {
        if (o == 0) {
            out.push_back(0);
            continue;
        }
        for (std::int64_t p = 2; o > 1; ++p) {
            std::int64_t q = 1;
            while (o % p == 0) {
                o /= p;
                q *= p;
            }
            if (q > 1)
                out.push_back(q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::int64_t> group_orders(const CohomologyGroup& g)
{
    std::vector<std::int64_t> out(g.free_rank, 0);
    out.insert(out.end(), g.torsion.begin(), g.torsion.end());
    return out;
}

int binomial_mod2(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    std::vector<int> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<int> next(i + 1, 1);
        for (int j = 1; j < i; ++j)
            next[j] = (row[j - 1] + row[j]) % 2;
        row = std::move(next);
    }
    return row[k];
}

std::int64_t factorial(int n)
{
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

std::int64_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    std::int64_t b = 1;
    for (int i = 1; i <= k; ++i)
        b = b * (n - k + i) / i;
    return b;
}

linalg::IntMatrix random_sparse_matrix(std::mt19937_64& rng, std::size_t max_size)
{
    std::uniform_int_distribution<std::size_t> size(1, max_size);
    const std::size_t rows = size(rng), cols = size(rng);
    std::uniform_int_distribution<int> per(1, 4), value(-3, 3);
    std::uniform_int_distribution<std::size_t> col(0, cols - 1);
    linalg::IntMatrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const int k = per(rng);
        for (int i = 0; i < k; ++i) {
            const int v = value(rng);
            if (v != 0)
                a.set(r, col(rng), v);
        }
    }
    return a;
}

namespace {

SimplicialComplex build_fixture(const std::string& name)
{
    const auto t2 = [] { return product(sphere(1), sphere(1)); };
    if (name == "S1")
        return sphere(1);
    if (name == "S2")
        return sphere(2);
    if (name == "S5")
        return sphere(5);
    if (name == "T2")
        return t2();
    if (name.size() == 3 && name.starts_with("RP") && name[2] >= '1' && name[2] <= '5')
        return rp_space(name[2] - '0');
    if (name == "L21")
        return lens_space(2, 1);
    if (name == "L41")
        return lens_space(4, 1);
    if (name == "L81")
        return lens_space(8, 1);
    if (name == "L83")
        return lens_space(8, 3);
    if (name == "S2xL41")
        return product(sphere(2), lens_space(4, 1));
    if (name == "S2xL81")
        return product(sphere(2), lens_space(8, 1));
    if (name == "RP3xT2")
        return product(rp_space(3), t2());
    throw std::invalid_argument("unknown fixture " + name);
}

} // namespace

const Space& fixture(const std::string& name)
{
    static std::mutex mutex;
    static std::map<std::string, std::unique_ptr<Space>> spaces;
    std::lock_guard lock(mutex);
    auto& slot = spaces[name];
    if (!slot)
        slot = std::make_unique<Space>(build_fixture(name));
    return *slot;
}

std::vector<CohomologyClass> rp_powers(const Space& rp)
{
    const Ring z2 = Ring::mod(2);
    std::vector<CohomologyClass> out{class_from_coords(rp, z2, 0, {1})};
    if (rp.dimension() >= 1) {
        const auto a = class_from_coords(rp, z2, 1, {1});
        for (int j = 1; j <= rp.dimension(); ++j)
            out.push_back(cup(rp, out.back(), a));
    }
    return out;
}

} // namespace oracle
