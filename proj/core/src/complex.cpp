#include "linkform/complex.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "linkform/errors.hpp"

namespace linkform {

namespace {

void finish(SimplicialComplex& k)
{
    std::sort(k.facets.begin(), k.facets.end());
    k.facets.erase(std::unique(k.facets.begin(), k.facets.end()), k.facets.end());
    k.dimension = -1;
    for (const auto& f : k.facets)
        k.dimension = std::max(k.dimension, static_cast<int>(f.size()) - 1);
}

// Every subset of each facet, grouped by size.
std::vector<std::vector<Simplex>> all_faces(const std::vector<Simplex>& facets)
{
    std::vector<std::vector<Simplex>> faces;
    for (const auto& f : facets) {
        const unsigned n = static_cast<unsigned>(f.size());
        if (faces.size() < n)
            faces.resize(n);
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            Simplex s;
            for (unsigned j = 0; j < n; ++j)
                if (mask & (1u << j))
                    s.push_back(f[j]);
            faces[s.size() - 1].push_back(std::move(s));
        }
    }
    for (auto& level : faces) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    return faces;
}

// Quotient of a complex on abstract labels by a free group action. `orbit`
// maps a label to its orbit id. Checks that the result is a simplicial
// complex whose simplices are the orbits of simplices upstairs.
std::vector<Simplex> quotient_facets(const std::vector<std::vector<int>>& facets, const std::vector<int>& orbit,
                                     int group_order)
{
    std::vector<Simplex> out;
    std::vector<std::vector<int>> upstairs;
    for (const auto& f : facets) {
        Simplex s;
        for (int v : f)
            s.push_back(orbit[v]);
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::logic_error("group action identifies vertices of a simplex");
        out.push_back(std::move(s));
        std::vector<int> sorted = f;
        std::sort(sorted.begin(), sorted.end());
        upstairs.push_back(std::move(sorted));
    }
    auto up = all_faces(std::vector<Simplex>(upstairs.begin(), upstairs.end()));
    auto down = all_faces(out);
    for (std::size_t d = 0; d < up.size(); ++d)
        if (down[d].size() * group_order != up[d].size())
            throw std::logic_error("quotient is not a simplicial complex");
    return out;
}

std::string hex64(std::uint64_t h)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace

SimplicialComplex make_complex(std::string name, std::vector<std::vector<long long>> facets)
{
    if (facets.empty())
        throw ValidationError("complex has no facets");
    std::vector<long long> ids;
    for (auto& f : facets) {
        if (f.empty())
            throw ValidationError("empty facet");
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw ValidationError("facet repeats a vertex");
        ids.insert(ids.end(), f.begin(), f.end());
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    SimplicialComplex k;
    k.name = std::move(name);
    k.vertex_count = static_cast<int>(ids.size());
    for (const auto& f : facets) {
        Simplex s;
        for (long long v : f)
            s.push_back(static_cast<Vertex>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin()));
        k.facets.push_back(std::move(s));
    }
    finish(k);
    return k;
}

SimplicialComplex load_complex(const std::string& json_text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("facets") || !doc["facets"].is_array())
        throw ParseError("expected an object with a \"facets\" array");
    std::string name = "complex";
    if (doc.contains("name")) {
        if (!doc["name"].is_string())
            throw ParseError("\"name\" must be a string");
        name = doc["name"].get<std::string>();
    }
    std::vector<std::vector<long long>> facets;
    for (const auto& f : doc["facets"]) {
        if (!f.is_array())
            throw ParseError("each facet must be an array of vertex ids");
        std::vector<long long> s;
        for (const auto& v : f) {
            if (!v.is_number_integer())
                throw ParseError("vertex ids must be integers");
            s.push_back(v.get<long long>());
        }
        facets.push_back(std::move(s));
    }
    return make_complex(std::move(name), std::move(facets));
}

SimplicialComplex load_complex_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_complex(ss.str());
}

std::string to_json(const SimplicialComplex& k)
{
    nlohmann::json doc;
    doc["name"] = k.name;
    doc["facets"] = k.facets;
    return doc.dump() + "\n";
}

void save_complex_file(const SimplicialComplex& k, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw ValidationError("cannot write " + path);
    out << to_json(k);
}

std::string content_hash(const SimplicialComplex& k)
{
    std::uint64_t h = 1469598103934665603ull;
    auto feed = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    for (const auto& f : k.facets) {
        std::string s;
        for (std::size_t i = 0; i < f.size(); ++i)
            s += (i ? "," : "") + std::to_string(f[i]);
        feed(s + ";");
    }
    return hex64(h);
}

SimplicialComplex sphere(int n)
{
    if (n < 0)
        throw ValidationError("sphere dimension must be non-negative");
    SimplicialComplex k;
    k.name = "S" + std::to_string(n);
    k.vertex_count = n + 2;
    for (int skip = n + 1; skip >= 0; --skip) {
        Simplex s;
        for (int v = 0; v < n + 2; ++v)
            if (v != skip)
                s.push_back(v);
        k.facets.push_back(std::move(s));
    }
    finish(k);
    return k;
}

SimplicialComplex suspension(const SimplicialComplex& k)
{
    SimplicialComplex s;
    s.name = "susp(" + k.name + ")";
    s.vertex_count = k.vertex_count + 2;
    for (const auto& f : k.facets) {
        for (int apex : {k.vertex_count, k.vertex_count + 1}) {
            Simplex t = f;
            t.push_back(apex);
            s.facets.push_back(std::move(t));
        }
    }
    finish(s);
    return s;
}

SimplicialComplex product(const SimplicialComplex& a, const SimplicialComplex& b)
{
    SimplicialComplex p;
    p.name = a.name + "x" + b.name;
    p.vertex_count = a.vertex_count * b.vertex_count;
    for (const auto& f : a.facets) {
        for (const auto& g : b.facets) {
            const int m = static_cast<int>(f.size()) - 1, n = static_cast<int>(g.size()) - 1;
            // Monotone lattice paths from (0,0) to (m,n): choose which of the
            // m+n steps move in the first factor.
            std::vector<bool> steps(m + n, false);
            std::fill(steps.begin(), steps.begin() + m, true);
            std::sort(steps.begin(), steps.end());
            do {
                int i = 0, j = 0;
                Simplex s{f[0] * b.vertex_count + g[0]};
                for (bool first : steps) {
                    (first ? i : j)++;
                    s.push_back(f[i] * b.vertex_count + g[j]);
                }
                p.facets.push_back(std::move(s));
            } while (std::next_permutation(steps.begin(), steps.end()));
        }
    }
    finish(p);
    return p;
}

namespace {

struct ProjectiveData {
    std::vector<int> orbit;              // vertex subset mask -> orbit id
    int orbit_count = 0;
    std::vector<std::vector<int>> flags; // facets of the subdivided sphere, as masks
};

ProjectiveData projective_data(int n)
{
    if (n < 1)
        throw ValidationError("projective space dimension must be at least 1");
    const int m = n + 2;
    const unsigned full = (1u << m) - 1;
    // Orbit representatives: the smaller of A and its complement, ties to
    // the smaller bitmask; orbits ordered by (size, mask).
    std::vector<unsigned> reps;
    for (unsigned s = 1; s < full; ++s) {
        unsigned c = full & ~s;
        int ps = __builtin_popcount(s), pc = __builtin_popcount(c);
        if (ps < pc || (ps == pc && s < c))
            reps.push_back(s);
    }
    std::sort(reps.begin(), reps.end(), [](unsigned x, unsigned y) {
        int px = __builtin_popcount(x), py = __builtin_popcount(y);
        return px != py ? px < py : x < y;
    });
    ProjectiveData d;
    d.orbit.assign(full + 1, -1);
    d.orbit_count = static_cast<int>(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        d.orbit[reps[i]] = static_cast<int>(i);
        d.orbit[full & ~reps[i]] = static_cast<int>(i);
    }
    // Maximal flags of proper faces of the (n+1)-simplex, one per ordering
    // of its vertices, dropping the last step.
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> flag;
        unsigned acc = 0;
        for (int t = 0; t < m - 1; ++t) {
            acc |= 1u << perm[t];
            flag.push_back(static_cast<int>(acc));
        }
        d.flags.push_back(std::move(flag));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(d.flags.begin(), d.flags.end());
    d.flags.erase(std::unique(d.flags.begin(), d.flags.end()), d.flags.end());
    return d;
}

} // namespace

SimplicialComplex rp_space(int n)
{
    const auto d = projective_data(n);
    SimplicialComplex k;
    k.name = "RP" + std::to_string(n);
    k.vertex_count = d.orbit_count;
    k.facets = quotient_facets(d.flags, d.orbit, 2);
    finish(k);
    return k;
}

CoveringMap rp_cover(int n)
{
    const auto d = projective_data(n);
    std::vector<std::vector<long long>> facets;
    std::vector<int> masks;
    for (const auto& f : d.flags) {
        facets.emplace_back(f.begin(), f.end());
        masks.insert(masks.end(), f.begin(), f.end());
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    CoveringMap out;
    out.cover = make_complex("sd S" + std::to_string(n), std::move(facets));
    // make_complex keeps the relative order of vertex ids.
    for (int mask : masks)
        out.vertex_map.push_back(d.orbit[mask]);
    return out;
}

SimplicialComplex lens_space(int p, int q)
{
    if (p < 2)
        throw ValidationError("lens space order must be at least 2");
    if (std::gcd(p, q) != 1)
        throw ValidationError("lens space parameters must be coprime");
    const int r = 2 * p; // vertices per polygon
    const int qq = ((q % p) + p) % p;
    using Face = std::vector<int>;
    // Faces of the join of two r-gons; polygon 2 vertices are offset by r.
    std::vector<Face> c1{{}}, c2{{}};
    for (int i = 0; i < r; ++i) {
        c1.push_back({i});
        c1.push_back({std::min(i, (i + 1) % r), std::max(i, (i + 1) % r)});
        c2.push_back({r + i});
        c2.push_back({r + std::min(i, (i + 1) % r), r + std::max(i, (i + 1) % r)});
    }
    std::map<Face, int> face_id;
    std::vector<Face> faces;
    for (const auto& a : c1)
        for (const auto& b : c2) {
            Face f = a;
            f.insert(f.end(), b.begin(), b.end());
            if (f.empty())
                continue;
            face_id.emplace(f, static_cast<int>(faces.size()));
            faces.push_back(f);
        }
    auto act = [&](const Face& f) {
        Face g;
        for (int v : f)
            g.push_back(v < r ? (v + 2) % r : r + (v - r + 2 * qq) % r);
        std::sort(g.begin(), g.end());
        return g;
    };
    // Orbit representative: lexicographically least translate.
    std::vector<Face> rep(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) {
        Face best = faces[i], cur = faces[i];
        for (int t = 1; t < p; ++t) {
            cur = act(cur);
            if (cur == faces[i])
                throw std::logic_error("lens space action is not free");
            best = std::min(best, cur);
        }
        rep[i] = best;
    }
    std::vector<Face> reps(rep.begin(), rep.end());
    std::sort(reps.begin(), reps.end(), [](const Face& x, const Face& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    std::vector<int> orbit(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) {
        auto it = std::lower_bound(reps.begin(), reps.end(), rep[i], [](const Face& x, const Face& y) {
            return x.size() != y.size() ? x.size() < y.size() : x < y;
        });
        orbit[i] = static_cast<int>(it - reps.begin());
    }
    // Barycentric subdivision: flags F0 < F1 < F2 < F3 ending in a tetrahedron.
    std::vector<std::vector<int>> flags;
    for (const auto& top : faces) {
        if (top.size() != 4)
            continue;
        std::vector<int> order{0, 1, 2, 3};
        do {
            std::vector<int> flag;
            Face acc;
            for (int t = 0; t < 4; ++t) {
                acc.push_back(top[order[t]]);
                Face sorted = acc;
                std::sort(sorted.begin(), sorted.end());
                flag.push_back(face_id.at(sorted));
            }
            flags.push_back(std::move(flag));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    SimplicialComplex k;
    k.name = "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
    k.vertex_count = static_cast<int>(reps.size());
    k.facets = quotient_facets(flags, orbit, p);
    finish(k);
    return k;
}

std::vector<std::size_t> f_vector(const SimplicialComplex& k)
{
    auto faces = all_faces(k.facets);
    std::vector<std::size_t> out;
    for (const auto& f : faces)
        out.push_back(f.size());
    return out;
}

} // namespace linkform
