#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace linkform {

using Vertex = std::int32_t;
// Strictly increasing vertex ids.
using Simplex = std::vector<Vertex>;

struct SimplicialComplex {
    std::string name;
    int vertex_count = 0;
    std::vector<Simplex> facets; // lexicographically sorted, no duplicates
    int dimension = -1;
};

// Validates, sorts and renumbers vertices to 0..V-1 keeping their relative
// order. Throws ValidationError on empty input or repeated vertices.
SimplicialComplex make_complex(std::string name, std::vector<std::vector<long long>> facets);

// JSON object {"name": ..., "facets": [[...], ...]}.
SimplicialComplex load_complex(const std::string& json_text);
SimplicialComplex load_complex_file(const std::string& path);
std::string to_json(const SimplicialComplex& k);
void save_complex_file(const SimplicialComplex& k, const std::string& path);

// FNV-1a over the canonical facet list, as 16 hex digits.
std::string content_hash(const SimplicialComplex& k);

// Boundary of the (n+1)-simplex.
SimplicialComplex sphere(int n);
// Join with two new apex vertices, numbered after the existing ones.
SimplicialComplex suspension(const SimplicialComplex& k);
// Staircase triangulation on vertex pairs ordered lexicographically.
SimplicialComplex product(const SimplicialComplex& a, const SimplicialComplex& b);
// Antipodal quotient of the barycentric subdivision of the boundary of the
// (n+1)-simplex.
SimplicialComplex rp_space(int n);
struct CoveringMap {
    SimplicialComplex cover;
    std::vector<Vertex> vertex_map; // cover vertex -> quotient vertex
};
// The subdivided sphere double covering rp_space(n), with the quotient map.
CoveringMap rp_cover(int n);

// Quotient of the subdivided join of two 2p-gons by the free Z/p action
// rotating them by 1/p and q/p of a turn.
SimplicialComplex lens_space(int p, int q);

// Face counts f_0 .. f_dim.
std::vector<std::size_t> f_vector(const SimplicialComplex& k);

} // namespace linkform
