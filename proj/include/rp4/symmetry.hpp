#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rp4/complex.hpp"

namespace rp4 {

// A permutation of a complex's vertex set, total on the used vertices.
using VertexMap = std::map<VertexId, VertexId>;

SimplicialComplex apply_vertex_map(const SimplicialComplex& c, const VertexMap& p);
bool is_facet_invariant(const SimplicialComplex& c, const VertexMap& p);

std::string cycles_string(const VertexMap& p);

// Orbits of facet indices under a generator set.
std::vector<std::vector<int>> facet_orbits_under(const SimplicialComplex& c,
                                                 const std::vector<VertexMap>& gens);
// Orbits of the given vertices under a generator set.
std::vector<std::vector<VertexId>> vertex_orbits_under(
    const std::vector<VertexId>& verts, const std::vector<VertexMap>& gens);

struct PermGroup {
    int degree = 0;
    std::vector<VertexMap> generators;
    unsigned long long order = 1;
    std::vector<std::vector<VertexId>> vertex_orbits;
    std::vector<std::vector<int>> facet_orbits;

    std::vector<std::size_t> vertex_orbit_sizes() const;  // ascending
    std::vector<std::size_t> facet_orbit_sizes() const;   // ascending
};

// Full vertex automorphism group of the facet set. Order is obtained by
// explicit enumeration during the canonical search and cross-checked by an
// orbit-stabilizer chain.
PermGroup automorphism_group(const SimplicialComplex& c);

// A facet-preserving bijection a -> b, if one exists.
std::optional<VertexMap> are_isomorphic(const SimplicialComplex& a,
                                        const SimplicialComplex& b);

struct CanonicalForm {
    std::vector<Simplex> facets;  // relabeled to 1..n, sorted
    VertexMap relabeling;         // original id -> canonical id

    bool operator==(const CanonicalForm& o) const { return facets == o.facets; }
};

// Label-invariant representative: canonical_form(a) == canonical_form(b)
// iff a and b are isomorphic.
CanonicalForm canonical_form(const SimplicialComplex& c);

}  // namespace rp4
