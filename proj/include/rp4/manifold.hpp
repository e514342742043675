#pragma once

#include <string>
#include <vector>

#include "rp4/complex.hpp"
#include "rp4/flips.hpp"

namespace rp4 {

struct PseudomanifoldReport {
    bool ok = false;
    bool ridges_ok = false;    // every (d-1)-face in exactly 2 facets
    bool connected = false;    // facet adjacency graph connected
    std::optional<Simplex> bad_ridge;
    int bad_ridge_degree = 0;
};

PseudomanifoldReport is_closed_pseudomanifold(const SimplicialComplex& c);

enum class LinkStatus { CertifiedSphere, NotSphere, Unknown };
const char* to_string(LinkStatus s);

struct VertexLinkReport {
    VertexId vertex = 0;
    LinkStatus status = LinkStatus::Unknown;
    std::string detail;
};

struct ManifoldReport {
    bool all_certified = false;
    std::vector<VertexLinkReport> links;
};

struct SphereCheckOptions {
    ReduceOptions reduce;  // used for dimension-3 links
    int jobs = 1;          // per-vertex checks may run concurrently
};

// Links of dimension <= 2 are decided exactly; dimension-3 links get a
// homology pre-screen and then flip reduction to a boundary simplex.
ManifoldReport check_combinatorial_manifold(const SimplicialComplex& c,
                                            const SphereCheckOptions& opts = {});

// Sphere test for a whole complex (used on links); exact through dimension 2,
// reduction-certified in dimension 3.
std::pair<LinkStatus, std::string> certify_sphere(const SimplicialComplex& c,
                                                  const ReduceOptions& opts = {});

enum class AntipodalFailure {
    None,
    HasFixedPoint,
    NotInvariant,
    NotLinkSeparating,
};
const char* to_string(AntipodalFailure f);

struct AntipodalReport {
    bool ok = false;
    AntipodalFailure failure = AntipodalFailure::None;
    int min_distance = 0;                 // min over v of d(v, inv(v))
    std::pair<VertexId, VertexId> witness{0, 0};
};

// True iff inv is fixed-point-free, maps the facet set to itself, and
// d(v, inv(v)) >= 3 for every vertex. Throws std::invalid_argument when inv
// is not an involution of the vertex set.
AntipodalReport is_antipodal(const SimplicialComplex& c, const Involution& inv);

}  // namespace rp4
