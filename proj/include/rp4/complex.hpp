#pragma once

#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rp4/simplex.hpp"

namespace rp4 {

struct ComplexError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Face counts by dimension, (f_0, ..., f_d).
struct FVector {
    std::vector<long long> counts;

    long long euler() const {
        long long chi = 0;
        long long sign = 1;
        for (long long c : counts) {
            chi += sign * c;
            sign = -sign;
        }
        return chi;
    }

    bool operator==(const FVector&) const = default;
};

std::string to_string(const FVector& f);

// Pure abstract simplicial complex stored by its facet set.
//
// Vertex ids are positive and need not be contiguous: links and other derived
// complexes keep the ids of their parent. normalized() remaps to 1..n.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex from_facets(std::vector<Simplex> facets,
                                         std::map<VertexId, std::string> labels = {});

    int dim() const { return facets_.empty() ? -1 : facets_.front().dim(); }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Simplex>& facets() const { return facets_; }
    long long facet_count() const { return static_cast<long long>(facets_.size()); }
    bool empty() const { return facets_.empty(); }

    bool has_vertex(VertexId v) const;
    bool has_facet(const Simplex& s) const;
    // True iff s is contained in some facet.
    bool has_face(const Simplex& s) const;

    bool is_normalized() const;
    // Remap vertex ids to 1..n (in increasing old-id order); second element is
    // the old->new map. Labels follow the vertices.
    std::pair<SimplicialComplex, std::map<VertexId, VertexId>> normalized() const;

    const std::map<VertexId, std::string>& labels() const { return labels_; }
    std::string label_of(VertexId v) const;
    void set_label(VertexId v, std::string label);

    bool operator==(const SimplicialComplex& o) const {
        return facets_ == o.facets_;
    }

private:
    std::vector<Simplex> facets_;     // sorted, unique, all of equal dimension
    std::vector<VertexId> vertices_;  // sorted union of facet vertices
    std::map<VertexId, std::string> labels_;
};

// ---- Core operations --------------------------------------------------

// All k-faces, deduplicated, sorted. Throws std::out_of_range unless 0 <= k <= d.
std::vector<Simplex> faces(const SimplicialComplex& c, int k);
long long face_count(const SimplicialComplex& c, int k);

FVector f_vector(const SimplicialComplex& c);

// Link of `face`: all s with s∩face = ∅ and s∪face a face. Keeps parent ids.
// Throws ComplexError if `face` is not a face. Link of a facet is empty.
SimplicialComplex link(const SimplicialComplex& c, const Simplex& face);

// Join: facets are unions of one facet from each side. Vertex sets must be
// disjoint.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

// Sentinel distance for vertices in different components of the 1-skeleton.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Shortest-path length between u and v in the 1-skeleton; kUnreachable if
// disconnected. Throws ComplexError for unknown vertices.
int skeleton_distance(const SimplicialComplex& c, VertexId u, VertexId v);

// Adjacency lists of the 1-skeleton keyed by vertex id.
std::map<VertexId, std::vector<VertexId>> skeleton_adjacency(const SimplicialComplex& c);

// ---- Involutions and quotients ----------------------------------------

// A vertex permutation of order <= 2.
class Involution {
public:
    Involution() = default;

    // Swapped pairs; everything else is fixed.
    static Involution from_pairs(const std::vector<std::pair<VertexId, VertexId>>& pairs);
    // Cycle notation, e.g. "(1 7)(2 8)". Cycles must have length 1 or 2.
    static Involution parse_cycles(const std::string& text);

    VertexId operator()(VertexId v) const {
        auto it = map_.find(v);
        return it == map_.end() ? v : it->second;
    }

    bool moves(VertexId v) const { return map_.count(v) != 0; }
    const std::map<VertexId, VertexId>& moved() const { return map_; }

    std::string to_cycles() const;

private:
    std::map<VertexId, VertexId> map_;  // only non-fixed points
};

enum class QuotientFailure { HasFixedPoint, NotInvariant, NotLinkSeparating };

struct QuotientError : ComplexError {
    QuotientFailure kind;
    QuotientError(QuotientFailure k, const std::string& msg)
        : ComplexError(msg), kind(k) {}
};

const char* to_string(QuotientFailure f);

// Quotient by a fixed-point-free, facet-invariant, link-separating involution.
// Vertices become orbit representatives, facet count halves, the result is
// renormalized to 1..n and orbit provenance is recorded in the labels.
// Throws QuotientError when the gate fails.
SimplicialComplex quotient(const SimplicialComplex& c, const Involution& inv);

// ---- Generators ---------------------------------------------------------

// Boundary of the n-simplex: n+1 vertices, n+1 facets of dimension n-1.
SimplicialComplex simplex_boundary(int n);

// Boundary of the n-cross-polytope: 2n vertices (+e_i -> 2i-1, -e_i -> 2i),
// 2^n facets of dimension n-1.
SimplicialComplex cross_polytope_boundary(int n);

// One vertex per nonempty face, facets are maximal flags. When face_ids is
// given it receives the face -> new-vertex-id assignment.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& c,
                                          std::map<Simplex, VertexId>* face_ids = nullptr);

// ---- Structural utilities ----------------------------------------------

// Relabel through a bijection on the used vertices.
SimplicialComplex rename_vertices(const SimplicialComplex& c,
                                  const std::function<VertexId(VertexId)>& f);

// Apply a (possibly non-injective) vertex map; facet images must keep full
// cardinality. Facets are deduplicated. Labels are dropped.
SimplicialComplex identify_vertices(const SimplicialComplex& c,
                                    const std::function<VertexId(VertexId)>& f);

// The (d-1)-faces lying in exactly one facet, as a pure complex. Empty when
// the complex is closed.
SimplicialComplex boundary_complex(const SimplicialComplex& c);

// Multiplicity map: ridge -> number of facets containing it.
std::map<Simplex, int> ridge_degrees(const SimplicialComplex& c);

}  // namespace rp4
