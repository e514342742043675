#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rp4/complex.hpp"

namespace rp4 {

// Shared point-id space for the K6 structures and designs built on them:
//   vertices  A..F -> 1..6
//   bisections 0..9 -> 7..16
//   factorizations U..Z -> 17..22
inline constexpr int kVertexBase = 0;         // ids 1..6
inline constexpr int kBisectionBase = 6;      // ids 7..16
inline constexpr int kFactorizationBase = 16; // ids 17..22

std::string point_name(int id);

// The labeled K6: bisection labels on edges and matchings, 1-factorizations
// and their pairwise intersections.
struct K6Structure {
    // bisections[b] = the two sorted triangles, side containing A first;
    // ordered lexicographically by the A-side triple (label '0'..'9').
    std::vector<std::pair<std::array<int, 3>, std::array<int, 3>>> bisections;

    struct Edge {
        int u, v;                  // vertex ids, u < v
        std::array<int, 4> label;  // bisection indices 0..9, sorted
    };
    std::vector<Edge> edges;  // 15, lex by (u,v)

    struct Matching {
        std::array<int, 3> edge_idx;  // indices into edges, sorted
        std::array<int, 4> label;     // bisections in no member edge's label
    };
    std::vector<Matching> matchings;  // 15, lex by edge_idx

    // factorizations[f] = 5 matching indices, sorted; ordered lex ('U'..'Z').
    std::vector<std::array<int, 5>> factorizations;

    int edge_index(int u, int v) const;          // vertex ids
    int bisection_of_triangle(int a, int b, int c) const;  // vertex ids
    int matching_through(int edge, int other_edge) const;
    // The unique common matching of two distinct factorizations.
    int common_matching(int f, int g) const;
    // The two factorizations containing a matching.
    std::pair<int, int> factorizations_of_matching(int m) const;

    // Point ids (see bases above).
    static int vertex_id(int v) { return kVertexBase + v + 1; }         // v in 0..5
    static int bisection_id(int b) { return kBisectionBase + b + 1; }   // b in 0..9
    static int factorization_id(int f) { return kFactorizationBase + f + 1; }
};

K6Structure build_k6();

struct Design {
    std::vector<int> points;               // sorted ids
    std::vector<std::vector<int>> blocks;  // sorted ids, sorted list
};

struct DesignCheck {
    bool ok = true;
    std::optional<std::vector<int>> counterexample;  // first bad t-subset
    long long count_at_counterexample = 0;
};

// Exhaustive t-subset verification of a t-(v,k,lambda) design; parallel over
// subsets when jobs != 1.
DesignCheck verify_design(const Design& d, int t, int v, int k, int lambda,
                          int jobs = 1);

// Distinct pairwise block intersection sizes, ascending.
std::vector<int> block_intersection_profile(const Design& d);

// (B, edge labels) and (B, matching labels): quasi-symmetric 2-(10,4,2).
Design design_e(const K6Structure& k6);
Design design_m(const K6Structure& k6);

// (V u B, E~) and (B u F, M~): symmetric 2-(16,6,2) biplanes.
Design biplane_e(const K6Structure& k6);
Design biplane_m(const K6Structure& k6);

// The 45 blocks from incident edge-matching pairs.
std::vector<std::vector<int>> em_blocks(const K6Structure& k6);

// W22: 3-(22,6,1) on V u B u F with blocks E~ u M~ u EM (77 of size 6).
Design witt22(const K6Structure& k6);

struct AxesCheckReport {
    bool ok = false;
    int quadruples_checked = 0;
    std::string detail;
};

// For every edge of the 6-orbit in the K6-generated complex: its link is an
// octahedron on bisection points, and each of the 3 axis quadruples
// {v, v', b, b'} lies in an EM block.
AxesCheckReport octahedral_axes_check(const SimplicialComplex& rp4,
                                      const K6Structure& k6);

}  // namespace rp4
