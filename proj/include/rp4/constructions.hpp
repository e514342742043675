#pragma once

#include <vector>

#include "rp4/complex.hpp"
#include "rp4/designs.hpp"
#include "rp4/symmetry.hpp"

namespace rp4 {

// Stage-count assertion failure in a pipeline.
struct ConstructionError : std::logic_error {
    using std::logic_error::logic_error;
};

// ---- Construction 1: subdivide the 5-simplex boundary, flip, quotient ----
//
// Vertex scheme: e_i = 1..6; barycenters of triples = 7..26 in lex triple
// order; facet barycenters (the antipodes of e_i) = 27..32.
struct C1Artifacts {
    SimplicialComplex x6;      // boundary of the 5-simplex
    SimplicialComplex x12;     // + facet barycenters, 30 facets
    SimplicialComplex x32;     // + triple barycenters, 330 facets
    SimplicialComplex s4_32;   // after both flip rounds, 300 facets
    SimplicialComplex rp4;     // antipodal quotient, 16 vertices, 150 facets
    Involution sigma;          // antipodal map on the 32-vertex complexes
    // Coordinate-permutation action on the 32 vertex ids: images of the
    // transposition (1 2) and the 6-cycle (1 2 3 4 5 6).
    std::vector<VertexMap> s6_generators;
};

C1Artifacts c1_pipeline();

// ---- Construction 2: cross-polytope inside its dual hypercube ------------

enum class C2Diagonals {
    Forced,  // odd-parity diagonals in the +-e1 cube links, even elsewhere
    AllOdd,  // the opposite assignment; breaks antipodality (kept for tests)
};

struct C2Artifacts {
    SimplicialComplex x1_boundary;  // (24,88,128,64)
    SimplicialComplex x2_boundary;  // (24,120,192,96)
    SimplicialComplex x3_boundary;  // (24,120,192,96), antipodal
    Involution boundary_antipodal;  // full negation on the 24 boundary vertices
    std::vector<long long> ball_stage_counts;  // 8,16,32,48,36,10
    SimplicialComplex rp4;          // 16 vertices, 150 facets
};

C2Artifacts c2_pipeline(C2Diagonals diagonals = C2Diagonals::Forced);

// ---- Construction 3: suspended cube inside its dual octahedral prism -----

struct C3DualTable {
    int points = 0;       // duals of the 12 pyramidal facets
    int long_edges = 0;   // duals of the 6 cube squares
    int short_edges = 0;  // duals of the 24 suspension triangles
    int rectangles = 0;   // duals of the 12 cube edges
    int triangles = 0;    // duals of the 16 vertex-apex edges
    int prisms = 0;       // duals of the 8 cube vertices
    int octahedra = 0;    // duals of the 2 apexes
};

struct C3Artifacts {
    std::vector<long long> stage_counts;       // 24,16,24,8,12,2,48,8,8
    SimplicialComplex pre_quotient_boundary;   // (22,102,160,80)
    C3DualTable dual_table;
    SimplicialComplex rp4;                     // 16 vertices, 150 facets
};

C3Artifacts c3_pipeline();

// ---- Small projective spaces and reference generators -------------------

SimplicialComplex rp2_6();   // 6 vertices, 10 facets
SimplicialComplex rp3_11();  // 11 vertices, 40 facets

// Barycentric subdivision of the (n+1)-simplex boundary modulo complements:
// 2^{n+1}-1 vertices.
SimplicialComplex kuehnel_rp(int n);

// 16-vertex complex read off the labeled K6: 30 vertex-edge facets plus 120
// triple facets.
SimplicialComplex rp4_from_k6(const K6Structure& k6);

// Lower bound C(n+2,2)+1 for the vertices of a triangulated RP^n, n >= 3.
long long arnoux_marin_bound(int n);

}  // namespace rp4
