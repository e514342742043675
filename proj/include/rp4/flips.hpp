#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rp4/complex.hpp"

namespace rp4 {

// Replace out_face * boundary(in_face) by in_face * boundary(out_face).
// Valid when link(out_face) equals the boundary of in_face on its own vertex
// set and in_face is not a face of the complex.
struct BistellarMove {
    Simplex out_face;
    Simplex in_face;

    bool operator==(const BistellarMove&) const = default;
};

std::string to_string(const BistellarMove& m);

// The move removing face A, if valid; std::nullopt otherwise.
// Throws ComplexError if A is not a face.
std::optional<BistellarMove> is_flippable(const SimplicialComplex& c, const Simplex& A);

// Apply a single move. Throws ComplexError when the move is stale or invalid.
SimplicialComplex apply_flip(const SimplicialComplex& c, const BistellarMove& m);

// Simultaneous batch: every move is validated against the starting complex
// and the replaced facet sets must be pairwise disjoint; applied atomically.
SimplicialComplex apply_flip_batch(const SimplicialComplex& c,
                                   const std::vector<BistellarMove>& moves);

// All valid moves, in canonical order (sorted by out_face).
std::vector<BistellarMove> valid_moves(const SimplicialComplex& c);

// True iff the complex is the boundary of a (d+1)-simplex up to relabeling.
bool is_boundary_simplex_complex(const SimplicialComplex& c);

struct ReduceOptions {
    std::uint64_t seed = 0;
    long long budget = 6000;   // steps per restart
    int restarts = 4;
    double t0 = 1.5;           // starting temperature for the escape policy
    double cooling = 0.995;    // applied per stuck step
    int jobs = 1;              // restarts may run concurrently
};

struct ReductionReport {
    SimplicialComplex final_complex;
    bool certified = false;     // final complex is a boundary simplex
    std::vector<BistellarMove> trace;
    long long moves_applied = 0;
    std::uint64_t winning_seed = 0;
};

// Simulated-annealing f-vector reduction. Moves lowering the f-vector
// lexicographically are always taken (uniformly among the best class);
// when stuck, a neutral or raising move is accepted with probability
// exp(-penalty/T) under geometric cooling with a reheat floor. A move is
// never undone immediately. Deterministic for a given seed; with
// restarts > 1, independently seeded searches run and the lowest-indexed
// certified search wins.
ReductionReport reduce(const SimplicialComplex& c, const ReduceOptions& opts = {});

}  // namespace rp4
