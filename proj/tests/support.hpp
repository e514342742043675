#pragma once

// Shared helpers for the test suites: a small corpus of complexes, an
// independent face-counting route, and a deterministic shuffler.

#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "rp4/complex.hpp"
#include "rp4/constructions.hpp"

namespace rp4::testing {

struct NamedComplex {
    std::string name;
    SimplicialComplex complex;
};

// Small complexes exercised by the property-style tests.
inline std::vector<NamedComplex> small_corpus() {
    return {
        {"boundary-4-simplex", simplex_boundary(4)},
        {"boundary-5-simplex", simplex_boundary(5)},
        {"crosspoly-3", cross_polytope_boundary(3)},
        {"crosspoly-4", cross_polytope_boundary(4)},
        {"rp2-6", rp2_6()},
        {"rp3-11", rp3_11()},
    };
}

// Independent route for face counts: peel one dimension at a time from the
// facets instead of expanding subsets.
inline long long face_count_by_descent(const SimplicialComplex& c, int k) {
    std::set<Simplex> level(c.facets().begin(), c.facets().end());
    for (int d = c.dim(); d > k; --d) {
        std::set<Simplex> next;
        for (const Simplex& s : level)
            for (VertexId v : s) next.insert(s.minus_vertex(v));
        level = std::move(next);
    }
    return static_cast<long long>(level.size());
}

struct TestRng {
    std::uint64_t s;
    explicit TestRng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
};

// Deterministically relabel a normalized complex by a random permutation.
inline SimplicialComplex shuffled(const SimplicialComplex& c, std::uint64_t seed) {
    TestRng rng(seed);
    const int n = c.vertex_count();
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.below(static_cast<std::size_t>(i) + 1)]);
    return rename_vertices(c, [&](VertexId v) { return perm[v - 1]; });
}

}  // namespace rp4::testing
