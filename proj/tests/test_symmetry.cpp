#include <doctest.h>

#include "rp4/symmetry.hpp"
#include "support.hpp"

using namespace rp4;
using rp4::testing::shuffled;

TEST_SUITE_BEGIN("symmetry");

TEST_CASE("automorphism groups of the reference complexes") {
    auto g = automorphism_group(simplex_boundary(5));
    CHECK(g.order == 720);
    CHECK(g.vertex_orbit_sizes() == std::vector<std::size_t>{6});
    CHECK(g.facet_orbit_sizes() == std::vector<std::size_t>{6});

    auto h = automorphism_group(cross_polytope_boundary(4));
    CHECK(h.order == 384);  // 2^4 * 4!
    CHECK(h.vertex_orbit_sizes() == std::vector<std::size_t>{8});
    CHECK(h.facet_orbit_sizes() == std::vector<std::size_t>{16});
}

TEST_CASE("generators preserve the facet set and orbits partition") {
    for (const auto& c : {rp2_6(), cross_polytope_boundary(3)}) {
        auto g = automorphism_group(c);
        for (const VertexMap& gen : g.generators) CHECK(is_facet_invariant(c, gen));
        std::size_t nsum = 0, fsum = 0;
        for (const auto& o : g.vertex_orbits) nsum += o.size();
        for (const auto& o : g.facet_orbits) fsum += o.size();
        CHECK(nsum == static_cast<std::size_t>(c.vertex_count()));
        CHECK(fsum == static_cast<std::size_t>(c.facet_count()));
    }
}

TEST_CASE("canonical forms identify relabelings") {
    auto base = rp2_6();
    auto a = shuffled(base, 101);
    auto b = shuffled(base, 202);
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(a) == canonical_form(base));

    auto rp4 = c1_pipeline().rp4;
    CHECK(canonical_form(shuffled(rp4, 303)) == canonical_form(rp4));
}

TEST_CASE("the bijection between two generators carries facets to facets") {
    auto a = c1_pipeline().rp4;
    auto b = c2_pipeline().rp4;
    auto bij = are_isomorphic(a, b);
    REQUIRE(bij.has_value());
    CHECK(apply_vertex_map(a, *bij) == b);
}

TEST_CASE("different complexes get different forms") {
    CHECK_FALSE(canonical_form(simplex_boundary(4)) ==
                canonical_form(cross_polytope_boundary(4)));
    CHECK_FALSE(are_isomorphic(simplex_boundary(4), cross_polytope_boundary(4)));
}

TEST_CASE("isomorphism returns a facet-preserving bijection") {
    auto base = rp3_11();
    auto other = shuffled(base, 7);
    auto bij = are_isomorphic(base, other);
    REQUIRE(bij.has_value());
    CHECK(apply_vertex_map(base, *bij) == other);
    CHECK(are_isomorphic(base, base).has_value());
}

TEST_CASE("isomorphism composes and inverts") {
    auto a = rp2_6();
    auto b = shuffled(a, 31);
    auto c = shuffled(a, 32);
    auto ab = are_isomorphic(a, b);
    auto bc = are_isomorphic(b, c);
    REQUIRE(ab.has_value());
    REQUIRE(bc.has_value());
    VertexMap ac;
    for (const auto& [x, y] : *ab) ac[x] = bc->at(y);
    CHECK(apply_vertex_map(a, ac) == c);
    VertexMap ba;
    for (const auto& [x, y] : *ab) ba[y] = x;
    CHECK(apply_vertex_map(b, ba) == a);
}

TEST_CASE("vertex count and f-vector mismatches are rejected quickly") {
    CHECK_FALSE(are_isomorphic(rp2_6(), simplex_boundary(2)));
    CHECK_FALSE(are_isomorphic(simplex_boundary(3), cross_polytope_boundary(2)));
    CHECK_FALSE(are_isomorphic(c1_pipeline().rp4, kuehnel_rp(4)));
}

TEST_CASE("a rigid complex has the trivial group") {
    // a tree with legs of lengths 1, 2, 3 admits no symmetry
    auto rigid = SimplicialComplex::from_facets(
        {Simplex{3, 6}, Simplex{1, 2}, Simplex{2, 3}, Simplex{3, 4}, Simplex{4, 5},
         Simplex{5, 7}});
    auto g = automorphism_group(rigid);
    CHECK(g.order == 1);
    CHECK(g.generators.empty());
    CHECK(g.vertex_orbits.size() == 7);
    CHECK(canonical_form(rigid) == canonical_form(rp4::testing::shuffled(rigid, 9)));
}

TEST_CASE("orbit computations under explicit generators") {
    auto c = cross_polytope_boundary(2);  // a 4-cycle
    VertexMap rot{{1, 3}, {3, 2}, {2, 4}, {4, 1}};
    auto vo = vertex_orbits_under(c.vertices(), {rot});
    CHECK(vo.size() == 1);
    auto fo = facet_orbits_under(c, {rot});
    CHECK(fo.size() == 1);
    VertexMap bad{{1, 3}, {3, 1}, {2, 2}, {4, 4}};
    CHECK_FALSE(is_facet_invariant(c, bad));  // sends an edge onto the diagonal
}

TEST_SUITE_END();
