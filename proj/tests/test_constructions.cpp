#include <doctest.h>

#include <numeric>
#include <set>

#include "rp4/constructions.hpp"
#include "rp4/homology.hpp"
#include "rp4/manifold.hpp"
#include "support.hpp"

using namespace rp4;

TEST_SUITE_BEGIN("constructions");

TEST_CASE("construction 1 stage censuses") {
    auto art = c1_pipeline();
    CHECK(art.x6.facet_count() == 6);
    CHECK(art.x12.vertex_count() == 12);
    CHECK(art.x12.facet_count() == 30);
    CHECK(art.x32.vertex_count() == 32);
    CHECK(art.x32.facet_count() == 330);
    CHECK(art.s4_32.facet_count() == 300);
    CHECK(art.rp4.vertex_count() == 16);
    CHECK(art.rp4.facet_count() == 150);
}

TEST_CASE("the 32-vertex sphere is a sphere") {
    auto art = c1_pipeline();
    CHECK(is_closed_pseudomanifold(art.s4_32).ok);
    using H = std::vector<HomologyGroup>;
    CHECK(homology(art.s4_32) == H{{1, {}}, {0, {}}, {0, {}}, {0, {}}, {1, {}}});
}

TEST_CASE("coordinate symmetry and the antipodal map") {
    auto art = c1_pipeline();
    for (const VertexMap& g : art.s6_generators) {
        CHECK(is_facet_invariant(art.s4_32, g));
        // sigma commutes with the coordinate action
        for (const auto& [v, img] : g) {
            CHECK(art.sigma(g.at(v)) == g.at(art.sigma(v)));
        }
    }
    VertexMap sigma_map;
    for (VertexId v : art.s4_32.vertices()) sigma_map[v] = art.sigma(v);
    CHECK(is_facet_invariant(art.s4_32, sigma_map));
}

TEST_CASE("facet types of the 32-vertex sphere") {
    auto art = c1_pipeline();
    auto orbits = facet_orbits_under(art.s4_32, art.s6_generators);
    std::vector<std::size_t> sizes;
    for (const auto& o : orbits) sizes.push_back(o.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{30, 30, 120, 120});

    // sigma pairs the two orbits of each size
    VertexMap sigma_map;
    for (VertexId v : art.s4_32.vertices()) sigma_map[v] = art.sigma(v);
    auto with_sigma = art.s6_generators;
    with_sigma.push_back(sigma_map);
    auto merged = facet_orbits_under(art.s4_32, with_sigma);
    std::vector<std::size_t> merged_sizes;
    for (const auto& o : merged) merged_sizes.push_back(o.size());
    std::sort(merged_sizes.begin(), merged_sizes.end());
    CHECK(merged_sizes == std::vector<std::size_t>{60, 240});
}

TEST_CASE("the 16-vertex complex is 2-neighborly") {
    auto art = c1_pipeline();
    CHECK(face_count(art.rp4, 1) == 120);  // C(16,2)
}

TEST_CASE("quotient labels record the identified orbit") {
    auto art = c1_pipeline();
    CHECK(art.rp4.label_of(1) == "e1~-e1");
    CHECK(art.rp4.label_of(7) == "123~456");
}

TEST_CASE("edge links between small-orbit vertices are octahedra") {
    // the small automorphism orbit of the quotient is ids 1..6; the link of
    // any edge between two of them is the boundary of a 3-cross-polytope on
    // six large-orbit vertices
    auto art = c1_pipeline();
    for (VertexId u = 1; u <= 6; ++u)
        for (VertexId v = u + 1; v <= 6; ++v) {
            auto lk = link(art.rp4, Simplex{u, v});
            CHECK(lk.vertex_count() == 6);
            CHECK(lk.facet_count() == 8);
            for (VertexId w : lk.vertices()) CHECK((w >= 7 && w <= 16));
            CHECK(are_isomorphic(lk, cross_polytope_boundary(3)).has_value());
        }
}

TEST_CASE("automorphisms of the 16-vertex complex") {
    auto art = c1_pipeline();
    auto g = automorphism_group(art.rp4);
    CHECK(g.order == 720);
    CHECK(g.vertex_orbit_sizes() == std::vector<std::size_t>{6, 10});
    CHECK(g.facet_orbit_sizes() == std::vector<std::size_t>{30, 120});

    // small-orbit facets hold one vertex of the 6-orbit, large-orbit two
    const auto& small_vertex_orbit =
        g.vertex_orbits[0].size() == 6 ? g.vertex_orbits[0] : g.vertex_orbits[1];
    std::set<VertexId> six(small_vertex_orbit.begin(), small_vertex_orbit.end());
    for (const auto& orbit : g.facet_orbits) {
        int expect = orbit.size() == 30 ? 1 : 2;
        for (int fi : orbit) {
            int inside = 0;
            for (VertexId v : art.rp4.facets()[fi]) inside += six.count(v);
            CHECK(inside == expect);
        }
    }
}

TEST_CASE("construction 2 stage f-vectors") {
    auto art = c2_pipeline();
    CHECK(f_vector(art.x1_boundary) == FVector{{24, 88, 128, 64}});
    CHECK(f_vector(art.x2_boundary) == FVector{{24, 120, 192, 96}});
    CHECK(f_vector(art.x3_boundary) == FVector{{24, 120, 192, 96}});
    CHECK(art.ball_stage_counts == std::vector<long long>{8, 16, 32, 48, 36, 10});
    CHECK(std::accumulate(art.ball_stage_counts.begin(), art.ball_stage_counts.end(),
                          0LL) == 150);
    CHECK(art.rp4.vertex_count() == 16);
    CHECK(art.rp4.facet_count() == 150);
    CHECK(is_closed_pseudomanifold(art.rp4).ok);
}

TEST_CASE("construction 3 stages and dual table") {
    auto art = c3_pipeline();
    CHECK(art.stage_counts ==
          std::vector<long long>{24, 16, 24, 8, 12, 2, 48, 8, 8});
    CHECK(std::accumulate(art.stage_counts.begin(), art.stage_counts.end(), 0LL) ==
          150);
    CHECK(f_vector(art.pre_quotient_boundary) == FVector{{22, 102, 160, 80}});
    CHECK(is_closed_pseudomanifold(art.pre_quotient_boundary).ok);

    CHECK(art.dual_table.points == 12);
    CHECK(art.dual_table.long_edges == 6);
    CHECK(art.dual_table.short_edges == 24);
    CHECK(art.dual_table.rectangles == 12);
    CHECK(art.dual_table.triangles == 16);
    CHECK(art.dual_table.prisms == 8);
    CHECK(art.dual_table.octahedra == 2);

    CHECK(art.rp4.vertex_count() == 16);
    CHECK(art.rp4.facet_count() == 150);
}

TEST_CASE("small projective planes and spaces") {
    auto r2 = rp2_6();
    CHECK(f_vector(r2) == FVector{{6, 15, 10}});
    CHECK(f_vector(r2).euler() == 1);

    auto r3 = rp3_11();
    CHECK(r3.vertex_count() == 11);
    CHECK(f_vector(r3) == FVector{{11, 51, 80, 40}});
    CHECK(f_vector(r3).euler() == 0);
}

TEST_CASE("kuehnel quotients") {
    CHECK(kuehnel_rp(2).vertex_count() == 7);  // 2^3 - 1
    auto k4 = kuehnel_rp(4);
    CHECK(k4.vertex_count() == 31);
    CHECK(k4.facet_count() == 360);  // 6! flags halved
    CHECK_THROWS_AS(kuehnel_rp(1), std::invalid_argument);
}

TEST_CASE("vertex lower bound") {
    CHECK(arnoux_marin_bound(3) == 11);
    CHECK(arnoux_marin_bound(4) == 16);
    CHECK(arnoux_marin_bound(5) == 22);
    CHECK_THROWS_AS(arnoux_marin_bound(2), std::invalid_argument);
}

TEST_CASE("the K6 readout matches construction 1") {
    auto art = c1_pipeline();
    auto from_k6 = rp4_from_k6(build_k6());
    CHECK(from_k6.vertex_count() == 16);
    CHECK(from_k6.facet_count() == 150);
    CHECK(are_isomorphic(from_k6, art.rp4).has_value());
}

TEST_SUITE_END();
