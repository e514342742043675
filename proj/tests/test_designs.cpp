#include <doctest.h>

#include <map>
#include <set>

#include "rp4/constructions.hpp"
#include "rp4/designs.hpp"

using namespace rp4;

TEST_SUITE_BEGIN("designs");

namespace {

std::set<int> label_set(const std::array<int, 4>& a) { return {a.begin(), a.end()}; }

int intersection_size(const std::set<int>& a, const std::set<int>& b) {
    int n = 0;
    for (int x : a) n += b.count(x);
    return n;
}

}  // namespace

TEST_CASE("K6 inventory") {
    auto k6 = build_k6();
    CHECK(k6.bisections.size() == 10);
    CHECK(k6.edges.size() == 15);
    CHECK(k6.matchings.size() == 15);
    CHECK(k6.factorizations.size() == 6);

    // each bisection lies in exactly six edge labels (15*4 = 10*6)
    std::map<int, int> uses;
    for (const auto& e : k6.edges)
        for (int b : e.label) ++uses[b];
    for (int b = 0; b < 10; ++b) CHECK(uses[b] == 6);

    // matching labels avoid their member edges' labels
    for (const auto& m : k6.matchings) {
        std::set<int> used;
        for (int ei : m.edge_idx)
            for (int b : k6.edges[ei].label) used.insert(b);
        CHECK(used.size() == 6);
        for (int b : m.label) CHECK_FALSE(used.count(b));
    }

    // every matching in exactly two factorizations; pairs meet in one
    for (int m = 0; m < 15; ++m) {
        auto [f, g] = k6.factorizations_of_matching(m);
        CHECK(f != g);
    }
    for (int f = 0; f < 6; ++f)
        for (int g = f + 1; g < 6; ++g) CHECK(k6.common_matching(f, g) >= 0);
}

TEST_CASE("edge label intersections") {
    auto k6 = build_k6();
    for (std::size_t i = 0; i < k6.edges.size(); ++i)
        for (std::size_t j = i + 1; j < k6.edges.size(); ++j) {
            const auto& a = k6.edges[i];
            const auto& b = k6.edges[j];
            bool adjacent = (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v);
            int common = intersection_size(label_set(a.label), label_set(b.label));
            CHECK(common == (adjacent ? 1 : 2));
        }
}

TEST_CASE("quasi-symmetric 2-(10,4,2) designs") {
    auto k6 = build_k6();
    auto de = design_e(k6);
    auto dm = design_m(k6);
    CHECK(de.blocks.size() == 15);
    CHECK(dm.blocks.size() == 15);
    CHECK(verify_design(de, 2, 10, 4, 2).ok);
    CHECK(verify_design(dm, 2, 10, 4, 2).ok);
    CHECK(block_intersection_profile(de) == std::vector<int>{1, 2});
    CHECK(block_intersection_profile(dm) == std::vector<int>{1, 2});

    // wrong parameters produce a counterexample
    auto bad = verify_design(de, 3, 10, 4, 1);
    CHECK_FALSE(bad.ok);
    CHECK(bad.counterexample.has_value());
    CHECK(bad.counterexample->size() == 3);
    CHECK(bad.count_at_counterexample != 1);
}

TEST_CASE("deleting two bisections leaves an edge plus a 4-cycle") {
    auto k6 = build_k6();
    for (int b1 = 0; b1 < 10; ++b1)
        for (int b2 = b1 + 1; b2 < 10; ++b2) {
            std::vector<const K6Structure::Edge*> rest;
            for (const auto& e : k6.edges) {
                auto lab = label_set(e.label);
                if (!lab.count(b1) && !lab.count(b2)) rest.push_back(&e);
            }
            REQUIRE(rest.size() == 5);
            std::map<int, int> degree;
            for (const auto* e : rest) {
                ++degree[e->u];
                ++degree[e->v];
            }
            std::vector<int> degs;
            for (auto& [v, d] : degree) degs.push_back(d);
            std::sort(degs.begin(), degs.end());
            CHECK(degs == std::vector<int>{1, 1, 2, 2, 2, 2});

            int matchings_inside = 0;
            for (const auto& m : k6.matchings) {
                auto lab = label_set(m.label);
                if (lab.count(b1) && lab.count(b2)) ++matchings_inside;
            }
            CHECK(matchings_inside == 2);
        }
}

TEST_CASE("the two biplanes") {
    auto k6 = build_k6();
    for (const Design& d : {biplane_e(k6), biplane_m(k6)}) {
        CHECK(d.blocks.size() == 16);
        CHECK(verify_design(d, 2, 16, 6, 2).ok);
        CHECK(block_intersection_profile(d) == std::vector<int>{2});
    }
}

TEST_CASE("incident and skew edge-matching label intersections") {
    auto k6 = build_k6();
    for (std::size_t ei = 0; ei < k6.edges.size(); ++ei)
        for (const auto& m : k6.matchings) {
            bool incident = std::find(m.edge_idx.begin(), m.edge_idx.end(),
                                      static_cast<int>(ei)) != m.edge_idx.end();
            int common = intersection_size(label_set(k6.edges[ei].label),
                                           label_set(m.label));
            CHECK(common == (incident ? 0 : 2));
        }
}

TEST_CASE("the 22-point design") {
    auto k6 = build_k6();
    auto w = witt22(k6);
    CHECK(w.points.size() == 22);
    CHECK(w.blocks.size() == 77);
    for (const auto& b : w.blocks) CHECK(b.size() == 6);
    CHECK(em_blocks(k6).size() == 45);
    CHECK(verify_design(w, 3, 22, 6, 1).ok);
    CHECK(verify_design(w, 3, 22, 6, 1, /*jobs=*/2).ok);
    CHECK(block_intersection_profile(w) == std::vector<int>{0, 2});
}

TEST_CASE("block deletion recovers the biplane structure") {
    auto k6 = build_k6();
    auto w = witt22(k6);
    for (std::size_t i = 0; i < w.blocks.size(); ++i) {
        std::set<int> b0(w.blocks[i].begin(), w.blocks[i].end());
        std::vector<std::vector<int>> six, four;
        for (std::size_t j = 0; j < w.blocks.size(); ++j) {
            if (j == i) continue;
            std::vector<int> rest;
            for (int p : w.blocks[j])
                if (!b0.count(p)) rest.push_back(p);
            if (rest.size() == 6) six.push_back(rest);
            else if (rest.size() == 4) four.push_back(rest);
            else CHECK(false);
        }
        REQUIRE(six.size() == 16);
        REQUIRE(four.size() == 60);

        Design residual;
        for (int p = 1; p <= 22; ++p)
            if (!b0.count(p)) residual.points.push_back(p);
        residual.blocks = six;
        CHECK(verify_design(residual, 2, 16, 6, 2).ok);

        // fixing one of the sixteen splits the four-sets 15 + 45
        std::set<int> fixed(six[0].begin(), six[0].end());
        int disjoint = 0, meet2 = 0;
        for (const auto& f : four) {
            int common = 0;
            for (int p : f) common += fixed.count(p);
            if (common == 0) ++disjoint;
            else if (common == 2) ++meet2;
        }
        CHECK(disjoint == 15);
        CHECK(meet2 == 45);
        if (i >= 10) break;  // the pattern is block-transitive; sample a few
    }
}

TEST_CASE("matching labels are ovals of the edge biplane") {
    auto k6 = build_k6();
    auto bp = biplane_e(k6);
    for (const auto& m : k6.matchings) {
        std::vector<int> oval;
        for (int b : m.label) oval.push_back(K6Structure::bisection_id(b));
        std::sort(oval.begin(), oval.end());
        // no 3 of the 4 points lie in a common block
        for (int skip = 0; skip < 4; ++skip) {
            std::vector<int> triple;
            for (int t = 0; t < 4; ++t)
                if (t != skip) triple.push_back(oval[t]);
            for (const auto& block : bp.blocks)
                CHECK_FALSE(std::includes(block.begin(), block.end(), triple.begin(),
                                          triple.end()));
        }
    }
}

TEST_CASE("duality: rebuilding from the dual K6 recovers the edge labels") {
    auto k6 = build_k6();
    // dual K6: vertices = factorizations, edge (f,g) labeled by the common
    // matching's 4-set
    std::map<std::pair<int, int>, std::set<int>> dual_edge_label;
    for (int f = 0; f < 6; ++f)
        for (int g = f + 1; g < 6; ++g)
            dual_edge_label[{f, g}] = label_set(k6.matchings[k6.common_matching(f, g)].label);

    // matchings of the dual K6 = partitions of the six factorizations into
    // three pairs; their labels must be exactly the original edge labels
    std::set<std::set<int>> dual_matching_labels;
    std::vector<std::array<std::pair<int, int>, 3>> partitions;
    for (int p1 = 1; p1 < 6; ++p1) {
        std::vector<int> rest;
        for (int v = 1; v < 6; ++v)
            if (v != p1) rest.push_back(v);
        for (int j = 1; j < 4; ++j) {
            int a = rest[0], b = rest[j];
            std::vector<int> last;
            for (int v : rest)
                if (v != a && v != b) last.push_back(v);
            partitions.push_back({std::pair{0, p1}, {std::min(a, b), std::max(a, b)},
                                  {std::min(last[0], last[1]), std::max(last[0], last[1])}});
        }
    }
    REQUIRE(partitions.size() == 15);
    for (const auto& part : partitions) {
        std::set<int> used;
        for (const auto& [f, g] : part)
            for (int x : dual_edge_label.at({f, g})) used.insert(x);
        CHECK(used.size() == 6);
        std::set<int> label;
        for (int b = 0; b < 10; ++b)
            if (!used.count(b)) label.insert(b);
        dual_matching_labels.insert(label);
    }
    std::set<std::set<int>> edge_labels;
    for (const auto& e : k6.edges) edge_labels.insert(label_set(e.label));
    CHECK(dual_matching_labels == edge_labels);
}

TEST_CASE("octahedral axes of the K6 complex") {
    auto k6 = build_k6();
    auto complex = rp4_from_k6(k6);
    // the 120-type facets carry exactly two of the six vertex points
    int with_two = 0;
    for (const Simplex& f : complex.facets()) {
        int low = 0;
        for (VertexId v : f) low += (v <= 6);
        if (low == 2) ++with_two;
    }
    CHECK(with_two == 120);

    auto rep = octahedral_axes_check(complex, k6);
    CHECK(rep.ok);
    CHECK(rep.quadruples_checked == 45);
}

TEST_SUITE_END();
