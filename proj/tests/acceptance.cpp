// Acceptance suite: every release gate in one binary, one line per
// criterion. Exits nonzero if any criterion fails.

#include <functional>
#include <iostream>
#include <numeric>
#include <set>

#include "rp4/constructions.hpp"
#include "rp4/designs.hpp"
#include "rp4/flips.hpp"
#include "rp4/homology.hpp"
#include "rp4/manifold.hpp"
#include "rp4/symmetry.hpp"

using namespace rp4;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, const std::function<bool()>& run) {
    bool ok = false;
    std::string note;
    try {
        ok = run();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << what
              << note << "\n";
    if (!ok) ++failures;
}

template <typename T>
bool eq(const T& got, const T& want, const char* what) {
    if (got == want) return true;
    std::cout << "       " << what << " mismatch\n";
    return false;
}

const std::vector<HomologyGroup> kRp4Homology{{1, {}}, {0, {2}}, {0, {}}, {0, {2}}, {0, {}}};
const std::vector<HomologyGroup> kRp3Homology{{1, {}}, {0, {2}}, {0, {}}, {1, {}}};
const std::vector<HomologyGroup> kRp2Homology{{1, {}}, {0, {2}}, {0, {}}};

}  // namespace

int main() {
    C1Artifacts c1 = c1_pipeline();

    criterion(1, "construction 1 censuses (6 / 30 / 32v,330f / 300 in 30+30+120+120)", [&] {
        bool ok = c1.x6.facet_count() == 6;
        ok &= c1.x12.facet_count() == 30;
        ok &= c1.x32.vertex_count() == 32 && c1.x32.facet_count() == 330;
        ok &= c1.s4_32.facet_count() == 300;
        std::vector<std::size_t> sizes;
        for (const auto& o : facet_orbits_under(c1.s4_32, c1.s6_generators))
            sizes.push_back(o.size());
        std::sort(sizes.begin(), sizes.end());
        ok &= sizes == std::vector<std::size_t>{30, 30, 120, 120};
        return ok;
    });

    criterion(2, "16-vertex quotient: counts, f-vector, links, homology", [&] {
        bool ok = c1.rp4.vertex_count() == 16 && c1.rp4.facet_count() == 150;
        FVector f = f_vector(c1.rp4);
        ok &= eq(f, FVector{{16, 120, 330, 375, 150}}, "f-vector");
        ok &= f.euler() == 1;
        ok &= is_closed_pseudomanifold(c1.rp4).ok;
        SphereCheckOptions opts;
        opts.reduce.seed = 1;
        auto rep = check_combinatorial_manifold(c1.rp4, opts);
        ok &= rep.links.size() == 16;
        ok &= rep.all_certified;
        ok &= eq(homology(c1.rp4), kRp4Homology, "homology");
        return ok;
    });

    criterion(3, "antipodality: S4_32 passes at distance 3, X32 is not invariant", [&] {
        auto good = is_antipodal(c1.s4_32, c1.sigma);
        auto bad = is_antipodal(c1.x32, c1.sigma);
        return good.ok && good.min_distance == 3 && !bad.ok &&
               bad.failure == AntipodalFailure::NotInvariant;
    });

    criterion(4, "automorphism group: order 720, orbits {6,10} and {30,120}", [&] {
        auto g = automorphism_group(c1.rp4);
        return g.order == 720 &&
               g.vertex_orbit_sizes() == std::vector<std::size_t>{6, 10} &&
               g.facet_orbit_sizes() == std::vector<std::size_t>{30, 120};
    });

    criterion(5, "all four generators produce the same canonical form", [&] {
        auto form1 = canonical_form(c1.rp4);
        auto form2 = canonical_form(c2_pipeline().rp4);
        auto form3 = canonical_form(c3_pipeline().rp4);
        auto form4 = canonical_form(rp4_from_k6(build_k6()));
        return form1 == form2 && form1 == form3 && form1 == form4;
    });

    criterion(6, "construction 2 intermediates and ball stages", [&] {
        auto art = c2_pipeline();
        bool ok = eq(f_vector(art.x1_boundary), FVector{{24, 88, 128, 64}}, "X1");
        ok &= eq(f_vector(art.x2_boundary), FVector{{24, 120, 192, 96}}, "X2");
        ok &= eq(f_vector(art.x3_boundary), FVector{{24, 120, 192, 96}}, "X3");
        ok &= std::accumulate(art.ball_stage_counts.begin(),
                              art.ball_stage_counts.end(), 0LL) == 150;
        return ok;
    });

    criterion(7, "construction 3 boundary and stage counts", [&] {
        auto art = c3_pipeline();
        bool ok = eq(f_vector(art.pre_quotient_boundary), FVector{{22, 102, 160, 80}},
                     "boundary f-vector");
        ok &= eq(art.stage_counts,
                 std::vector<long long>{24, 16, 24, 8, 12, 2, 48, 8, 8}, "stages");
        ok &= std::accumulate(art.stage_counts.begin(), art.stage_counts.end(), 0LL) ==
              150;
        return ok;
    });

    criterion(8, "small spaces: 6-vertex plane and 11-vertex 3-space", [&] {
        auto r2 = rp2_6();
        bool ok = eq(f_vector(r2), FVector{{6, 15, 10}}, "rp2 f-vector");
        ok &= f_vector(r2).euler() == 1;
        ok &= eq(homology(r2), kRp2Homology, "rp2 homology");
        auto r3 = rp3_11();
        ok &= r3.vertex_count() == 11;
        ok &= f_vector(r3).euler() == 0;
        ok &= eq(homology(r3), kRp3Homology, "rp3 homology");
        ok &= check_combinatorial_manifold(r3).all_certified;
        return ok;
    });

    criterion(9, "designs: the 3-(22,6,1), both biplanes, both 2-(10,4,2)", [&] {
        auto k6 = build_k6();
        auto w = witt22(k6);
        bool ok = w.blocks.size() == 77;
        for (const auto& b : w.blocks) ok &= b.size() == 6;
        ok &= verify_design(w, 3, 22, 6, 1).ok;  // all 1540 triples exactly once
        for (const Design& d : {biplane_e(k6), biplane_m(k6)}) {
            ok &= verify_design(d, 2, 16, 6, 2).ok;
            ok &= block_intersection_profile(d) == std::vector<int>{2};
        }
        for (const Design& d : {design_e(k6), design_m(k6)}) {
            ok &= verify_design(d, 2, 10, 4, 2).ok;
            ok &= block_intersection_profile(d) == std::vector<int>{1, 2};
        }
        return ok;
    });

    criterion(10, "flip engine preserves topology; reverse moves round-trip", [&] {
        bool ok = true;
        // the 6-vertex plane is 2-neighborly and admits no moves; the
        // property is checked over every valid move of the larger spaces
        ok &= valid_moves(rp2_6()).empty();
        for (const auto& c : {cross_polytope_boundary(3), rp3_11()}) {
            auto h0 = homology(c);
            long long chi0 = f_vector(c).euler();
            auto moves = valid_moves(c);
            ok &= !moves.empty();
            for (const auto& mv : moves) {
                auto flipped = apply_flip(c, mv);
                ok &= f_vector(flipped).euler() == chi0;
                ok &= homology(flipped) == h0;
                ok &= apply_flip(flipped, BistellarMove{mv.in_face, mv.out_face}) == c;
            }
        }
        return ok;
    });

    criterion(11, "31-vertex quotient generator: counts and homology", [&] {
        auto k = kuehnel_rp(4);
        return k.vertex_count() == 31 && k.facet_count() == 360 &&
               homology(k) == kRp4Homology;
    });

    criterion(12, "vertex lower bound values", [&] {
        return arnoux_marin_bound(4) == 16 && arnoux_marin_bound(3) == 11 &&
               arnoux_marin_bound(5) == 22;
    });

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 12 criteria passed\n";
    return 0;
}
