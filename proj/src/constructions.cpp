#include "rp4/constructions.hpp"

#include <array>
#include <set>

#include "rp4/flips.hpp"
#include "rp4/manifold.hpp"

namespace rp4 {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw ConstructionError(msg);
}

}  // namespace

// =========================================================================
// Construction 1
// =========================================================================

namespace {

// ids 1..6 = e_i, 7..26 = triple barycenters (lex), 27..32 = facet barycenters
struct C1Scheme {
    std::map<std::array<int, 3>, VertexId> triple_id;
    std::map<VertexId, std::array<int, 3>> triple_of;

    C1Scheme() {
        VertexId next = 7;
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j)
                for (int k = j + 1; k <= 6; ++k) {
                    triple_id[{i, j, k}] = next;
                    triple_of[next] = {i, j, k};
                    ++next;
                }
    }

    VertexId t(int a, int b, int c) const {
        std::array<int, 3> key{a, b, c};
        std::sort(key.begin(), key.end());
        return triple_id.at(key);
    }
    static VertexId e(int i) { return i; }
    static VertexId f(int m) { return 26 + m; }  // antipode of e_m

    VertexId complement(VertexId tv) const {
        const auto& tr = triple_of.at(tv);
        std::array<int, 3> other;
        int k = 0;
        for (int i = 1; i <= 6; ++i)
            if (i != tr[0] && i != tr[1] && i != tr[2]) other[k++] = i;
        return triple_id.at(other);
    }

    std::map<VertexId, std::string> labels() const {
        std::map<VertexId, std::string> lab;
        for (int i = 1; i <= 6; ++i) {
            lab[e(i)] = "e" + std::to_string(i);
            lab[f(i)] = "-e" + std::to_string(i);
        }
        for (const auto& [tr, id] : triple_id)
            lab[id] = std::to_string(tr[0]) + std::to_string(tr[1]) + std::to_string(tr[2]);
        return lab;
    }

    // action on all 32 ids induced by a permutation of {1..6}
    VertexMap induced(const std::map<int, int>& pi) const {
        VertexMap out;
        for (int i = 1; i <= 6; ++i) {
            out[e(i)] = e(pi.at(i));
            out[f(i)] = f(pi.at(i));
        }
        for (const auto& [tr, id] : triple_id)
            out[id] = t(pi.at(tr[0]), pi.at(tr[1]), pi.at(tr[2]));
        return out;
    }
};

}  // namespace

C1Artifacts c1_pipeline() {
    C1Scheme sc;
    C1Artifacts art;

    // X6 = boundary of the 5-simplex
    {
        auto x6 = simplex_boundary(5);
        for (int i = 1; i <= 6; ++i) x6.set_label(i, "e" + std::to_string(i));
        art.x6 = x6;
    }
    require(art.x6.facet_count() == 6, "c1: X6 must have 6 facets");

    // X12: cone each facet's tetrahedra at the facet barycenter
    {
        std::vector<Simplex> facets;
        for (int m = 1; m <= 6; ++m) {
            std::vector<int> others;
            for (int i = 1; i <= 6; ++i)
                if (i != m) others.push_back(i);
            for (int skip : others) {
                std::vector<VertexId> f;
                for (int i : others)
                    if (i != skip) f.push_back(C1Scheme::e(i));
                f.push_back(C1Scheme::f(m));
                facets.push_back(Simplex(std::move(f)));
            }
        }
        art.x12 = SimplicialComplex::from_facets(std::move(facets), sc.labels());
    }
    require(art.x12.vertex_count() == 12 && art.x12.facet_count() == 30,
            "c1: X12 must have 12 vertices and 30 facets");

    // X32: subdivide each tetrahedron [e_i,e_j,e_k,e_l] into 11 via the
    // triangle barycenters, joined with the facet barycenter f(m).
    {
        std::vector<Simplex> facets;
        for (const Simplex& x12f : art.x12.facets()) {
            std::vector<int> es;
            int m = 0;
            for (VertexId v : x12f) {
                if (v <= 6) es.push_back(v);
                else m = v - 26;
            }
            const VertexId fm = C1Scheme::f(m);
            const int i = es[0], j = es[1], k = es[2], l = es[3];
            // six edge tetrahedra
            for (int a = 0; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b) {
                    std::vector<int> rest;
                    for (int c = 0; c < 4; ++c)
                        if (c != a && c != b) rest.push_back(es[c]);
                    facets.push_back(Simplex{es[a], es[b],
                                             sc.t(es[a], es[b], rest[0]),
                                             sc.t(es[a], es[b], rest[1]), fm});
                }
            // four vertex tetrahedra
            for (int a = 0; a < 4; ++a) {
                std::vector<int> rest;
                for (int c = 0; c < 4; ++c)
                    if (c != a) rest.push_back(es[c]);
                facets.push_back(Simplex{es[a], sc.t(es[a], rest[0], rest[1]),
                                         sc.t(es[a], rest[0], rest[2]),
                                         sc.t(es[a], rest[1], rest[2]), fm});
            }
            // central tetrahedron
            facets.push_back(Simplex{sc.t(j, k, l), sc.t(i, k, l), sc.t(i, j, l),
                                     sc.t(i, j, k), fm});
        }
        art.x32 = SimplicialComplex::from_facets(std::move(facets), sc.labels());
    }
    require(art.x32.vertex_count() == 32 && art.x32.facet_count() == 330,
            "c1: X32 must have 32 vertices and 330 facets");

    // sigma: e_i <-> antipodal barycenter, triple <-> complementary triple
    {
        std::vector<std::pair<VertexId, VertexId>> pairs;
        for (int i = 1; i <= 6; ++i) pairs.emplace_back(C1Scheme::e(i), C1Scheme::f(i));
        for (const auto& [tr, id] : sc.triple_id) {
            VertexId c = sc.complement(id);
            if (id < c) pairs.emplace_back(id, c);
        }
        art.sigma = Involution::from_pairs(pairs);
    }

    // Round 1: simultaneous flips of the 60 triangles [e_i, e_j, f(k)].
    {
        std::vector<BistellarMove> moves;
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j)
                for (int k = 1; k <= 6; ++k) {
                    if (k == i || k == j) continue;
                    auto mv = is_flippable(art.x32,
                                           Simplex{C1Scheme::e(i), C1Scheme::e(j), C1Scheme::f(k)});
                    require(mv.has_value(), "c1: round-1 triangle not flippable");
                    std::vector<VertexId> expect;
                    for (int l = 1; l <= 6; ++l)
                        if (l != i && l != j && l != k) expect.push_back(sc.t(i, j, l));
                    require(mv->in_face == Simplex(expect),
                            "c1: round-1 link is not the expected triple triangle");
                    moves.push_back(std::move(*mv));
                }
        require(moves.size() == 60, "c1: expected 60 round-1 flips");
        art.s4_32 = apply_flip_batch(art.x32, moves);
        require(art.s4_32.facet_count() == 330,
                "c1: facet count must stay 330 after round 1");
    }

    // Round 2: simultaneous flips of the 15 edges [e_i, e_j].
    {
        std::vector<BistellarMove> moves;
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j) {
                auto mv = is_flippable(art.s4_32, Simplex{C1Scheme::e(i), C1Scheme::e(j)});
                require(mv.has_value(), "c1: round-2 edge not flippable");
                std::vector<VertexId> expect;
                for (int l = 1; l <= 6; ++l)
                    if (l != i && l != j) expect.push_back(sc.t(i, j, l));
                require(mv->in_face == Simplex(expect),
                        "c1: round-2 link is not the barycenter tetrahedron boundary");
                moves.push_back(std::move(*mv));
            }
        require(moves.size() == 15, "c1: expected 15 round-2 flips");
        art.s4_32 = apply_flip_batch(art.s4_32, moves);
        require(art.s4_32.facet_count() == 300, "c1: S4_32 must have 300 facets");
    }

    // coordinate permutations acting on the 32 ids
    {
        std::map<int, int> tau{{1, 2}, {2, 1}, {3, 3}, {4, 4}, {5, 5}, {6, 6}};
        std::map<int, int> rho{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}};
        art.s6_generators = {sc.induced(tau), sc.induced(rho)};
    }

    art.rp4 = quotient(art.s4_32, art.sigma);
    require(art.rp4.vertex_count() == 16 && art.rp4.facet_count() == 150,
            "c1: quotient must have 16 vertices and 150 facets");
    return art;
}

// =========================================================================
// Construction 2
// =========================================================================

namespace {

// ids: +e_i -> 2i-1, -e_i -> 2i (1..8); q_eps -> 9..24
struct C2Scheme {
    static VertexId c(int i, int s) { return s > 0 ? 2 * i - 1 : 2 * i; }
    static VertexId q(std::array<int, 4> eps) {
        int idx = 0;
        for (int i = 0; i < 4; ++i) idx = idx * 2 + (eps[i] < 0 ? 1 : 0);
        return 9 + idx;
    }
    static std::array<int, 4> eps_of(VertexId qid) {
        int idx = qid - 9;
        std::array<int, 4> eps;
        for (int i = 3; i >= 0; --i) {
            eps[i] = (idx % 2) ? -1 : 1;
            idx /= 2;
        }
        return eps;
    }
    static std::array<int, 4> negate(std::array<int, 4> e) {
        for (int& x : e) x = -x;
        return e;
    }

    static std::map<VertexId, std::string> labels() {
        std::map<VertexId, std::string> lab;
        for (int i = 1; i <= 4; ++i) {
            lab[c(i, +1)] = "e" + std::to_string(i);
            lab[c(i, -1)] = "-e" + std::to_string(i);
        }
        for (VertexId v = 9; v <= 24; ++v) {
            std::string s = "q";
            for (int e : eps_of(v)) s += (e > 0 ? '+' : '-');
            lab[v] = s;
        }
        return lab;
    }
};

int parity(const std::array<int, 4>& eps) {
    return eps[0] * eps[1] * eps[2] * eps[3];
}

}  // namespace

C2Artifacts c2_pipeline(C2Diagonals diagonals) {
    using S = C2Scheme;
    C2Artifacts art;
    std::vector<Simplex> ball;
    auto labels = S::labels();

    auto boundary_at = [&]() {
        auto b = SimplicialComplex::from_facets(ball);
        for (const auto& [v, lab] : labels)
            if (b.has_vertex(v)) b.set_label(v, lab);
        return boundary_complex(b);
    };

    // Stage 1: segment [-e1,+e1] joined with the octahedron on ±e2..±e4.
    for (int s2 : {+1, -1})
        for (int s3 : {+1, -1})
            for (int s4 : {+1, -1})
                ball.push_back(Simplex{S::c(1, +1), S::c(1, -1), S::c(2, s2),
                                       S::c(3, s3), S::c(4, s4)});
    art.ball_stage_counts.push_back(8);

    // Stage 2: cone each boundary facet at its own hypercube vertex.
    for (int s1 : {+1, -1})
        for (int s2 : {+1, -1})
            for (int s3 : {+1, -1})
                for (int s4 : {+1, -1})
                    ball.push_back(Simplex{S::c(1, s1), S::c(2, s2), S::c(3, s3),
                                           S::c(4, s4), S::q({s1, s2, s3, s4})});
    art.ball_stage_counts.push_back(16);
    art.x1_boundary = boundary_at();
    require(f_vector(art.x1_boundary) == FVector{{24, 88, 128, 64}},
            "c2: X1 boundary must have f-vector (24,88,128,64)");

    // Stage 3: close the link of each cross-polytope triangle with the two
    // hypercube vertices over it.
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b)
            for (int c = b + 1; c <= 4; ++c) {
                int l = 1 + 2 + 3 + 4 - a - b - c;
                for (int sa : {+1, -1})
                    for (int sb : {+1, -1})
                        for (int sc : {+1, -1}) {
                            std::array<int, 4> lo{}, hi{};
                            lo[a - 1] = hi[a - 1] = sa;
                            lo[b - 1] = hi[b - 1] = sb;
                            lo[c - 1] = hi[c - 1] = sc;
                            lo[l - 1] = -1;
                            hi[l - 1] = +1;
                            ball.push_back(Simplex{S::c(a, sa), S::c(b, sb), S::c(c, sc),
                                                   S::q(lo), S::q(hi)});
                        }
            }
    art.ball_stage_counts.push_back(32);
    art.x2_boundary = boundary_at();
    require(f_vector(art.x2_boundary) == FVector{{24, 120, 192, 96}},
            "c2: X2 boundary must have f-vector (24,120,192,96)");

    // Stage 4: one diagonal per edge-link square. Squares over edges through
    // ±e1 take the odd-parity diagonal; the rest are forced even.
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b) {
            std::vector<int> rest;
            for (int i = 1; i <= 4; ++i)
                if (i != a && i != b) rest.push_back(i);
            for (int sa : {+1, -1})
                for (int sb : {+1, -1}) {
                    int target = (a == 1) ? -1 : +1;  // odd near ±e1, else even
                    if (diagonals == C2Diagonals::AllOdd) target = -1;
                    // corners with st = target / (sa*sb) lie on the diagonal
                    int st = target * sa * sb;
                    auto corner = [&](int s, int t) {
                        std::array<int, 4> eps{};
                        eps[a - 1] = sa;
                        eps[b - 1] = sb;
                        eps[rest[0] - 1] = s;
                        eps[rest[1] - 1] = t;
                        return S::q(eps);
                    };
                    VertexId d1 = corner(+1, st), d2 = corner(-1, -st);
                    VertexId o1 = corner(+1, -st), o2 = corner(-1, st);
                    ball.push_back(Simplex{S::c(a, sa), S::c(b, sb), d1, d2, o1});
                    ball.push_back(Simplex{S::c(a, sa), S::c(b, sb), d1, d2, o2});
                }
        }
    art.ball_stage_counts.push_back(48);
    art.x3_boundary = boundary_at();
    require(f_vector(art.x3_boundary) == FVector{{24, 120, 192, 96}},
            "c2: X3 boundary must keep f-vector (24,120,192,96)");

    {
        std::vector<std::pair<VertexId, VertexId>> pairs;
        for (int i = 1; i <= 4; ++i) pairs.emplace_back(S::c(i, +1), S::c(i, -1));
        for (VertexId v = 9; v <= 24; ++v) {
            VertexId w = S::q(S::negate(S::eps_of(v)));
            if (v < w) pairs.emplace_back(v, w);
        }
        art.boundary_antipodal = Involution::from_pairs(pairs);
    }
    if (diagonals == C2Diagonals::AllOdd) return art;  // kept for the forcing check

    // Identify q ~ -q; every solid facet survives distinctly.
    auto q_class = [&](VertexId v) -> VertexId {
        if (v <= 8) return v;
        auto eps = S::eps_of(v);
        return eps[0] > 0 ? v : S::q(S::negate(eps));
    };
    SimplicialComplex glued = identify_vertices(SimplicialComplex::from_facets(ball),
                                                q_class);
    require(glued.facet_count() == 104, "c2: 104 facets after gluing stages 1-4");

    std::vector<Simplex> closed(glued.facets().begin(), glued.facets().end());

    // Triangles of the (identified) cube link of e_i, split by the stage-4
    // diagonal rule.
    auto cube_triangles = [&](int i) {
        std::vector<std::array<VertexId, 3>> tris;
        for (int c = 1; c <= 4; ++c) {
            if (c == i) continue;
            std::vector<int> rest;
            for (int k = 1; k <= 4; ++k)
                if (k != i && k != c) rest.push_back(k);
            for (int sc : {+1, -1}) {
                int target = (c == 1 || i == 1) ? -1 : +1;
                auto corner = [&](int s, int t) {
                    std::array<int, 4> eps{};
                    eps[i - 1] = +1;
                    eps[c - 1] = sc;
                    eps[rest[0] - 1] = s;
                    eps[rest[1] - 1] = t;
                    return q_class(S::q(eps));
                };
                int st = target * sc;  // corner parity is sc*s*t with eps_i = +1
                VertexId d1 = corner(+1, st), d2 = corner(-1, -st);
                VertexId o1 = corner(+1, -st), o2 = corner(-1, st);
                tris.push_back({d1, d2, o1});
                tris.push_back({d1, d2, o2});
            }
        }
        return tris;
    };

    // Stage 5: join [e_i,-e_i] with the 12 triangles, i = 2,3,4.
    for (int i = 2; i <= 4; ++i)
        for (const auto& t : cube_triangles(i))
            closed.push_back(Simplex{S::c(i, +1), S::c(i, -1), t[0], t[1], t[2]});
    art.ball_stage_counts.push_back(36);

    // Stage 6: five-tetrahedron fill of the e1 cube link, coned at each of
    // ±e1. The inner tetrahedron sits on the odd-parity classes.
    {
        std::vector<std::array<VertexId, 4>> tets;
        std::array<VertexId, 4> inner{};
        int k = 0;
        for (VertexId v = 9; v <= 24; ++v) {
            auto eps = S::eps_of(v);
            if (eps[0] == +1 && parity(eps) == -1) inner[k++] = q_class(v);
        }
        std::sort(inner.begin(), inner.end());
        tets.push_back(inner);
        for (VertexId v = 9; v <= 24; ++v) {
            auto eps = S::eps_of(v);
            if (eps[0] != +1 || parity(eps) != +1) continue;
            std::array<VertexId, 4> tet{};
            tet[0] = q_class(v);
            for (int c = 2; c <= 4; ++c) {
                auto nb = eps;
                nb[c - 1] = -nb[c - 1];
                tet[c - 1] = q_class(S::q(nb));
            }
            std::sort(tet.begin(), tet.end());
            tets.push_back(tet);
        }
        require(tets.size() == 5, "c2: five tetrahedra in the cube fill");
        for (int s : {+1, -1})
            for (const auto& t : tets)
                closed.push_back(Simplex{S::c(1, s), t[0], t[1], t[2], t[3]});
    }
    art.ball_stage_counts.push_back(10);

    SimplicialComplex rp4 = SimplicialComplex::from_facets(closed);
    require(rp4.facet_count() == 150, "c2: final complex must have 150 facets");
    require(rp4.vertex_count() == 16, "c2: final complex must have 16 vertices");
    for (const auto& [v, lab] : labels)
        if (rp4.has_vertex(v)) rp4.set_label(v, lab);
    art.rp4 = rp4.normalized().first;
    return art;
}

// =========================================================================
// Construction 3
// =========================================================================

namespace {

// cube vertices 1..8, apexes 9 (s+) / 10 (s-), dual points 11..22
struct C3Scheme {
    static VertexId cube(std::array<int, 3> e) {
        int idx = 0;
        for (int i = 0; i < 3; ++i) idx = idx * 2 + (e[i] < 0 ? 1 : 0);
        return 1 + idx;
    }
    static std::array<int, 3> cube_eps(VertexId v) {
        int idx = v - 1;
        std::array<int, 3> e;
        for (int i = 2; i >= 0; --i) {
            e[i] = (idx % 2) ? -1 : 1;
            idx /= 2;
        }
        return e;
    }
    static VertexId apex(int s) { return s > 0 ? 9 : 10; }
    // dual point of the pyramid over face x_dir = fs with apex sign as
    static VertexId dual(int dir, int fs, int as) {
        return 11 + (dir - 1) * 4 + (fs < 0 ? 2 : 0) + (as < 0 ? 1 : 0);
    }
    static std::map<VertexId, std::string> labels() {
        std::map<VertexId, std::string> lab;
        for (VertexId v = 1; v <= 8; ++v) {
            std::string s = "c";
            for (int e : cube_eps(v)) s += (e > 0 ? '+' : '-');
            lab[v] = s;
        }
        lab[9] = "s+";
        lab[10] = "s-";
        for (int dir = 1; dir <= 3; ++dir)
            for (int fs : {+1, -1})
                for (int as : {+1, -1}) {
                    std::string s = "d";
                    s += (fs > 0 ? '+' : '-');
                    s += std::to_string(dir);
                    s += (as > 0 ? '+' : '-');
                    lab[dual(dir, fs, as)] = s;
                }
        return lab;
    }
};

int parity3(const std::array<int, 3>& e) { return e[0] * e[1] * e[2]; }

}  // namespace

C3Artifacts c3_pipeline() {
    using S = C3Scheme;
    C3Artifacts art;
    std::vector<Simplex> ball;
    auto push_stage = [&](std::vector<Simplex> stage, long long expect,
                          const std::string& name) {
        std::sort(stage.begin(), stage.end());
        stage.erase(std::unique(stage.begin(), stage.end()), stage.end());
        require(static_cast<long long>(stage.size()) == expect,
                "c3: stage '" + name + "' expected " + std::to_string(expect) +
                    " facets, got " + std::to_string(stage.size()));
        std::size_t before = ball.size();
        ball.insert(ball.end(), stage.begin(), stage.end());
        std::sort(ball.begin(), ball.end());
        ball.erase(std::unique(ball.begin(), ball.end()), ball.end());
        require(ball.size() == before + stage.size(),
                "c3: stage '" + name + "' repeats earlier facets");
        art.stage_counts.push_back(expect);
    };

    // cube edges with their two squares; squares are (dir, sign)
    struct CubeEdge {
        VertexId v, w;
        std::array<std::pair<int, int>, 2> squares;  // fixed coords
        int varying;                                 // coordinate that differs
    };
    std::vector<CubeEdge> cube_edges;
    for (VertexId v = 1; v <= 8; ++v)
        for (VertexId w = static_cast<VertexId>(v + 1); w <= 8; ++w) {
            auto ev = S::cube_eps(v), ew = S::cube_eps(w);
            int diff = 0, at = -1;
            for (int i = 0; i < 3; ++i)
                if (ev[i] != ew[i]) {
                    ++diff;
                    at = i;
                }
            if (diff != 1) continue;
            CubeEdge e;
            e.v = v;
            e.w = w;
            e.varying = at + 1;
            int k = 0;
            for (int i = 0; i < 3; ++i)
                if (i != at) e.squares[k++] = {i + 1, ev[i]};
            cube_edges.push_back(e);
        }
    require(cube_edges.size() == 12, "c3: cube must have 12 edges");

    // dual incidence table
    art.dual_table.points = 12;
    art.dual_table.long_edges = 6;    // one per square: [dual(s,+), dual(s,-)]
    art.dual_table.short_edges = 24;  // one per suspension triangle
    art.dual_table.rectangles = static_cast<int>(cube_edges.size());
    art.dual_table.triangles = 16;    // one per [cube vertex, apex] edge
    art.dual_table.prisms = 8;
    art.dual_table.octahedra = 2;

    // Stage 1: suspension triangle joined with its short dual edge.
    {
        std::vector<Simplex> st;
        for (int as : {+1, -1})
            for (const CubeEdge& e : cube_edges)
                st.push_back(Simplex{S::apex(as), e.v, e.w,
                                     S::dual(e.squares[0].first, e.squares[0].second, as),
                                     S::dual(e.squares[1].first, e.squares[1].second, as)});
        push_stage(std::move(st), 24, "triangle*dual-edge");
    }

    // Stage 2: dual triangle joined with its [vertex, apex] edge.
    {
        std::vector<Simplex> st;
        for (int as : {+1, -1})
            for (VertexId v = 1; v <= 8; ++v) {
                auto e = S::cube_eps(v);
                st.push_back(Simplex{v, S::apex(as), S::dual(1, e[0], as),
                                     S::dual(2, e[1], as), S::dual(3, e[2], as)});
            }
        push_stage(std::move(st), 16, "dual-triangle*edge");
    }

    // Stage 3: extend each [triangle, dual point] tetrahedron by the square
    // vertex with positive coordinate product.
    {
        std::vector<Simplex> st;
        for (int as : {+1, -1})
            for (const CubeEdge& e : cube_edges)
                for (const auto& [dir, fs] : e.squares) {
                    // vertices of square x_dir = fs other than the edge
                    for (VertexId u = 1; u <= 8; ++u) {
                        if (u == e.v || u == e.w) continue;
                        auto eu = S::cube_eps(u);
                        if (eu[dir - 1] != fs) continue;
                        // of the two remaining square corners, take the one
                        // with positive coordinate product
                        if (parity3(eu) != +1) continue;
                        st.push_back(Simplex{e.v, e.w, S::apex(as),
                                             S::dual(dir, fs, as), u});
                    }
                }
        push_stage(std::move(st), 24, "square-completion");
    }

    // Stage 4: negative-parity cube vertices coned over their neighbour
    // triangles at each apex.
    {
        std::vector<Simplex> st;
        for (int as : {+1, -1})
            for (VertexId v = 1; v <= 8; ++v) {
                auto e = S::cube_eps(v);
                if (parity3(e) != -1) continue;
                std::array<VertexId, 3> nb{};
                for (int i = 0; i < 3; ++i) {
                    auto f = e;
                    f[i] = -f[i];
                    nb[i] = S::cube(f);
                }
                st.push_back(Simplex{v, nb[0], nb[1], nb[2], S::apex(as)});
            }
        push_stage(std::move(st), 8, "corner-cones");
    }

    // Stage 5: square triangles joined with the long dual edge of the square.
    {
        std::vector<Simplex> st;
        for (int dir = 1; dir <= 3; ++dir)
            for (int fs : {+1, -1}) {
                // the square's positive-parity diagonal splits it in two
                std::vector<VertexId> plus, minus;
                for (VertexId v = 1; v <= 8; ++v) {
                    auto e = S::cube_eps(v);
                    if (e[dir - 1] != fs) continue;
                    (parity3(e) == +1 ? plus : minus).push_back(v);
                }
                for (VertexId m : minus)
                    st.push_back(Simplex{plus[0], plus[1], m,
                                         S::dual(dir, fs, +1), S::dual(dir, fs, -1)});
            }
        push_stage(std::move(st), 12, "square*long-edge");
    }

    // Stage 6: the positive-parity tetrahedron joined with each apex.
    {
        std::vector<Simplex> st;
        std::vector<VertexId> plus;
        for (VertexId v = 1; v <= 8; ++v)
            if (parity3(S::cube_eps(v)) == +1) plus.push_back(v);
        for (int as : {+1, -1})
            st.push_back(Simplex{plus[0], plus[1], plus[2], plus[3], S::apex(as)});
        push_stage(std::move(st), 2, "inner-tetrahedron");
    }

    {
        auto b = SimplicialComplex::from_facets(ball);
        art.pre_quotient_boundary = boundary_complex(b);
        for (const auto& [v, lab] : S::labels())
            if (art.pre_quotient_boundary.has_vertex(v))
                art.pre_quotient_boundary.set_label(v, lab);
        require(f_vector(art.pre_quotient_boundary) == FVector{{22, 102, 160, 80}},
                "c3: pre-quotient boundary must have f-vector (22,102,160,80)");
    }

    // Antipodal identification on the dual points: dual(dir,fs,as) ~
    // dual(dir,-fs,-as); representatives keep apex sign +.
    auto d_class = [](VertexId v) -> VertexId {
        if (v <= 10) return v;
        int idx = v - 11;
        int dir = idx / 4 + 1;
        int fs = (idx % 4) / 2 ? -1 : +1;
        int as = (idx % 2) ? -1 : +1;
        return as > 0 ? v : S::dual(dir, -fs, +1);
    };
    {
        SimplicialComplex glued =
            identify_vertices(SimplicialComplex::from_facets(ball), d_class);
        require(glued.facet_count() == static_cast<long long>(ball.size()),
                "c3: identification must not merge facets");
        ball.assign(glued.facets().begin(), glued.facets().end());
    }

    // Stage 7: close the cube-edge links. For the edge [v,w], the triangle
    // [v, w, u] (u the negative-parity vertex of [-v,-w]) is joined with each
    // of the 4 edges of the identified dual rectangle.
    {
        std::vector<Simplex> st;
        for (const CubeEdge& e : cube_edges) {
            VertexId nv = S::cube([&] {
                auto x = S::cube_eps(e.v);
                for (int& c : x) c = -c;
                return x;
            }());
            VertexId nw = S::cube([&] {
                auto x = S::cube_eps(e.w);
                for (int& c : x) c = -c;
                return x;
            }());
            VertexId u = (parity3(S::cube_eps(nv)) == -1) ? nv : nw;
            auto [d1, f1] = e.squares[0];
            auto [d2, f2] = e.squares[1];
            VertexId a = d_class(S::dual(d1, f1, +1));
            VertexId a2 = d_class(S::dual(d1, f1, -1));
            VertexId b = d_class(S::dual(d2, f2, +1));
            VertexId b2 = d_class(S::dual(d2, f2, -1));
            // rectangle edges: two short (same apex) and two long (same face)
            for (auto [x, y] : {std::pair{a, b}, {a2, b2}, {a, a2}, {b, b2}})
                st.push_back(Simplex{e.v, e.w, u, x, y});
        }
        push_stage(std::move(st), 48, "edge-link closure");
    }

    // Stage 8: join each [v,-v] with the two octahedron faces over v.
    {
        std::vector<Simplex> st;
        for (VertexId v = 1; v <= 8; ++v) {
            auto e = S::cube_eps(v);
            if (parity3(e) != +1) continue;
            auto ne = e;
            for (int& c : ne) c = -c;
            VertexId nv = S::cube(ne);
            for (int as : {+1, -1}) {
                std::array<int, 3> sides = (as > 0) ? e : ne;
                st.push_back(Simplex{v, nv, d_class(S::dual(1, sides[0], +1)),
                                     d_class(S::dual(2, sides[1], +1)),
                                     d_class(S::dual(3, sides[2], +1))});
            }
        }
        push_stage(std::move(st), 8, "diagonal-link closure");
    }

    // Stage 9: join each face of the identified octahedron with [s+, s-].
    {
        std::vector<Simplex> st;
        for (int s1 : {+1, -1})
            for (int s2 : {+1, -1})
                for (int s3 : {+1, -1})
                    st.push_back(Simplex{S::apex(+1), S::apex(-1),
                                         d_class(S::dual(1, s1, +1)),
                                         d_class(S::dual(2, s2, +1)),
                                         d_class(S::dual(3, s3, +1))});
        push_stage(std::move(st), 8, "apex closure");
    }

    SimplicialComplex rp4 = SimplicialComplex::from_facets(ball);
    require(rp4.facet_count() == 150, "c3: final complex must have 150 facets");
    require(rp4.vertex_count() == 16, "c3: final complex must have 16 vertices");
    require(is_closed_pseudomanifold(rp4).ok, "c3: final complex must be closed");
    for (const auto& [v, lab] : S::labels())
        if (rp4.has_vertex(v)) rp4.set_label(v, lab);
    art.rp4 = rp4.normalized().first;
    return art;
}

// =========================================================================
// Small projective spaces and reference generators
// =========================================================================

SimplicialComplex rp2_6() {
    // 1,2 = +-e1; 3,4 = +-e2; 5,6 = the two identified outer corners
    std::vector<Simplex> facets{
        {1, 2, 3}, {1, 2, 4},            // inner square split along [e1,-e1]
        {1, 3, 5}, {2, 4, 5},            // +-[e1, e2, e1+e2]
        {1, 4, 6}, {2, 3, 6},            // +-[e1, -e2, e1-e2]
        {3, 4, 5}, {3, 4, 6},            // close the +-e2 circle
        {1, 5, 6}, {2, 5, 6},            // remaining squares
    };
    return SimplicialComplex::from_facets(std::move(facets),
                                          {{1, "e1"},
                                           {2, "-e1"},
                                           {3, "e2"},
                                           {4, "-e2"},
                                           {5, "q++"},
                                           {6, "q+-"}});
}

SimplicialComplex rp3_11() {
    // 2i-1, 2i = +-e_i (1..6); 7 = center; 8..11 = identified cube corners
    auto c = [](int i, int s) { return s > 0 ? 2 * i - 1 : 2 * i; };
    auto q = [](std::array<int, 3> e) {
        if (e[0] < 0)
            for (int& x : e) x = -x;
        return 8 + (e[1] < 0 ? 2 : 0) + (e[2] < 0 ? 1 : 0);
    };
    std::vector<Simplex> facets;
    for (int s1 : {+1, -1})
        for (int s2 : {+1, -1})
            for (int s3 : {+1, -1}) {
                facets.push_back(Simplex{7, c(1, s1), c(2, s2), c(3, s3)});
                facets.push_back(Simplex{c(1, s1), c(2, s2), c(3, s3), q({s1, s2, s3})});
            }
    // octahedron edge closures
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
            int k = 1 + 2 + 3 - i - j;
            for (int si : {+1, -1})
                for (int sj : {+1, -1}) {
                    std::array<int, 3> lo{}, hi{};
                    lo[i - 1] = hi[i - 1] = si;
                    lo[j - 1] = hi[j - 1] = sj;
                    lo[k - 1] = -1;
                    hi[k - 1] = +1;
                    facets.push_back(Simplex{c(i, si), c(j, sj), q(lo), q(hi)});
                }
        }
    // close each +-e_i pair over its link square: corners have eps_i = +1,
    // edges flip one of the other coordinates
    for (int i = 1; i <= 3; ++i) {
        std::vector<int> rest;
        for (int k = 1; k <= 3; ++k)
            if (k != i) rest.push_back(k);
        std::array<std::array<int, 3>, 4> corner{};
        int idx = 0;
        for (int sa : {+1, -1})
            for (int sb : {+1, -1}) {
                std::array<int, 3> e{};
                e[i - 1] = +1;
                e[rest[0] - 1] = sa;
                e[rest[1] - 1] = sb;
                corner[idx++] = e;
            }
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                int diff = 0;
                for (int t = 0; t < 3; ++t)
                    if (corner[a][t] != corner[b][t]) ++diff;
                if (diff != 1) continue;
                facets.push_back(Simplex{c(i, +1), c(i, -1), q(corner[a]), q(corner[b])});
            }
    }
    std::map<VertexId, std::string> labels;
    for (int i = 1; i <= 3; ++i) {
        labels[c(i, +1)] = "e" + std::to_string(i);
        labels[c(i, -1)] = "-e" + std::to_string(i);
    }
    labels[7] = "0";
    labels[8] = "q+++";
    labels[9] = "q++-";
    labels[10] = "q+-+";
    labels[11] = "q+--";
    auto out = SimplicialComplex::from_facets(std::move(facets), std::move(labels));
    if (out.vertex_count() != 11 || out.facet_count() != 40)
        throw ConstructionError("rp3_11: expected 11 vertices and 40 facets");
    return out;
}

SimplicialComplex kuehnel_rp(int n) {
    if (n < 2) throw std::invalid_argument("kuehnel_rp: n >= 2 required");
    std::map<Simplex, VertexId> face_ids;
    SimplicialComplex bsd = barycentric_subdivision(simplex_boundary(n + 1), &face_ids);

    std::vector<int> all(n + 2);
    for (int i = 0; i < n + 2; ++i) all[i] = i + 1;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (const auto& [face, id] : face_ids) {
        std::vector<int> comp;
        for (int v : all)
            if (!face.contains(v)) comp.push_back(v);
        VertexId other = face_ids.at(Simplex(comp));
        if (id < other) pairs.emplace_back(id, other);
    }
    return quotient(bsd, Involution::from_pairs(pairs));
}

SimplicialComplex rp4_from_k6(const K6Structure& k6) {
    std::vector<Simplex> facets;
    // 30: a vertex together with the label of an incident edge
    for (const auto& e : k6.edges)
        for (int end : {e.u, e.v}) {
            std::vector<VertexId> f{end};
            for (int b : e.label) f.push_back(K6Structure::bisection_id(b));
            facets.push_back(Simplex(std::move(f)));
        }
    // 120: (v, v', e(v,v'') \ e(v,v'))
    for (int v = 1; v <= 6; ++v)
        for (int v1 = 1; v1 <= 6; ++v1) {
            if (v1 == v) continue;
            for (int v2 = 1; v2 <= 6; ++v2) {
                if (v2 == v || v2 == v1) continue;
                const auto& lab_a = k6.edges[k6.edge_index(v, v2)].label;
                const auto& lab_b = k6.edges[k6.edge_index(v, v1)].label;
                std::vector<VertexId> f{v, v1};
                for (int b : lab_a)
                    if (std::find(lab_b.begin(), lab_b.end(), b) == lab_b.end())
                        f.push_back(K6Structure::bisection_id(b));
                if (f.size() != 5)
                    throw ConstructionError("rp4_from_k6: adjacent labels must share one bisection");
                facets.push_back(Simplex(std::move(f)));
            }
        }
    std::map<VertexId, std::string> labels;
    for (int p = 1; p <= 16; ++p) labels[p] = point_name(p);
    auto out = SimplicialComplex::from_facets(std::move(facets), std::move(labels));
    if (out.vertex_count() != 16 || out.facet_count() != 150)
        throw ConstructionError("rp4_from_k6: expected 16 vertices and 150 facets");
    return out;
}

long long arnoux_marin_bound(int n) {
    if (n < 3) throw std::invalid_argument("arnoux_marin_bound: n >= 3 required");
    return static_cast<long long>(n + 2) * (n + 1) / 2 + 1;
}

}  // namespace rp4
