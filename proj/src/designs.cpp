#include "rp4/designs.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rp4/par.hpp"

namespace rp4 {

std::string point_name(int id) {
    if (id >= 1 && id <= 6) return std::string(1, static_cast<char>('A' + id - 1));
    if (id >= 7 && id <= 16) return std::string(1, static_cast<char>('0' + id - 7));
    if (id >= 17 && id <= 22) return std::string(1, static_cast<char>('U' + id - 17));
    return "?" + std::to_string(id);
}

int K6Structure::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].u == u && edges[i].v == v) return static_cast<int>(i);
    throw std::invalid_argument("edge_index: no such edge");
}

int K6Structure::bisection_of_triangle(int a, int b, int c) const {
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    for (std::size_t i = 0; i < bisections.size(); ++i)
        if (bisections[i].first == t || bisections[i].second == t)
            return static_cast<int>(i);
    throw std::invalid_argument("bisection_of_triangle: not found");
}

int K6Structure::matching_through(int edge, int other_edge) const {
    for (std::size_t i = 0; i < matchings.size(); ++i) {
        const auto& idx = matchings[i].edge_idx;
        bool has_a = std::find(idx.begin(), idx.end(), edge) != idx.end();
        bool has_b = std::find(idx.begin(), idx.end(), other_edge) != idx.end();
        if (has_a && has_b) return static_cast<int>(i);
    }
    return -1;
}

int K6Structure::common_matching(int f, int g) const {
    const auto& a = factorizations[f];
    const auto& b = factorizations[g];
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(common));
    if (common.size() != 1)
        throw std::logic_error("common_matching: factorization pair must meet in one matching");
    return common[0];
}

std::pair<int, int> K6Structure::factorizations_of_matching(int m) const {
    std::vector<int> owners;
    for (std::size_t f = 0; f < factorizations.size(); ++f)
        if (std::find(factorizations[f].begin(), factorizations[f].end(), m) !=
            factorizations[f].end())
            owners.push_back(static_cast<int>(f));
    if (owners.size() != 2)
        throw std::logic_error("factorizations_of_matching: matching must lie in two");
    return {owners[0], owners[1]};
}

K6Structure build_k6() {
    K6Structure k6;
    // Bisections: 3-subsets containing vertex 1, paired with their
    // complements, lex by the side containing A (= vertex 1).
    std::vector<int> all{1, 2, 3, 4, 5, 6};
    for (int b = 2; b <= 6; ++b)
        for (int c = b + 1; c <= 6; ++c) {
            std::array<int, 3> side{1, b, c};
            std::array<int, 3> other;
            int k = 0;
            for (int v : all)
                if (v != 1 && v != b && v != c) other[k++] = v;
            k6.bisections.push_back({side, other});
        }

    // Edge labels: the bisections of the 4 triangles through the edge.
    for (int u = 1; u <= 6; ++u)
        for (int v = u + 1; v <= 6; ++v) {
            K6Structure::Edge e;
            e.u = u;
            e.v = v;
            int k = 0;
            for (int w = 1; w <= 6; ++w) {
                if (w == u || w == v) continue;
                e.label[k++] = k6.bisection_of_triangle(u, v, w);
            }
            std::sort(e.label.begin(), e.label.end());
            k6.edges.push_back(e);
        }

    // Perfect matchings and their labels (bisections outside all member
    // edges' labels).
    {
        // 1 pairs with one of 5, then the least remaining with one of 3
        for (int p1 = 2; p1 <= 6; ++p1) {
            std::vector<int> rest;
            for (int v = 2; v <= 6; ++v)
                if (v != p1) rest.push_back(v);
            for (int j = 1; j < 4; ++j) {
                int a = rest[0], b = rest[j];
                std::vector<int> last;
                for (int v : rest)
                    if (v != a && v != b) last.push_back(v);
                K6Structure::Matching m;
                m.edge_idx = {k6.edge_index(1, p1), k6.edge_index(a, b),
                              k6.edge_index(last[0], last[1])};
                std::sort(m.edge_idx.begin(), m.edge_idx.end());
                std::set<int> used;
                for (int ei : m.edge_idx)
                    for (int lab : k6.edges[ei].label) used.insert(lab);
                int k = 0;
                for (int bis = 0; bis < 10; ++bis)
                    if (!used.count(bis)) m.label[k++] = bis;
                if (k != 4)
                    throw std::logic_error("build_k6: matching label size != 4");
                k6.matchings.push_back(m);
            }
        }
        std::sort(k6.matchings.begin(), k6.matchings.end(),
                  [](const auto& a, const auto& b) { return a.edge_idx < b.edge_idx; });
    }

    // 1-factorizations: partitions of the 15 edges into 5 matchings, by
    // backtracking over matchings.
    {
        std::vector<std::array<int, 5>> found;
        std::vector<int> chosen;
        std::set<int> covered;  // edge indices
        auto rec = [&](auto&& self, int start) -> void {
            if (chosen.size() == 5) {
                std::array<int, 5> f;
                std::copy(chosen.begin(), chosen.end(), f.begin());
                found.push_back(f);
                return;
            }
            for (int m = start; m < 15; ++m) {
                const auto& idx = k6.matchings[m].edge_idx;
                bool clash = false;
                for (int ei : idx)
                    if (covered.count(ei)) clash = true;
                if (clash) continue;
                chosen.push_back(m);
                for (int ei : idx) covered.insert(ei);
                self(self, m + 1);
                for (int ei : idx) covered.erase(ei);
                chosen.pop_back();
            }
        };
        rec(rec, 0);
        if (found.size() != 6)
            throw std::logic_error("build_k6: expected six 1-factorizations, got " +
                                   std::to_string(found.size()));
        std::sort(found.begin(), found.end());
        k6.factorizations = std::move(found);
    }
    return k6;
}

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Lex unranking of the r-th t-subset of {0..n-1}.
std::vector<int> unrank_subset(long long r, int n, int t) {
    std::vector<int> out;
    int x = 0;
    for (int i = 0; i < t; ++i) {
        while (true) {
            long long c = binom(n - x - 1, t - i - 1);
            if (r < c) break;
            r -= c;
            ++x;
        }
        out.push_back(x++);
    }
    return out;
}

}  // namespace

DesignCheck verify_design(const Design& d, int t, int v, int k, int lambda,
                          int jobs) {
    DesignCheck res;
    if (static_cast<int>(d.points.size()) != v) {
        res.ok = false;
        res.counterexample = std::vector<int>{};
        return res;
    }
    for (const auto& b : d.blocks)
        if (static_cast<int>(b.size()) != k) {
            res.ok = false;
            res.counterexample = b;
            return res;
        }

    const long long total = binom(v, t);
    const int njobs = effective_jobs(jobs);
    long long first_bad = total;  // index of first failing subset
    long long bad_count = 0;

#pragma omp parallel for schedule(static) num_threads(njobs) if (njobs > 1) \
    reduction(min : first_bad)
    for (long long r = 0; r < total; ++r) {
        std::vector<int> pick = unrank_subset(r, v, t);
        std::vector<int> subset(t);
        for (int i = 0; i < t; ++i) subset[i] = d.points[pick[i]];
        long long count = 0;
        for (const auto& block : d.blocks)
            if (std::includes(block.begin(), block.end(), subset.begin(), subset.end()))
                ++count;
        if (count != lambda && r < first_bad) first_bad = r;
    }

    if (first_bad < total) {
        res.ok = false;
        std::vector<int> pick = unrank_subset(first_bad, v, t);
        std::vector<int> subset(t);
        for (int i = 0; i < t; ++i) subset[i] = d.points[pick[i]];
        for (const auto& block : d.blocks)
            if (std::includes(block.begin(), block.end(), subset.begin(), subset.end()))
                ++bad_count;
        res.counterexample = subset;
        res.count_at_counterexample = bad_count;
    }
    return res;
}

std::vector<int> block_intersection_profile(const Design& d) {
    std::set<int> sizes;
    for (std::size_t i = 0; i < d.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < d.blocks.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(d.blocks[i].begin(), d.blocks[i].end(),
                                  d.blocks[j].begin(), d.blocks[j].end(),
                                  std::back_inserter(common));
            sizes.insert(static_cast<int>(common.size()));
        }
    return {sizes.begin(), sizes.end()};
}

Design design_e(const K6Structure& k6) {
    Design d;
    for (int b = 0; b < 10; ++b) d.points.push_back(K6Structure::bisection_id(b));
    for (const auto& e : k6.edges) {
        std::vector<int> block;
        for (int b : e.label) block.push_back(K6Structure::bisection_id(b));
        std::sort(block.begin(), block.end());
        d.blocks.push_back(block);
    }
    std::sort(d.blocks.begin(), d.blocks.end());
    return d;
}

Design design_m(const K6Structure& k6) {
    Design d;
    for (int b = 0; b < 10; ++b) d.points.push_back(K6Structure::bisection_id(b));
    for (const auto& m : k6.matchings) {
        std::vector<int> block;
        for (int b : m.label) block.push_back(K6Structure::bisection_id(b));
        std::sort(block.begin(), block.end());
        d.blocks.push_back(block);
    }
    std::sort(d.blocks.begin(), d.blocks.end());
    return d;
}

Design biplane_e(const K6Structure& k6) {
    Design d;
    for (int v = 0; v < 6; ++v) d.points.push_back(K6Structure::vertex_id(v));
    for (int b = 0; b < 10; ++b) d.points.push_back(K6Structure::bisection_id(b));
    for (const auto& e : k6.edges) {
        std::vector<int> block{e.u, e.v};
        for (int b : e.label) block.push_back(K6Structure::bisection_id(b));
        std::sort(block.begin(), block.end());
        d.blocks.push_back(block);
    }
    d.blocks.push_back({1, 2, 3, 4, 5, 6});  // the vertex set itself
    std::sort(d.blocks.begin(), d.blocks.end());
    return d;
}

Design biplane_m(const K6Structure& k6) {
    Design d;
    for (int b = 0; b < 10; ++b) d.points.push_back(K6Structure::bisection_id(b));
    for (int f = 0; f < 6; ++f) d.points.push_back(K6Structure::factorization_id(f));
    for (int f = 0; f < 6; ++f)
        for (int g = f + 1; g < 6; ++g) {
            int m = k6.common_matching(f, g);
            std::vector<int> block{K6Structure::factorization_id(f),
                                   K6Structure::factorization_id(g)};
            for (int b : k6.matchings[m].label)
                block.push_back(K6Structure::bisection_id(b));
            std::sort(block.begin(), block.end());
            d.blocks.push_back(block);
        }
    d.blocks.push_back({17, 18, 19, 20, 21, 22});  // the factorization set
    std::sort(d.blocks.begin(), d.blocks.end());
    return d;
}

std::vector<std::vector<int>> em_blocks(const K6Structure& k6) {
    std::vector<std::vector<int>> blocks;
    for (std::size_t ei = 0; ei < k6.edges.size(); ++ei) {
        const auto& e = k6.edges[ei];
        for (std::size_t m = 0; m < k6.matchings.size(); ++m) {
            const auto& idx = k6.matchings[m].edge_idx;
            if (std::find(idx.begin(), idx.end(), static_cast<int>(ei)) == idx.end())
                continue;  // only incident pairs
            auto [f, g] = k6.factorizations_of_matching(static_cast<int>(m));
            std::set<int> used(e.label.begin(), e.label.end());
            used.insert(k6.matchings[m].label.begin(), k6.matchings[m].label.end());
            std::vector<int> block{e.u, e.v, K6Structure::factorization_id(f),
                                   K6Structure::factorization_id(g)};
            for (int b = 0; b < 10; ++b)
                if (!used.count(b)) block.push_back(K6Structure::bisection_id(b));
            if (block.size() != 6)
                throw std::logic_error("em_blocks: block size != 6");
            std::sort(block.begin(), block.end());
            blocks.push_back(block);
        }
    }
    if (blocks.size() != 45)
        throw std::logic_error("em_blocks: expected 45 incident pairs");
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

Design witt22(const K6Structure& k6) {
    Design d;
    for (int p = 1; p <= 22; ++p) d.points.push_back(p);
    for (const auto& b : biplane_e(k6).blocks) d.blocks.push_back(b);
    for (const auto& b : biplane_m(k6).blocks) d.blocks.push_back(b);
    for (const auto& b : em_blocks(k6)) d.blocks.push_back(b);
    std::sort(d.blocks.begin(), d.blocks.end());
    if (d.blocks.size() != 77) throw std::logic_error("witt22: expected 77 blocks");
    return d;
}

AxesCheckReport octahedral_axes_check(const SimplicialComplex& rp4,
                                      const K6Structure& k6) {
    AxesCheckReport rep;
    auto em = em_blocks(k6);
    auto in_em = [&](std::vector<int> quad) {
        std::sort(quad.begin(), quad.end());
        for (const auto& block : em)
            if (std::includes(block.begin(), block.end(), quad.begin(), quad.end()))
                return true;
        return false;
    };

    for (int u = 1; u <= 6; ++u)
        for (int v = u + 1; v <= 6; ++v) {
            SimplicialComplex lk = link(rp4, Simplex{u, v});
            if (lk.vertex_count() != 6) {
                rep.detail = "link of [" + point_name(u) + point_name(v) +
                             "] does not have 6 vertices";
                return rep;
            }
            for (VertexId w : lk.vertices())
                if (w < 7 || w > 16) {
                    rep.detail = "link vertex outside the bisection orbit";
                    return rep;
                }
            // octahedron: each vertex misses exactly one other (its axis mate)
            auto adj = skeleton_adjacency(lk);
            std::set<std::pair<int, int>> axes;
            for (VertexId a : lk.vertices()) {
                std::vector<VertexId> non;
                for (VertexId b : lk.vertices())
                    if (b != a &&
                        std::find(adj[a].begin(), adj[a].end(), b) == adj[a].end())
                        non.push_back(b);
                if (non.size() != 1) {
                    rep.detail = "link of [" + point_name(u) + point_name(v) +
                                 "] is not an octahedron";
                    return rep;
                }
                axes.insert({std::min(a, non[0]), std::max(a, non[0])});
            }
            if (axes.size() != 3) {
                rep.detail = "expected 3 axes";
                return rep;
            }
            for (const auto& [b1, b2] : axes) {
                if (!in_em({u, v, b1, b2})) {
                    rep.detail = "quadruple {" + point_name(u) + "," + point_name(v) +
                                 "," + point_name(b1) + "," + point_name(b2) +
                                 "} not in any EM block";
                    return rep;
                }
                ++rep.quadruples_checked;
            }
        }
    rep.ok = (rep.quadruples_checked == 45);
    if (rep.ok) rep.detail = "all 45 axis quadruples covered";
    return rep;
}

}  // namespace rp4
