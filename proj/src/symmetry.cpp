#include "rp4/symmetry.hpp"

#include <numeric>
#include <set>

namespace rp4 {

SimplicialComplex apply_vertex_map(const SimplicialComplex& c, const VertexMap& p) {
    return rename_vertices(c, [&](VertexId v) { return p.at(v); });
}

bool is_facet_invariant(const SimplicialComplex& c, const VertexMap& p) {
    for (const Simplex& f : c.facets()) {
        std::vector<VertexId> img;
        img.reserve(f.size());
        for (VertexId v : f) {
            auto it = p.find(v);
            if (it == p.end()) return false;
            img.push_back(it->second);
        }
        if (!c.has_facet(Simplex(std::move(img)))) return false;
    }
    return true;
}

std::string cycles_string(const VertexMap& p) {
    std::string out;
    std::set<VertexId> done;
    for (const auto& [start, img] : p) {
        if (done.count(start) || img == start) continue;
        out += '(' + std::to_string(start);
        done.insert(start);
        VertexId v = img;
        while (v != start) {
            out += ' ' + std::to_string(v);
            done.insert(v);
            v = p.at(v);
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::vector<int>> facet_orbits_under(const SimplicialComplex& c,
                                                 const std::vector<VertexMap>& gens) {
    const auto& facets = c.facets();
    UnionFind uf(static_cast<int>(facets.size()));
    for (const VertexMap& g : gens) {
        for (std::size_t i = 0; i < facets.size(); ++i) {
            std::vector<VertexId> img;
            img.reserve(facets[i].size());
            for (VertexId v : facets[i]) img.push_back(g.at(v));
            Simplex s(std::move(img));
            auto it = std::lower_bound(facets.begin(), facets.end(), s);
            if (it == facets.end() || *it != s)
                throw ComplexError("facet_orbits_under: generator does not preserve facets");
            uf.unite(static_cast<int>(i), static_cast<int>(it - facets.begin()));
        }
    }
    std::map<int, std::vector<int>> groups;
    for (std::size_t i = 0; i < facets.size(); ++i)
        groups[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

std::vector<std::vector<VertexId>> vertex_orbits_under(
    const std::vector<VertexId>& verts, const std::vector<VertexMap>& gens) {
    std::map<VertexId, int> idx;
    for (std::size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);
    UnionFind uf(static_cast<int>(verts.size()));
    for (const VertexMap& g : gens)
        for (VertexId v : verts) uf.unite(idx.at(v), idx.at(g.at(v)));
    std::map<int, std::vector<VertexId>> groups;
    for (VertexId v : verts) groups[uf.find(idx[v])].push_back(v);
    std::vector<std::vector<VertexId>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

std::vector<std::size_t> PermGroup::vertex_orbit_sizes() const {
    std::vector<std::size_t> s;
    for (const auto& o : vertex_orbits) s.push_back(o.size());
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<std::size_t> PermGroup::facet_orbit_sizes() const {
    std::vector<std::size_t> s;
    for (const auto& o : facet_orbits) s.push_back(o.size());
    std::sort(s.begin(), s.end());
    return s;
}

// ---------------------------------------------------------------------
// Canonical search.
//
// The canonical word of an ordering assigns new labels 1..n and lists, for
// each position p, the relabeled facets whose maximum new label is p (each
// sorted, the block sorted lexicographically). Blocks only depend on the
// prefix of the assignment, so a depth-first search over color-respecting
// orderings can compare against the best known word block by block and
// prune. Orderings achieving the minimal word differ exactly by
// automorphisms, which gives both the canonical form and the full group.
// ---------------------------------------------------------------------

namespace {

using Perm = std::vector<int>;  // 1-based arrays, index 0 unused

struct CanonInput {
    int n = 0;
    std::vector<Simplex> facets;
    std::vector<std::vector<int>> facets_of;  // vertex -> facet indices
    std::vector<int> color;                   // stable coloring, 0-based ranks
    std::vector<int> class_of_position;       // position p (1..n) -> color class
};

// WL-style refinement: start from face-degree-by-dimension signatures and
// iterate facet color multisets until stable. Exact signatures, no hashing.
std::vector<int> stable_coloring(int n, const std::vector<Simplex>& facets) {
    std::vector<std::vector<long long>> sig(n + 1);
    {
        const int d = facets.empty() ? 0 : facets.front().dim();
        std::vector<std::map<Simplex, int>> per_dim(d + 1);
        for (const Simplex& f : facets)
            for (std::size_t k = 1; k <= f.size(); ++k)
                for (Simplex& s : subsets_of_size(f, k)) per_dim[k - 1][s] = 1;
        for (int k = 0; k <= d; ++k)
            for (const auto& [s, one] : per_dim[k])
                for (VertexId v : s) {
                    sig[v].resize(d + 1, 0);
                    ++sig[v][k];
                }
    }
    std::vector<int> color(n + 1, 0);
    {
        std::map<std::vector<long long>, int> rank;
        for (int v = 1; v <= n; ++v) rank[sig[v]] = 0;
        int next = 0;
        for (auto& [s, r] : rank) r = next++;
        for (int v = 1; v <= n; ++v) color[v] = rank[sig[v]];
    }

    std::vector<std::vector<int>> facets_of(n + 1);
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (VertexId v : facets[i]) facets_of[v].push_back(static_cast<int>(i));

    int classes = 0;
    for (int v = 1; v <= n; ++v) classes = std::max(classes, color[v] + 1);
    while (true) {
        std::map<std::vector<int>, int> rank;
        std::vector<std::vector<int>> key(n + 1);
        for (int v = 1; v <= n; ++v) {
            std::vector<std::vector<int>> parts;
            for (int fi : facets_of[v]) {
                std::vector<int> part;
                for (VertexId u : facets[fi]) part.push_back(color[u]);
                std::sort(part.begin(), part.end());
                parts.push_back(std::move(part));
            }
            std::sort(parts.begin(), parts.end());
            std::vector<int> flat{color[v]};
            for (const auto& part : parts) {
                flat.push_back(-1);
                flat.insert(flat.end(), part.begin(), part.end());
            }
            key[v] = std::move(flat);
            rank[key[v]] = 0;
        }
        int next = 0;
        for (auto& [k, r] : rank) r = next++;
        if (next == classes) break;
        classes = next;
        for (int v = 1; v <= n; ++v) color[v] = rank[key[v]];
    }
    return color;
}

CanonInput prepare(const SimplicialComplex& c) {
    CanonInput in;
    in.n = c.vertex_count();
    in.facets = c.facets();
    in.facets_of.assign(in.n + 1, {});
    for (std::size_t i = 0; i < in.facets.size(); ++i)
        for (VertexId v : in.facets[i])
            in.facets_of[v].push_back(static_cast<int>(i));
    in.color = stable_coloring(in.n, in.facets);
    // positions grouped by ascending color class
    in.class_of_position.assign(in.n + 1, 0);
    std::vector<int> class_size;
    for (int v = 1; v <= in.n; ++v) {
        if (static_cast<int>(class_size.size()) <= in.color[v])
            class_size.resize(in.color[v] + 1, 0);
        ++class_size[in.color[v]];
    }
    int pos = 1;
    for (std::size_t cl = 0; cl < class_size.size(); ++cl)
        for (int k = 0; k < class_size[cl]; ++k)
            in.class_of_position[pos++] = static_cast<int>(cl);
    return in;
}

// One block of the canonical word: packed partial views of the facets
// through the newly assigned vertex, sorted. Each view packs its length and
// ascending labels into one 128-bit integer (8 bits per label).
using PackedView = unsigned __int128;
using Block = std::vector<PackedView>;
using Word = std::vector<Block>;

struct Searcher {
    const CanonInput& in;
    Word best;                        // blocks 1..best_len are valid
    int best_len = 0;                 // best is a complete word when == n
    Perm best_ordering;               // a minimal-word assignment from pass 1
    std::vector<Perm> completions;    // filled by pass 2
    Perm new_of_old, old_of_new;
    std::vector<int> remaining;       // per-facet count of unassigned vertices
    Block scratch;

    explicit Searcher(const CanonInput& ci) : in(ci) {
        new_of_old.assign(in.n + 1, 0);
        old_of_new.assign(in.n + 1, 0);
        remaining.resize(in.facets.size());
        for (std::size_t i = 0; i < in.facets.size(); ++i)
            remaining[i] = static_cast<int>(in.facets[i].size());
        best.assign(in.n + 1, {});
        if (in.n > 255)
            throw ComplexError("canonical search supports at most 255 vertices");
        for (const Simplex& f : in.facets)
            if (f.size() > 15)
                throw ComplexError("canonical search supports dimension <= 14");
    }

    // Partial views (assigned labels only) of the facets through the vertex
    // just assigned. A facet's view is complete at the position of its last
    // vertex, so equal words force equal relabeled facet sets; the partial
    // views make unequal branches diverge early.
    void make_block(VertexId u, Block& b) {
        b.clear();
        for (int fi : in.facets_of[u]) {
            int view[16];
            int len = 0;
            for (VertexId w : in.facets[fi])
                if (new_of_old[w] != 0) view[len++] = new_of_old[w];
            std::sort(view, view + len);
            PackedView packed = static_cast<unsigned>(len);
            for (int i = 0; i < len; ++i)
                packed = (packed << 8) | static_cast<unsigned>(view[i]);
            b.push_back(packed);
        }
        std::sort(b.begin(), b.end());
    }

    void assign(VertexId u, int p) {
        new_of_old[u] = p;
        old_of_new[p] = u;
        for (int fi : in.facets_of[u]) --remaining[fi];
    }
    void unassign(VertexId u, int p) {
        for (int fi : in.facets_of[u]) ++remaining[fi];
        new_of_old[u] = 0;
        old_of_new[p] = 0;
    }

    // Pass 1: after the call, best[1..p-1] is unchanged and best[p..n] holds
    // the minimal completion of the current prefix (or the entry value if
    // that was smaller). Every full assignment is a leaf, so best always
    // ends complete.
    void search_min(int p) {
        if (p > in.n) {
            best_len = in.n;
            best_ordering = new_of_old;
            return;
        }
        for (VertexId u = 1; u <= in.n; ++u) {
            if (new_of_old[u] != 0 || in.color[u] != in.class_of_position[p]) continue;
            assign(u, p);
            make_block(u, scratch);
            bool descend;
            if (best_len < p || scratch < best[p]) {
                best[p] = scratch;
                best_len = p;  // invalidate deeper blocks of the old word
                descend = true;
            } else {
                descend = (scratch == best[p]);
            }
            if (descend) search_min(p + 1);
            unassign(u, p);
        }
    }

    // Pass 2: enumerate every ordering whose word equals `best`.
    void search_all(int p) {
        if (p > in.n) {
            completions.push_back(new_of_old);
            return;
        }
        for (VertexId u = 1; u <= in.n; ++u) {
            if (new_of_old[u] != 0 || in.color[u] != in.class_of_position[p]) continue;
            assign(u, p);
            make_block(u, scratch);
            if (scratch == best[p]) search_all(p + 1);
            unassign(u, p);
        }
    }
};

struct CanonResult {
    Perm relabel;                  // old -> new, minimal-word ordering
    std::vector<Simplex> facets;   // relabeled, sorted
    std::vector<Perm> automorphisms;  // as old -> old maps
};

CanonResult canonicalize(const SimplicialComplex& c, bool want_automorphisms) {
    CanonInput in = prepare(c);
    Searcher s(in);
    s.search_min(1);
    if (s.best_len != in.n) throw ComplexError("canonical search failed");

    CanonResult res;
    res.relabel = s.best_ordering;
    if (want_automorphisms) {
        s.search_all(1);
        if (s.completions.empty()) throw ComplexError("canonical search inconsistent");
        res.relabel = s.completions.front();
    }

    std::vector<Simplex> out;
    out.reserve(in.facets.size());
    for (const Simplex& f : in.facets) {
        std::vector<VertexId> w;
        w.reserve(f.size());
        for (VertexId v : f) w.push_back(res.relabel[v]);
        out.push_back(Simplex(std::move(w)));
    }
    std::sort(out.begin(), out.end());
    res.facets = std::move(out);

    if (want_automorphisms) {
        Perm inv_first(in.n + 1, 0);
        for (int v = 1; v <= in.n; ++v) inv_first[res.relabel[v]] = v;
        for (const Perm& pi : s.completions) {
            Perm g(in.n + 1, 0);
            for (int v = 1; v <= in.n; ++v) g[v] = inv_first[pi[v]];
            res.automorphisms.push_back(std::move(g));
        }
    }
    return res;
}

Perm compose(const Perm& f, const Perm& g) {  // (f then g)(v) = g[f[v]]
    Perm h(f.size(), 0);
    for (std::size_t v = 1; v < f.size(); ++v) h[v] = g[f[v]];
    return h;
}

// |G| by an orbit-stabilizer chain over the explicit element list.
unsigned long long chain_order(std::vector<Perm> elems, int n) {
    unsigned long long order = 1;
    for (int beta = 1; beta <= n && elems.size() > 1; ++beta) {
        std::set<int> orbit;
        for (const Perm& g : elems) orbit.insert(g[beta]);
        order *= orbit.size();
        std::vector<Perm> stab;
        for (Perm& g : elems)
            if (g[beta] == beta) stab.push_back(std::move(g));
        elems = std::move(stab);
    }
    return order;
}

}  // namespace

PermGroup automorphism_group(const SimplicialComplex& c) {
    auto [norm, to_new] = c.normalized();
    std::map<VertexId, VertexId> to_old;
    for (const auto& [o, nw] : to_new) to_old[nw] = o;

    CanonResult res = canonicalize(norm, /*want_automorphisms=*/true);
    const int n = norm.vertex_count();

    PermGroup grp;
    grp.degree = n;
    grp.order = static_cast<unsigned long long>(res.automorphisms.size());
    if (chain_order(res.automorphisms, n) != grp.order)
        throw ComplexError("automorphism_group: order cross-check failed");

    // greedy generating subset
    std::set<Perm> closure;
    Perm identity(n + 1);
    std::iota(identity.begin(), identity.end(), 0);
    closure.insert(identity);
    std::vector<Perm> gens;
    for (const Perm& g : res.automorphisms) {
        if (closure.count(g)) continue;
        gens.push_back(g);
        // regenerate closure
        closure.clear();
        closure.insert(identity);
        std::vector<Perm> frontier{identity};
        while (!frontier.empty()) {
            std::vector<Perm> next;
            for (const Perm& h : frontier)
                for (const Perm& k : gens) {
                    Perm hk = compose(h, k);
                    if (closure.insert(hk).second) next.push_back(std::move(hk));
                }
            frontier = std::move(next);
        }
        if (closure.size() == grp.order) break;
    }
    if (closure.size() != grp.order)
        throw ComplexError("automorphism_group: generator closure mismatch");

    auto to_vertex_map = [&](const Perm& g) {
        VertexMap m;
        for (int v = 1; v <= n; ++v) m[to_old.at(v)] = to_old.at(g[v]);
        return m;
    };
    for (const Perm& g : gens) grp.generators.push_back(to_vertex_map(g));

    std::vector<VertexMap> all;
    all.reserve(res.automorphisms.size());
    for (const Perm& g : res.automorphisms) all.push_back(to_vertex_map(g));
    grp.vertex_orbits = vertex_orbits_under(c.vertices(), all);
    grp.facet_orbits = facet_orbits_under(c, all);
    for (const VertexMap& g : grp.generators)
        if (!is_facet_invariant(c, g))
            throw ComplexError("automorphism_group: generator breaks facets");
    return grp;
}

CanonicalForm canonical_form(const SimplicialComplex& c) {
    auto [norm, to_new] = c.normalized();
    CanonResult res = canonicalize(norm, /*want_automorphisms=*/false);
    CanonicalForm out;
    out.facets = std::move(res.facets);
    for (const auto& [old_id, new_id] : to_new)
        out.relabeling[old_id] = res.relabel[new_id];
    return out;
}

std::optional<VertexMap> are_isomorphic(const SimplicialComplex& a,
                                        const SimplicialComplex& b) {
    if (a.vertex_count() != b.vertex_count() || a.facet_count() != b.facet_count())
        return std::nullopt;
    if (a.dim() != b.dim()) return std::nullopt;
    if (f_vector(a) != f_vector(b)) return std::nullopt;

    CanonicalForm ca = canonical_form(a);
    CanonicalForm cb = canonical_form(b);
    if (!(ca == cb)) return std::nullopt;

    std::map<VertexId, VertexId> from_canon_b;
    for (const auto& [old_id, canon_id] : cb.relabeling) from_canon_b[canon_id] = old_id;
    VertexMap out;
    for (const auto& [old_id, canon_id] : ca.relabeling)
        out[old_id] = from_canon_b.at(canon_id);
    return out;
}

}  // namespace rp4
