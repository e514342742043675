#include "rp4/manifold.hpp"

#include <deque>
#include <map>
#include <set>

#include "rp4/homology.hpp"
#include "rp4/par.hpp"

namespace rp4 {

const char* to_string(LinkStatus s) {
    switch (s) {
        case LinkStatus::CertifiedSphere: return "sphere";
        case LinkStatus::NotSphere: return "not-sphere";
        case LinkStatus::Unknown: return "unknown";
    }
    return "?";
}

const char* to_string(AntipodalFailure f) {
    switch (f) {
        case AntipodalFailure::None: return "None";
        case AntipodalFailure::HasFixedPoint: return "HasFixedPoint";
        case AntipodalFailure::NotInvariant: return "NotInvariant";
        case AntipodalFailure::NotLinkSeparating: return "NotLinkSeparating";
    }
    return "?";
}

PseudomanifoldReport is_closed_pseudomanifold(const SimplicialComplex& c) {
    PseudomanifoldReport rep;
    if (c.dim() < 1) return rep;

    rep.ridges_ok = true;
    std::map<Simplex, std::vector<int>> ridge_to_facets;
    const auto& facets = c.facets();
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (VertexId v : facets[i])
            ridge_to_facets[facets[i].minus_vertex(v)].push_back(static_cast<int>(i));
    for (const auto& [ridge, fs] : ridge_to_facets) {
        if (fs.size() != 2) {
            rep.ridges_ok = false;
            rep.bad_ridge = ridge;
            rep.bad_ridge_degree = static_cast<int>(fs.size());
            break;
        }
    }

    // connectivity of the facet adjacency graph (adjacency = shared ridge)
    std::vector<std::vector<int>> adj(facets.size());
    for (const auto& [ridge, fs] : ridge_to_facets)
        for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = i + 1; j < fs.size(); ++j) {
                adj[fs[i]].push_back(fs[j]);
                adj[fs[j]].push_back(fs[i]);
            }
    std::vector<char> seen(facets.size(), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
        int f = queue.front();
        queue.pop_front();
        for (int g : adj[f])
            if (!seen[g]) {
                seen[g] = 1;
                ++reached;
                queue.push_back(g);
            }
    }
    rep.connected = (reached == facets.size());
    rep.ok = rep.ridges_ok && rep.connected;
    return rep;
}

namespace {

bool is_connected_skeleton(const SimplicialComplex& c) {
    auto adj = skeleton_adjacency(c);
    if (adj.empty()) return false;
    std::set<VertexId> seen;
    std::deque<VertexId> queue{adj.begin()->first};
    seen.insert(adj.begin()->first);
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId u : adj[v])
            if (seen.insert(u).second) queue.push_back(u);
    }
    return seen.size() == adj.size();
}

bool is_circle(const SimplicialComplex& c) {
    if (c.dim() != 1 || c.vertex_count() < 3) return false;
    for (const auto& [v, nbrs] : skeleton_adjacency(c))
        if (nbrs.size() != 2) return false;
    return is_connected_skeleton(c);
}

}  // namespace

std::pair<LinkStatus, std::string> certify_sphere(const SimplicialComplex& c,
                                                  const ReduceOptions& opts) {
    const int d = c.dim();
    if (d == 0) {
        bool ok = c.vertex_count() == 2 && c.facet_count() == 2;
        return {ok ? LinkStatus::CertifiedSphere : LinkStatus::NotSphere,
                ok ? "two points" : "not two points"};
    }
    if (d == 1) {
        bool ok = is_circle(c);
        return {ok ? LinkStatus::CertifiedSphere : LinkStatus::NotSphere,
                ok ? "circle" : "not a single circle"};
    }
    if (d == 2) {
        auto pm = is_closed_pseudomanifold(c);
        if (!pm.ok) return {LinkStatus::NotSphere, "not a closed pseudomanifold"};
        for (VertexId v : c.vertices())
            if (!is_circle(link(c, Simplex{v})))
                return {LinkStatus::NotSphere, "vertex link not a circle"};
        long long chi = f_vector(c).euler();
        if (chi != 2) return {LinkStatus::NotSphere, "euler characteristic " + std::to_string(chi)};
        return {LinkStatus::CertifiedSphere, "closed surface, chi=2"};
    }
    if (d == 3) {
        auto pm = is_closed_pseudomanifold(c);
        if (!pm.ok) return {LinkStatus::NotSphere, "not a closed pseudomanifold"};
        auto h = homology(c);
        std::vector<HomologyGroup> sphere{{1, {}}, {0, {}}, {0, {}}, {1, {}}};
        if (h != sphere) return {LinkStatus::NotSphere, "homology differs from S^3"};
        auto red = reduce(c, opts);
        if (red.certified)
            return {LinkStatus::CertifiedSphere,
                    "reduced to the boundary 4-simplex in " +
                        std::to_string(red.moves_applied) + " moves"};
        return {LinkStatus::Unknown, "homology sphere, reduction not certified"};
    }
    return {LinkStatus::Unknown, "dimension " + std::to_string(d) + " links not decided"};
}

ManifoldReport check_combinatorial_manifold(const SimplicialComplex& c,
                                            const SphereCheckOptions& opts) {
    ManifoldReport rep;
    const auto& verts = c.vertices();
    rep.links.resize(verts.size());
    const int njobs = effective_jobs(opts.jobs);
#pragma omp parallel for schedule(dynamic) num_threads(njobs) if (njobs > 1)
    for (std::size_t i = 0; i < verts.size(); ++i) {
        VertexLinkReport& r = rep.links[i];
        r.vertex = verts[i];
        auto lk = link(c, Simplex{verts[i]});
        auto [status, detail] = certify_sphere(lk, opts.reduce);
        r.status = status;
        r.detail = detail;
    }
    rep.all_certified = true;
    for (const auto& r : rep.links)
        if (r.status != LinkStatus::CertifiedSphere) rep.all_certified = false;
    return rep;
}

AntipodalReport is_antipodal(const SimplicialComplex& c, const Involution& inv) {
    for (const auto& [v, img] : inv.moved())
        if (inv(img) != v)
            throw std::invalid_argument("is_antipodal: map is not an involution");
    for (const auto& [v, img] : inv.moved())
        if (!c.has_vertex(v) || !c.has_vertex(img))
            throw std::invalid_argument("is_antipodal: involution moves unknown vertex");

    AntipodalReport rep;
    for (VertexId v : c.vertices())
        if (inv(v) == v) {
            rep.failure = AntipodalFailure::HasFixedPoint;
            rep.witness = {v, v};
            return rep;
        }
    for (const Simplex& f : c.facets()) {
        std::vector<VertexId> img;
        img.reserve(f.size());
        for (VertexId v : f) img.push_back(inv(v));
        if (!c.has_facet(Simplex(std::move(img)))) {
            rep.failure = AntipodalFailure::NotInvariant;
            return rep;
        }
    }
    rep.min_distance = kUnreachable;
    for (VertexId v : c.vertices()) {
        int d = skeleton_distance(c, v, inv(v));
        if (d < rep.min_distance) {
            rep.min_distance = d;
            rep.witness = {v, inv(v)};
        }
    }
    if (rep.min_distance < 3) {
        rep.failure = AntipodalFailure::NotLinkSeparating;
        return rep;
    }
    rep.ok = true;
    return rep;
}

}  // namespace rp4
