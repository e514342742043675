#include "rp4/complex.hpp"

#include <deque>
#include <set>
#include <sstream>

namespace rp4 {

std::string to_string(const FVector& f) {
    std::string out = "(";
    for (std::size_t i = 0; i < f.counts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f.counts[i]);
    }
    out += ')';
    return out;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Simplex> facets,
                                                 std::map<VertexId, std::string> labels) {
    SimplicialComplex c;
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (const Simplex& f : facets) {
        if (f.empty())
            throw ComplexError("complex: empty facet");
        if (f.dim() != facets.front().dim())
            throw ComplexError("complex: facets of unequal dimension");
    }
    std::set<VertexId> verts;
    for (const Simplex& f : facets)
        for (VertexId v : f) verts.insert(v);
    c.facets_ = std::move(facets);
    c.vertices_.assign(verts.begin(), verts.end());
    for (auto& [v, lab] : labels)
        if (verts.count(v)) c.labels_[v] = std::move(lab);
    return c;
}

bool SimplicialComplex::has_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool SimplicialComplex::has_facet(const Simplex& s) const {
    return std::binary_search(facets_.begin(), facets_.end(), s);
}

bool SimplicialComplex::has_face(const Simplex& s) const {
    for (const Simplex& f : facets_)
        if (f.contains_all(s)) return true;
    return false;
}

bool SimplicialComplex::is_normalized() const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] != static_cast<VertexId>(i) + 1) return false;
    return true;
}

std::pair<SimplicialComplex, std::map<VertexId, VertexId>>
SimplicialComplex::normalized() const {
    std::map<VertexId, VertexId> remap;
    VertexId next = 1;
    for (VertexId v : vertices_) remap[v] = next++;
    std::vector<Simplex> out;
    out.reserve(facets_.size());
    for (const Simplex& f : facets_) {
        std::vector<VertexId> w;
        w.reserve(f.size());
        for (VertexId v : f) w.push_back(remap.at(v));
        out.push_back(Simplex(std::move(w)));
    }
    std::map<VertexId, std::string> labels;
    for (const auto& [v, lab] : labels_) labels[remap.at(v)] = lab;
    return {from_facets(std::move(out), std::move(labels)), remap};
}

std::string SimplicialComplex::label_of(VertexId v) const {
    auto it = labels_.find(v);
    if (it != labels_.end()) return it->second;
    return "v" + std::to_string(v);
}

void SimplicialComplex::set_label(VertexId v, std::string label) {
    labels_[v] = std::move(label);
}

std::vector<Simplex> faces(const SimplicialComplex& c, int k) {
    if (k < 0 || k > c.dim())
        throw std::out_of_range("faces: k out of range");
    std::set<Simplex> out;
    for (const Simplex& f : c.facets())
        for (Simplex& s : subsets_of_size(f, static_cast<std::size_t>(k) + 1))
            out.insert(std::move(s));
    return {out.begin(), out.end()};
}

long long face_count(const SimplicialComplex& c, int k) {
    return static_cast<long long>(faces(c, k).size());
}

FVector f_vector(const SimplicialComplex& c) {
    FVector f;
    for (int k = 0; k <= c.dim(); ++k) f.counts.push_back(face_count(c, k));
    return f;
}

SimplicialComplex link(const SimplicialComplex& c, const Simplex& face) {
    if (face.empty())
        return c;
    std::vector<Simplex> out;
    bool present = false;
    for (const Simplex& f : c.facets()) {
        if (!f.contains_all(face)) continue;
        present = true;
        Simplex rest = f.minus(face);
        if (!rest.empty()) out.push_back(std::move(rest));
    }
    if (!present)
        throw ComplexError("link: not a face of the complex: " + to_string(face));
    return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    for (VertexId v : a.vertices())
        if (b.has_vertex(v))
            throw ComplexError("join: overlapping vertex sets (vertex " +
                               std::to_string(v) + ")");
    std::vector<Simplex> out;
    out.reserve(a.facets().size() * b.facets().size());
    for (const Simplex& fa : a.facets())
        for (const Simplex& fb : b.facets())
            out.push_back(fa.union_with(fb));
    std::map<VertexId, std::string> labels = a.labels();
    for (const auto& [v, lab] : b.labels()) labels[v] = lab;
    return SimplicialComplex::from_facets(std::move(out), std::move(labels));
}

std::map<VertexId, std::vector<VertexId>> skeleton_adjacency(const SimplicialComplex& c) {
    std::map<VertexId, std::vector<VertexId>> adj;
    for (VertexId v : c.vertices()) adj[v];
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const Simplex& f : c.facets()) {
        const auto& vs = f.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (seen.insert({vs[i], vs[j]}).second) {
                    adj[vs[i]].push_back(vs[j]);
                    adj[vs[j]].push_back(vs[i]);
                }
    }
    return adj;
}

int skeleton_distance(const SimplicialComplex& c, VertexId u, VertexId v) {
    if (!c.has_vertex(u) || !c.has_vertex(v))
        throw ComplexError("skeleton_distance: unknown vertex");
    if (u == v) return 0;
    auto adj = skeleton_adjacency(c);
    std::map<VertexId, int> dist;
    dist[u] = 0;
    std::deque<VertexId> queue{u};
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        for (VertexId y : adj[x]) {
            if (dist.count(y)) continue;
            dist[y] = dist[x] + 1;
            if (y == v) return dist[y];
            queue.push_back(y);
        }
    }
    return kUnreachable;
}

Involution Involution::from_pairs(const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    Involution inv;
    for (auto [a, b] : pairs) {
        if (a == b) continue;
        if (inv.map_.count(a) || inv.map_.count(b))
            throw std::invalid_argument("involution: vertex in two pairs");
        inv.map_[a] = b;
        inv.map_[b] = a;
    }
    return inv;
}

Involution Involution::parse_cycles(const std::string& text) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(')
            throw std::invalid_argument("involution: expected '(' in cycle notation");
        ++i;
        std::vector<VertexId> cycle;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i >= text.size())
                throw std::invalid_argument("involution: unterminated cycle");
            if (text[i] == ')') { ++i; break; }
            std::size_t end;
            int v = std::stoi(text.substr(i), &end);
            if (v <= 0) throw std::invalid_argument("involution: ids must be positive");
            cycle.push_back(v);
            i += end;
        }
        if (cycle.size() == 2) pairs.emplace_back(cycle[0], cycle[1]);
        else if (cycle.size() > 2)
            throw std::invalid_argument("involution: cycle longer than 2");
        skip_ws();
    }
    return from_pairs(pairs);
}

std::string Involution::to_cycles() const {
    std::string out;
    for (const auto& [a, b] : map_)
        if (a < b) out += "(" + std::to_string(a) + " " + std::to_string(b) + ")";
    if (out.empty()) out = "()";
    return out;
}

const char* to_string(QuotientFailure f) {
    switch (f) {
        case QuotientFailure::HasFixedPoint: return "HasFixedPoint";
        case QuotientFailure::NotInvariant: return "NotInvariant";
        case QuotientFailure::NotLinkSeparating: return "NotLinkSeparating";
    }
    return "?";
}

SimplicialComplex quotient(const SimplicialComplex& c, const Involution& inv) {
    // Gate 1: fixed-point-free on the vertex set.
    for (VertexId v : c.vertices())
        if (inv(v) == v)
            throw QuotientError(QuotientFailure::HasFixedPoint,
                                "quotient: involution fixes vertex " + std::to_string(v));
    // Gate 2: facet-set invariance.
    for (const Simplex& f : c.facets()) {
        std::vector<VertexId> img;
        img.reserve(f.size());
        for (VertexId v : f) img.push_back(inv(v));
        if (!c.has_facet(Simplex(std::move(img))))
            throw QuotientError(QuotientFailure::NotInvariant,
                                "quotient: image of facet " + to_string(f) +
                                    " is not a facet");
    }
    // Gate 3: link separation, distance(v, inv(v)) >= 3 for every vertex.
    for (VertexId v : c.vertices()) {
        int d = skeleton_distance(c, v, inv(v));
        if (d < 3)
            throw QuotientError(QuotientFailure::NotLinkSeparating,
                                "quotient: d(" + std::to_string(v) + ", " +
                                    std::to_string(inv(v)) + ") = " + std::to_string(d));
    }

    auto rep = [&](VertexId v) { return std::min(v, inv(v)); };
    std::vector<Simplex> out;
    out.reserve(c.facets().size());
    for (const Simplex& f : c.facets()) {
        std::vector<VertexId> img;
        img.reserve(f.size());
        for (VertexId v : f) img.push_back(rep(v));
        out.push_back(Simplex(std::move(img)));
    }
    std::map<VertexId, std::string> labels;
    for (VertexId v : c.vertices())
        if (rep(v) == v)
            labels[v] = c.label_of(v) + "~" + c.label_of(inv(v));
    SimplicialComplex q = SimplicialComplex::from_facets(std::move(out), std::move(labels));
    if (2 * q.facet_count() != c.facet_count())
        throw ComplexError("quotient: facet count did not halve");
    return q.normalized().first;
}

SimplicialComplex simplex_boundary(int n) {
    if (n < 1) throw std::invalid_argument("simplex_boundary: n >= 1 required");
    std::vector<VertexId> all(n + 1);
    for (int i = 0; i <= n; ++i) all[i] = i + 1;
    std::vector<Simplex> facets = subsets_of_size(Simplex(all), n);
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex cross_polytope_boundary(int n) {
    if (n < 1) throw std::invalid_argument("cross_polytope_boundary: n >= 1 required");
    std::vector<Simplex> facets;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<VertexId> f;
        f.reserve(n);
        for (int i = 0; i < n; ++i)
            f.push_back((mask >> i) & 1 ? 2 * i + 2 : 2 * i + 1);
        facets.push_back(Simplex(std::move(f)));
    }
    std::map<VertexId, std::string> labels;
    for (int i = 0; i < n; ++i) {
        labels[2 * i + 1] = "e" + std::to_string(i + 1);
        labels[2 * i + 2] = "-e" + std::to_string(i + 1);
    }
    return SimplicialComplex::from_facets(std::move(facets), std::move(labels));
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& c,
                                          std::map<Simplex, VertexId>* face_ids) {
    // One vertex per nonempty face, in (dimension, lex) order.
    std::map<Simplex, VertexId> face_id;
    for (int k = 0; k <= c.dim(); ++k)
        for (const Simplex& s : faces(c, k))
            face_id.emplace(s, 0);
    {
        // map iteration is lex over vertex lists; reorder by (size, lex)
        std::vector<const Simplex*> ordered;
        ordered.reserve(face_id.size());
        for (const auto& [s, id] : face_id) ordered.push_back(&s);
        std::stable_sort(ordered.begin(), ordered.end(),
                         [](const Simplex* a, const Simplex* b) { return a->size() < b->size(); });
        VertexId next = 1;
        for (const Simplex* s : ordered) face_id[*s] = next++;
    }

    std::vector<Simplex> facets;
    for (const Simplex& f : c.facets()) {
        // Chains v1 < {v1,v2} < ... correspond to orderings of f's vertices.
        std::vector<VertexId> perm = f.vertices();
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<VertexId> chain;
            std::vector<VertexId> prefix;
            for (VertexId v : perm) {
                prefix.push_back(v);
                chain.push_back(face_id.at(Simplex(prefix)));
            }
            facets.push_back(Simplex(std::move(chain)));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::map<VertexId, std::string> labels;
    for (const auto& [s, id] : face_id) {
        std::string lab;
        bool compact = s.vertices().back() <= 9;
        for (VertexId v : s) {
            if (!compact && !lab.empty()) lab += '.';
            lab += std::to_string(v);
        }
        labels[id] = lab;
    }
    if (face_ids) *face_ids = face_id;
    return SimplicialComplex::from_facets(std::move(facets), std::move(labels));
}

SimplicialComplex rename_vertices(const SimplicialComplex& c,
                                  const std::function<VertexId(VertexId)>& f) {
    std::set<VertexId> image;
    for (VertexId v : c.vertices())
        if (!image.insert(f(v)).second)
            throw ComplexError("rename_vertices: map is not injective");
    std::vector<Simplex> out;
    out.reserve(c.facets().size());
    for (const Simplex& s : c.facets()) {
        std::vector<VertexId> w;
        w.reserve(s.size());
        for (VertexId v : s) w.push_back(f(v));
        out.push_back(Simplex(std::move(w)));
    }
    std::map<VertexId, std::string> labels;
    for (const auto& [v, lab] : c.labels()) labels[f(v)] = lab;
    return SimplicialComplex::from_facets(std::move(out), std::move(labels));
}

SimplicialComplex identify_vertices(const SimplicialComplex& c,
                                    const std::function<VertexId(VertexId)>& f) {
    std::vector<Simplex> out;
    out.reserve(c.facets().size());
    for (const Simplex& s : c.facets()) {
        std::vector<VertexId> w;
        w.reserve(s.size());
        for (VertexId v : s) w.push_back(f(v));
        Simplex img(std::move(w));
        if (img.size() != s.size())
            throw ComplexError("identify_vertices: facet " + to_string(s) +
                               " degenerates");
        out.push_back(std::move(img));
    }
    return SimplicialComplex::from_facets(std::move(out));
}

std::map<Simplex, int> ridge_degrees(const SimplicialComplex& c) {
    std::map<Simplex, int> deg;
    for (const Simplex& f : c.facets())
        for (VertexId v : f) ++deg[f.minus_vertex(v)];
    return deg;
}

SimplicialComplex boundary_complex(const SimplicialComplex& c) {
    std::vector<Simplex> out;
    for (const auto& [ridge, d] : ridge_degrees(c))
        if (d == 1) out.push_back(ridge);
    auto b = SimplicialComplex::from_facets(std::move(out));
    std::map<VertexId, std::string> labels;
    for (const auto& [v, lab] : c.labels())
        if (b.has_vertex(v)) b.set_label(v, lab);
    return b;
}

}  // namespace rp4
