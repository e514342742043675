#include "rp4/flips.hpp"

#include <cmath>
#include <set>

#include "rp4/par.hpp"

namespace rp4 {

std::string to_string(const BistellarMove& m) {
    std::string out;
    bool first = true;
    for (VertexId v : m.out_face) {
        if (!first) out += ' ';
        out += std::to_string(v);
        first = false;
    }
    out += " | ";
    first = true;
    for (VertexId v : m.in_face) {
        if (!first) out += ' ';
        out += std::to_string(v);
        first = false;
    }
    return out;
}

std::optional<BistellarMove> is_flippable(const SimplicialComplex& c, const Simplex& A) {
    const int d = c.dim();
    const int a = static_cast<int>(A.size());
    const int b = d + 2 - a;
    if (b < 2) {
        if (!c.has_face(A))
            throw ComplexError("is_flippable: not a face: " + to_string(A));
        return std::nullopt;  // the inverse would need a vertex outside the complex
    }

    // facets of link(A) and their vertex union
    std::vector<Simplex> link_facets;
    std::set<VertexId> w;
    for (const Simplex& f : c.facets()) {
        if (!f.contains_all(A)) continue;
        Simplex rest = f.minus(A);
        for (VertexId v : rest) w.insert(v);
        link_facets.push_back(std::move(rest));
    }
    if (link_facets.empty())
        throw ComplexError("is_flippable: not a face: " + to_string(A));

    if (static_cast<int>(w.size()) != b) return std::nullopt;
    if (static_cast<int>(link_facets.size()) != b) return std::nullopt;
    Simplex B(std::vector<VertexId>(w.begin(), w.end()));
    // link(A) must be exactly boundary(B)
    std::sort(link_facets.begin(), link_facets.end());
    std::vector<Simplex> bd = subsets_of_size(B, static_cast<std::size_t>(b) - 1);
    if (link_facets != bd) return std::nullopt;
    if (c.has_face(B)) return std::nullopt;
    return BistellarMove{A, B};
}

namespace {

std::vector<Simplex> star_facets(const SimplicialComplex& c, const Simplex& A) {
    std::vector<Simplex> out;
    for (const Simplex& f : c.facets())
        if (f.contains_all(A)) out.push_back(f);
    return out;
}

std::vector<Simplex> inserted_facets(const BistellarMove& m) {
    std::vector<Simplex> out;
    for (VertexId v : m.out_face)
        out.push_back(m.in_face.union_with(m.out_face.minus_vertex(v)));
    return out;
}

}  // namespace

SimplicialComplex apply_flip(const SimplicialComplex& c, const BistellarMove& m) {
    auto check = is_flippable(c, m.out_face);
    if (!check || check->in_face != m.in_face)
        throw ComplexError("apply_flip: stale or invalid move " + to_string(m));

    std::set<Simplex> facets(c.facets().begin(), c.facets().end());
    for (const Simplex& f : star_facets(c, m.out_face)) facets.erase(f);
    for (Simplex& f : inserted_facets(m)) facets.insert(std::move(f));
    auto out = SimplicialComplex::from_facets({facets.begin(), facets.end()});
    std::map<VertexId, std::string> labels;
    for (const auto& [v, lab] : c.labels())
        if (out.has_vertex(v)) out.set_label(v, lab);
    return out;
}

SimplicialComplex apply_flip_batch(const SimplicialComplex& c,
                                   const std::vector<BistellarMove>& moves) {
    std::set<Simplex> removed;
    std::vector<Simplex> inserted;
    for (const BistellarMove& m : moves) {
        auto check = is_flippable(c, m.out_face);
        if (!check || check->in_face != m.in_face)
            throw ComplexError("apply_flip_batch: invalid move " + to_string(m));
        std::size_t before = removed.size();
        auto star = star_facets(c, m.out_face);
        for (const Simplex& f : star) removed.insert(f);
        if (removed.size() != before + star.size())
            throw ComplexError("apply_flip_batch: interfering moves at " + to_string(m));
        for (Simplex& f : inserted_facets(m)) inserted.push_back(std::move(f));
    }
    std::set<Simplex> facets(c.facets().begin(), c.facets().end());
    for (const Simplex& f : removed) facets.erase(f);
    for (Simplex& f : inserted) facets.insert(std::move(f));
    auto out = SimplicialComplex::from_facets({facets.begin(), facets.end()});
    for (const auto& [v, lab] : c.labels())
        if (out.has_vertex(v)) out.set_label(v, lab);
    return out;
}

std::vector<BistellarMove> valid_moves(const SimplicialComplex& c) {
    std::vector<BistellarMove> out;
    for (int k = 0; k < c.dim(); ++k)
        for (const Simplex& A : faces(c, k))
            if (auto m = is_flippable(c, A)) out.push_back(std::move(*m));
    std::sort(out.begin(), out.end(),
              [](const BistellarMove& x, const BistellarMove& y) {
                  return x.out_face < y.out_face;
              });
    return out;
}

bool is_boundary_simplex_complex(const SimplicialComplex& c) {
    const int d = c.dim();
    if (d < 0) return false;
    return c.vertex_count() == d + 2 && c.facet_count() == d + 2;
}

namespace {

// Deterministic generator (splitmix64) so traces do not depend on the
// standard library's distribution implementations.
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

ReductionReport reduce_single(const SimplicialComplex& c, std::uint64_t seed,
                              long long budget, double t0, double cooling) {
    ReductionReport rep;
    rep.winning_seed = seed;
    Rng rng(seed);
    SimplicialComplex cur = c;
    SimplicialComplex best = c;
    FVector best_f = f_vector(c);
    std::size_t best_trace_len = 0;
    double temp = t0;
    const int d = c.dim();

    std::vector<BistellarMove> moves = valid_moves(cur);
    for (long long step = 0; step < budget; ++step) {
        if (is_boundary_simplex_complex(cur)) break;
        if (moves.empty()) break;

        // never undo the previous move outright; annealing escapes would
        // otherwise bounce on their own reverses
        auto is_reverse_of_last = [&](const BistellarMove& m) {
            return !rep.trace.empty() && m.out_face == rep.trace.back().in_face &&
                   m.in_face == rep.trace.back().out_face;
        };

        std::vector<std::size_t> lowering;
        std::vector<std::size_t> other;
        int best_a = d + 2;
        for (std::size_t i = 0; i < moves.size(); ++i) {
            if (is_reverse_of_last(moves[i])) continue;
            int a = static_cast<int>(moves[i].out_face.size());
            int b = d + 2 - a;
            if (a < b) {
                if (a < best_a) {
                    best_a = a;
                    lowering.clear();
                }
                if (a == best_a) lowering.push_back(i);
            } else {
                other.push_back(i);
            }
        }

        bool applied = false;
        if (!lowering.empty()) {
            const BistellarMove& m = moves[lowering[rng.below(lowering.size())]];
            cur = apply_flip(cur, m);
            rep.trace.push_back(m);
            ++rep.moves_applied;
            applied = true;
        } else {
            if (other.empty()) break;
            const BistellarMove& m = moves[other[rng.below(other.size())]];
            int a = static_cast<int>(m.out_face.size());
            int b = d + 2 - a;
            double penalty = (a == b) ? 0.5 : static_cast<double>(a - b);
            if (rng.unit() < std::exp(-penalty / temp)) {
                cur = apply_flip(cur, m);
                rep.trace.push_back(m);
                ++rep.moves_applied;
                applied = true;
            }
            temp *= cooling;
            if (temp < 0.05) temp = t0;  // reheat after a long freeze
        }

        if (applied) {
            moves = valid_moves(cur);
            FVector f = f_vector(cur);
            if (f.counts < best_f.counts) {
                best_f = f;
                best = cur;
                best_trace_len = rep.trace.size();
            }
        }
    }

    if (is_boundary_simplex_complex(cur)) {
        rep.certified = true;
        rep.final_complex = cur;
    } else {
        // keep the trace replayable to the reported complex
        rep.final_complex = best;
        rep.trace.resize(best_trace_len);
        rep.moves_applied = static_cast<long long>(rep.trace.size());
    }
    return rep;
}

}  // namespace

ReductionReport reduce(const SimplicialComplex& c, const ReduceOptions& opts) {
    if (c.dim() < 1) throw ComplexError("reduce: complex must have dimension >= 1");
    for (const auto& [ridge, deg] : ridge_degrees(c))
        if (deg != 2)
            throw ComplexError("reduce: not a closed pseudomanifold at ridge " +
                               to_string(ridge));

    const int restarts = std::max(1, opts.restarts);
    std::vector<ReductionReport> runs(restarts);
    const int njobs = effective_jobs(opts.jobs);
#pragma omp parallel for schedule(dynamic) num_threads(njobs) if (njobs > 1)
    for (int i = 0; i < restarts; ++i)
        runs[i] = reduce_single(c, opts.seed + static_cast<std::uint64_t>(i),
                                opts.budget, opts.t0, opts.cooling);

    // lowest-indexed certified run wins; otherwise the best f-vector
    for (ReductionReport& r : runs)
        if (r.certified) return std::move(r);
    std::size_t pick = 0;
    for (std::size_t i = 1; i < runs.size(); ++i)
        if (f_vector(runs[i].final_complex).counts <
            f_vector(runs[pick].final_complex).counts)
            pick = i;
    return std::move(runs[pick]);
}

}  // namespace rp4
