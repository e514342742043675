#include "rp4/homology.hpp"

#include <cstdlib>
#include <map>
#include <set>

#include "rp4/par.hpp"

namespace rp4 {

std::string to_string(const HomologyGroup& h) {
    if (h.trivial()) return "0";
    std::string out;
    if (h.rank > 0) {
        out = "Z";
        if (h.rank > 1) out += "^" + std::to_string(h.rank);
    }
    for (long long t : h.torsion) {
        if (!out.empty()) out += " + ";
        out += "Z/" + std::to_string(t);
    }
    return out;
}

namespace {

struct Int64Overflow {};

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Int64Overflow{};
    return r;
}

long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw Int64Overflow{};
    return r;
}

// ---- dense SNF over mpz ------------------------------------------------

using MpzMatrix = std::vector<std::vector<mpz_class>>;

SnfResult snf_dense_mpz(MpzMatrix m) {
    SnfResult res;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int t = 0;
    while (t < rows && t < cols) {
        // smallest nonzero |entry| in the trailing submatrix
        int pr = -1, pc = -1;
        mpz_class best;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                mpz_class a = abs(m[i][j]);
                if (pr < 0 || a < best) {
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        std::swap(m[t], m[pr]);
        for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

        bool clean = true;
        for (int i = t + 1; i < rows && clean; ++i) {
            if (m[i][t] == 0) continue;
            mpz_class q = m[i][t] / m[t][t];
            if (q != 0)
                for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
            if (m[i][t] != 0) clean = false;  // smaller remainder became pivot candidate
        }
        if (!clean) continue;
        for (int j = t + 1; j < cols && clean; ++j) {
            if (m[t][j] == 0) continue;
            mpz_class q = m[t][j] / m[t][t];
            if (q != 0)
                for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
            if (m[t][j] != 0) clean = false;
        }
        if (!clean) continue;

        // divisibility fix: pivot must divide the rest of the submatrix
        bool divides = true;
        for (int i = t + 1; i < rows && divides; ++i)
            for (int j = t + 1; j < cols && divides; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    for (int jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                    divides = false;
                }
        if (!divides) continue;

        if (m[t][t] < 0) m[t][t] = -m[t][t];
        res.factors.push_back(m[t][t]);
        ++t;
    }
    res.rank = static_cast<long long>(res.factors.size());
    return res;
}

// ---- sparse unit-pivot elimination --------------------------------------

struct SparseMat {
    std::vector<std::map<int, long long>> row;  // row -> (col -> value)
    std::vector<std::set<int>> col_rows;        // col -> rows with a nonzero
    std::set<int> live_rows, live_cols;

    SparseMat(int nrows, int ncols) : row(nrows), col_rows(ncols) {}

    void set(int r, int c, long long v) {
        if (v == 0) return;
        row[r][c] = v;
        col_rows[c].insert(r);
        live_rows.insert(r);
        live_cols.insert(c);
    }
};

// Unit-pivot elimination; throws Int64Overflow, leaving the caller to
// restart exactly (a throw can interrupt a row operation halfway, so the
// partially updated matrix must not be reused).
SnfResult snf_sparse(SparseMat m) {
    long long unit_pivots = 0;
    while (true) {
        // best unit pivot by Markowitz fill estimate
        int pr = -1, pc = -1;
        long long best_cost = -1;
        for (int r : m.live_rows) {
            for (const auto& [c, v] : m.row[r]) {
                if (v != 1 && v != -1) continue;
                long long cost =
                    (static_cast<long long>(m.row[r].size()) - 1) *
                    (static_cast<long long>(m.col_rows[c].size()) - 1);
                if (best_cost < 0 || cost < best_cost) {
                    best_cost = cost;
                    pr = r;
                    pc = c;
                }
                if (best_cost == 0) break;
            }
            if (best_cost == 0) break;
        }
        if (pr < 0) break;

        const long long pv = m.row[pr].at(pc);
        std::vector<int> below(m.col_rows[pc].begin(), m.col_rows[pc].end());
        for (int r2 : below) {
            if (r2 == pr) continue;
            long long factor = checked_mul(m.row[r2].at(pc), pv);  // pv is +-1
            for (const auto& [c, v] : m.row[pr]) {
                long long& cell = m.row[r2][c];
                cell = checked_sub(cell, checked_mul(factor, v));
                if (cell == 0) {
                    m.row[r2].erase(c);
                    m.col_rows[c].erase(r2);
                } else {
                    m.col_rows[c].insert(r2);
                }
            }
            if (m.row[r2].empty()) m.live_rows.erase(r2);
        }
        // pivot row/col split off
        for (const auto& [c, v] : m.row[pr]) m.col_rows[c].erase(pr);
        m.row[pr].clear();
        m.live_rows.erase(pr);
        m.live_cols.erase(pc);
        ++unit_pivots;
    }

    // gather the remaining core
    std::vector<int> rows(m.live_rows.begin(), m.live_rows.end());
    std::vector<int> cols;
    {
        std::set<int> used;
        for (int r : rows)
            for (const auto& [c, v] : m.row[r]) used.insert(c);
        cols.assign(used.begin(), used.end());
    }
    SnfResult res;
    if (!rows.empty() && !cols.empty()) {
        std::map<int, int> cidx;
        for (std::size_t j = 0; j < cols.size(); ++j) cidx[cols[j]] = static_cast<int>(j);
        MpzMatrix core(rows.size(), std::vector<mpz_class>(cols.size(), 0));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (const auto& [c, v] : m.row[rows[i]])
                core[i][cidx[c]] = static_cast<long>(v);
        res = snf_dense_mpz(std::move(core));
    }
    res.factors.insert(res.factors.begin(), unit_pivots, mpz_class(1));
    res.rank = static_cast<long long>(res.factors.size());
    return res;
}

std::vector<std::tuple<int, int, long long>> boundary_entries(
    const std::vector<Simplex>& lower, const std::vector<Simplex>& upper) {
    std::vector<std::tuple<int, int, long long>> out;
    out.reserve(upper.size() * 4);
    for (std::size_t j = 0; j < upper.size(); ++j) {
        long long sign = 1;
        for (VertexId v : upper[j]) {
            Simplex face = upper[j].minus_vertex(v);
            auto it = std::lower_bound(lower.begin(), lower.end(), face);
            out.emplace_back(static_cast<int>(it - lower.begin()),
                             static_cast<int>(j), sign);
            sign = -sign;
        }
    }
    return out;
}

}  // namespace

SnfResult smith_normal_form(const DenseMatrix& m) {
    MpzMatrix z(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        z[i].reserve(m[i].size());
        for (long long v : m[i]) z[i].emplace_back(static_cast<long>(v));
    }
    return snf_dense_mpz(std::move(z));
}

SnfResult smith_normal_form_sparse(
    int nrows, int ncols,
    const std::vector<std::tuple<int, int, long long>>& entries) {
    try {
        SparseMat m(nrows, ncols);
        for (const auto& [r, c, v] : entries) m.set(r, c, v);
        return snf_sparse(std::move(m));
    } catch (const Int64Overflow&) {
        // restart on the untouched input in exact arithmetic
        MpzMatrix z(nrows, std::vector<mpz_class>(ncols, 0));
        for (const auto& [r, c, v] : entries) z[r][c] = static_cast<long>(v);
        return snf_dense_mpz(std::move(z));
    }
}

DenseMatrix boundary_matrix(const SimplicialComplex& c, int k) {
    if (k < 1 || k > c.dim())
        throw std::out_of_range("boundary_matrix: k out of range");
    auto lower = faces(c, k - 1);
    auto upper = faces(c, k);
    DenseMatrix m(lower.size(), std::vector<long long>(upper.size(), 0));
    for (const auto& [r, cc, v] : boundary_entries(lower, upper)) m[r][cc] = v;
    return m;
}

std::vector<HomologyGroup> homology(const SimplicialComplex& c, int jobs) {
    const int d = c.dim();
    if (d < 0) return {};

    std::vector<std::vector<Simplex>> fcs(d + 1);
    for (int k = 0; k <= d; ++k) fcs[k] = faces(c, k);

    // ranks and invariant factors of each boundary map
    std::vector<SnfResult> snf(d + 1);
    const int njobs = effective_jobs(jobs);
#pragma omp parallel for schedule(dynamic) num_threads(njobs) if (njobs > 1)
    for (int k = 1; k <= d; ++k) {
        auto entries = boundary_entries(fcs[k - 1], fcs[k]);
        snf[k] = smith_normal_form_sparse(static_cast<int>(fcs[k - 1].size()),
                                          static_cast<int>(fcs[k].size()), entries);
    }

    std::vector<HomologyGroup> h(d + 1);
    for (int k = 0; k <= d; ++k) {
        long long rk = (k >= 1) ? snf[k].rank : 0;           // rank of d_k
        long long rk1 = (k + 1 <= d) ? snf[k + 1].rank : 0;  // rank of d_{k+1}
        h[k].rank = static_cast<long long>(fcs[k].size()) - rk - rk1;
        if (k + 1 <= d)
            for (const mpz_class& f : snf[k + 1].factors)
                if (f > 1) {
                    if (!f.fits_slong_p())
                        throw ComplexError("homology: torsion coefficient overflow");
                    h[k].torsion.push_back(f.get_si());
                }
    }
    return h;
}

std::vector<long long> betti_mod2(const SimplicialComplex& c) {
    const int d = c.dim();
    if (d < 0) return {};
    std::vector<std::vector<Simplex>> fcs(d + 1);
    for (int k = 0; k <= d; ++k) fcs[k] = faces(c, k);

    std::vector<long long> rank(d + 2, 0);
    for (int k = 1; k <= d; ++k) {
        const std::size_t rows = fcs[k - 1].size();
        const std::size_t cols = fcs[k].size();
        const std::size_t words = (cols + 63) / 64;
        std::vector<std::vector<unsigned long long>> bits(rows,
            std::vector<unsigned long long>(words, 0));
        for (const auto& [r, cc, v] : boundary_entries(fcs[k - 1], fcs[k]))
            bits[r][cc / 64] ^= 1ULL << (cc % 64);

        long long r = 0;
        std::size_t prow = 0;
        for (std::size_t col = 0; col < cols && prow < rows; ++col) {
            std::size_t w = col / 64;
            unsigned long long mask = 1ULL << (col % 64);
            std::size_t sel = prow;
            while (sel < rows && !(bits[sel][w] & mask)) ++sel;
            if (sel == rows) continue;
            std::swap(bits[prow], bits[sel]);
            for (std::size_t i = 0; i < rows; ++i)
                if (i != prow && (bits[i][w] & mask))
                    for (std::size_t ww = 0; ww < words; ++ww)
                        bits[i][ww] ^= bits[prow][ww];
            ++prow;
            ++r;
        }
        rank[k] = r;
    }

    std::vector<long long> betti(d + 1);
    for (int k = 0; k <= d; ++k)
        betti[k] = static_cast<long long>(fcs[k].size()) - rank[k] - rank[k + 1];
    return betti;
}

}  // namespace rp4
