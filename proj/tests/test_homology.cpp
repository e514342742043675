#include <doctest.h>

#include <functional>

#include "rp4/homology.hpp"
#include "support.hpp"

using namespace rp4;
using rp4::testing::small_corpus;

TEST_SUITE_BEGIN("homology");

namespace {

std::vector<long long> factors_ll(const SnfResult& r) {
    std::vector<long long> out;
    for (const mpz_class& f : r.factors) out.push_back(f.get_si());
    return out;
}

}  // namespace

TEST_CASE("smith normal form on small matrices") {
    SnfResult id3 = smith_normal_form({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(id3.rank == 3);
    CHECK(factors_ll(id3) == std::vector<long long>{1, 1, 1});

    SnfResult diag = smith_normal_form({{2, 0}, {0, 3}});
    CHECK(diag.rank == 2);
    CHECK(factors_ll(diag) == std::vector<long long>{1, 6});

    // boundary of the triangle: rows = vertices 1,2,3; columns = edges
    // 12, 13, 23 with signs (-1)^position
    auto c = simplex_boundary(2);
    DenseMatrix d1 = boundary_matrix(c, 1);
    CHECK(d1 == DenseMatrix{{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}});
    SnfResult snf = smith_normal_form(d1);
    CHECK(snf.rank == 2);
    CHECK(factors_ll(snf) == std::vector<long long>{1, 1});
}

TEST_CASE("sparse and dense smith normal form agree") {
    rp4::testing::TestRng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 1 + static_cast<int>(rng.below(6));
        int cols = 1 + static_cast<int>(rng.below(6));
        DenseMatrix m(rows, std::vector<long long>(cols));
        std::vector<std::tuple<int, int, long long>> entries;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                m[i][j] = static_cast<long long>(rng.below(9)) - 4;
                if (m[i][j]) entries.emplace_back(i, j, m[i][j]);
            }
        SnfResult dense = smith_normal_form(m);
        SnfResult sparse = smith_normal_form_sparse(rows, cols, entries);
        CHECK(dense.rank == sparse.rank);
        CHECK(factors_ll(dense) == factors_ll(sparse));
    }
}

namespace {

std::vector<std::vector<int>> index_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(pick.size()) == k) {
            out.push_back(pick);
            return;
        }
        for (int x = start; x < n; ++x) {
            pick.push_back(x);
            rec(x + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

mpz_class permanent_style_det(const DenseMatrix& m, const std::vector<int>& rs,
                              std::vector<int> cs) {
    std::sort(cs.begin(), cs.end());
    mpz_class sum = 0;
    do {
        long long prod = 1;
        int inversions = 0;
        for (std::size_t i = 0; i < rs.size(); ++i) {
            prod *= m[rs[i]][cs[i]];
            for (std::size_t j = i + 1; j < cs.size(); ++j)
                if (cs[j] < cs[i]) ++inversions;
        }
        sum += (inversions % 2 ? -1 : 1) * mpz_class(static_cast<long>(prod));
    } while (std::next_permutation(cs.begin(), cs.end()));
    return sum;
}

// gcd of all k x k minors: the k-th determinantal divisor
mpz_class minor_gcd(const DenseMatrix& m, int k) {
    mpz_class g = 0;
    for (const auto& rs : index_subsets(static_cast<int>(m.size()), k))
        for (const auto& cs : index_subsets(static_cast<int>(m[0].size()), k))
            g = gcd(g, permanent_style_det(m, rs, cs));
    return g;
}

}  // namespace

TEST_CASE("invariant factors match the determinantal divisors") {
    // d_1 * ... * d_k equals the gcd of all k x k minors; brute-forcing the
    // minors is an oracle independent of both elimination routes
    rp4::testing::TestRng rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        int rows = 2 + static_cast<int>(rng.below(3));
        int cols = 2 + static_cast<int>(rng.below(3));
        DenseMatrix m(rows, std::vector<long long>(cols));
        for (auto& row : m)
            for (long long& v : row) v = static_cast<long long>(rng.below(7)) - 3;
        auto snf = smith_normal_form(m);
        mpz_class product = 1;
        for (int k = 1; k <= static_cast<int>(snf.factors.size()); ++k) {
            product *= snf.factors[k - 1];
            CHECK(product == minor_gcd(m, k));
        }
        int beyond = static_cast<int>(snf.rank) + 1;
        if (beyond <= std::min(rows, cols))
            CHECK(minor_gcd(m, beyond) == 0);  // the rank is sharp
    }
}

TEST_CASE("sparse elimination escalates to exact arithmetic on overflow") {
    // eliminating the unit pivot forces -K - K, one past the int64 range,
    // and the invariant factors themselves exceed 64 bits
    const long long k = (1LL << 62) + 1;
    auto sparse = smith_normal_form_sparse(
        2, 2, {{0, 0, 1}, {0, 1, k}, {1, 0, 1}, {1, 1, -k}});
    auto dense = smith_normal_form({{1, k}, {1, -k}});
    CHECK(sparse.rank == 2);
    CHECK(dense.rank == 2);
    CHECK(sparse.factors == dense.factors);
    CHECK(sparse.factors[0] == 1);
    CHECK(sparse.factors[1] == 2 * mpz_class(static_cast<long>(k)));
}

TEST_CASE("boundary of boundary vanishes") {
    for (const auto& [name, c] : small_corpus()) {
        CAPTURE(name);
        for (int k = 2; k <= c.dim(); ++k) {
            DenseMatrix a = boundary_matrix(c, k - 1);
            DenseMatrix b = boundary_matrix(c, k);
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t j = 0; j < b[0].size(); ++j) {
                    long long sum = 0;
                    for (std::size_t t = 0; t < b.size(); ++t)
                        sum += a[i][t] * b[t][j];
                    REQUIRE(sum == 0);
                }
        }
    }
}

TEST_CASE("homology of reference spaces") {
    using H = std::vector<HomologyGroup>;
    CHECK(homology(simplex_boundary(5)) == H{{1, {}}, {0, {}}, {0, {}}, {0, {}}, {1, {}}});
    CHECK(homology(cross_polytope_boundary(4)) == H{{1, {}}, {0, {}}, {0, {}}, {1, {}}});
    CHECK(homology(rp2_6()) == H{{1, {}}, {0, {2}}, {0, {}}});
    CHECK(homology(rp3_11()) == H{{1, {}}, {0, {2}}, {0, {}}, {1, {}}});
    CHECK(homology(kuehnel_rp(3)) == H{{1, {}}, {0, {2}}, {0, {}}, {1, {}}});
}

TEST_CASE("euler characteristic matches homology ranks") {
    for (const auto& [name, c] : small_corpus()) {
        CAPTURE(name);
        long long chi = 0, sign = 1;
        for (const HomologyGroup& h : homology(c)) {
            chi += sign * h.rank;
            sign = -sign;
        }
        CHECK(chi == f_vector(c).euler());
    }
}

TEST_CASE("mod-2 betti numbers via universal coefficients") {
    for (const auto& [name, c] : small_corpus()) {
        CAPTURE(name);
        auto h = homology(c);
        auto b2 = betti_mod2(c);
        REQUIRE(b2.size() == h.size());
        auto even_torsion = [](const HomologyGroup& g) {
            long long n = 0;
            for (long long t : g.torsion)
                if (t % 2 == 0) ++n;
            return n;
        };
        for (std::size_t k = 0; k < h.size(); ++k) {
            long long expect = h[k].rank + even_torsion(h[k]);
            if (k > 0) expect += even_torsion(h[k - 1]);
            CHECK(b2[k] == expect);
        }
    }
}

TEST_CASE("parallel homology equals the serial reference") {
    auto c = rp3_11();
    CHECK(homology(c, 1) == homology(c, 2));
    CHECK(homology(c, 1) == homology(c, 0));
}

TEST_SUITE_END();
