#pragma once

#include <gmpxx.h>

#include <tuple>
#include <vector>

#include "rp4/complex.hpp"

namespace rp4 {

// H_k as rank plus invariant-factor torsion (entries >= 2, each dividing the
// next).
struct HomologyGroup {
    long long rank = 0;
    std::vector<long long> torsion;

    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup&) const = default;
};

std::string to_string(const HomologyGroup& h);

using DenseMatrix = std::vector<std::vector<long long>>;

struct SnfResult {
    std::vector<mpz_class> factors;  // nonzero invariant factors d1 | d2 | ...
    long long rank = 0;              // = factors.size()
};

// Exact Smith normal form; smallest-nonzero-pivot with row/column gcd
// reduction over arbitrary-precision integers.
SnfResult smith_normal_form(const DenseMatrix& m);

// Same result through the sparse elimination path used for boundary
// matrices: pivots of absolute value 1 are split off in overflow-checked
// 64-bit arithmetic, the remaining core goes through the dense routine.
SnfResult smith_normal_form_sparse(
    int nrows, int ncols,
    const std::vector<std::tuple<int, int, long long>>& entries);

// Boundary matrix of dimension k (C_k -> C_{k-1}): rows indexed by the sorted
// (k-1)-faces, columns by the sorted k-faces, signs (-1)^i over vertices in
// increasing id order.
DenseMatrix boundary_matrix(const SimplicialComplex& c, int k);

// Integer simplicial homology H_0..H_d. Per-dimension SNF computations run
// in parallel when jobs != 1 (jobs <= 0 means all hardware threads).
std::vector<HomologyGroup> homology(const SimplicialComplex& c, int jobs = 1);

// Betti numbers over GF(2); fast cross-check path.
std::vector<long long> betti_mod2(const SimplicialComplex& c);

}  // namespace rp4
