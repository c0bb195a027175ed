#pragma once

#include <gmpxx.h>

#include <vector>

#include "ranksyz/codes.hpp"
#include "ranksyz/modelling.hpp"
#include "ranksyz/polynomial.hpp"

namespace ranksyz {

enum class Regime { Overdetermined, Intermediate, Underdetermined };

const char* regime_name(Regime r);

// Heuristic trichotomy on m*C(n-k-1,r) against C(n,r)-1 and C(n-1,r),
// computed in exact big-integer arithmetic.
struct RegimeClass {
    Regime regime;
    mpz_class minors_rows;      // m * C(n-k-1, r)
    mpz_class over_threshold;   // C(n, r) - 1
    mpz_class under_threshold;  // C(n-1, r)
};

mpz_class binomial(unsigned long n, unsigned long k);

// requires 1 <= r <= n-k-1 (otherwise there are no maximal minors)
RegimeClass classify_regime(unsigned m, unsigned n, unsigned k, unsigned r);

struct SyzygyPrediction {
    unsigned degree = 0;  // r-1 or r
    mpz_class count;
};

// Expected number of low-degree equations obtained from the linearized
// minors system: (r-1, C(n-1,r-1)-1) / (r-1, mC(n-k-1,r)-C(n-1,r)) /
// (r, mC(n-k-1,r)) by regime.
SyzygyPrediction expected_syzygy_count(unsigned m, unsigned n, unsigned k, unsigned r);

// Exponent of (-1) carried by the term det(R_{T1, J\T2}) det(C_{.,T}) in the
// Laplace expansion of det((-R ; I)_{T,J}); T2 must be a subset of J (both
// sorted, 1-based labels in {k+2..n}).
long sign_sigma(const std::vector<unsigned>& T2, const std::vector<unsigned>& J, unsigned k,
                unsigned r);

// P_J = det((C2 - C1 R)_{., J}) expanded through Cauchy-Binet into minor
// blocks det(C_{.,T}); J is a sorted r-subset of {k+2..n} (1-based).
PolyExt build_pj(const ExtendedCode& ext, unsigned r, const VarSpace& vs,
                 const Specialization& spec, const std::vector<unsigned>& J);

struct MinorVar {
    std::vector<unsigned> T;  // sorted 1-based column labels, |T| = r
    unsigned degree = 0;      // r-1 when the pinned column lies in T, else r
};

// Linearization of the coordinate-split minors over the minor variables
// x_T = det(C_{.,T}). Rows are indexed by (J, i) with J running over
// r-subsets of {k+2..n} in colex order and i = 1..m inside each J; columns
// hold the degree-r minor variables first (colex), then the degree-(r-1)
// ones (colex), so the low-degree block is rightmost.
struct MaxMinorsMatrix {
    unsigned m = 0, n = 0, k = 0, r = 0;
    size_t pinned_col = 0;               // 0-based C column
    size_t degree_r_cols = 0;            // size of the leading block
    std::vector<MinorVar> columns;
    std::vector<std::vector<unsigned>> row_J;  // colex-ordered J per row block
    MatFq mat;                            // (m * #J) x C(n,r)
};

MaxMinorsMatrix build_matrix_M(const ExtendedCode& ext, unsigned r, const Specialization& spec,
                               size_t column_cap = 2000000);

// The equation set harvested from the echelonized linearization: rows whose
// pivot lands in the low-degree block translated back to polynomials in the
// coefficient variables (degree r-1), or every row (degree r) when no such
// pivot exists. rref_rows/pivot data are kept for downstream consumers.
struct HarvestResult {
    std::vector<Polynomial> polys;  // the set J, variables indexed by vs
    unsigned degree = 0;
    bool fell_back_to_degree_r = false;
    Regime regime = Regime::Overdetermined;
    SyzygyPrediction predicted;
    size_t rank = 0;
    bool count_matches = false;
    std::vector<Polynomial> degree_r_polys;  // filled on request only
    MatFq rref;                              // echelonized M
    std::vector<size_t> pivot_cols;
};

HarvestResult extract_J_equations(const MaxMinorsMatrix& M, const VarSpace& vs,
                                  const Specialization& spec, const Gf& field,
                                  bool also_degree_r = false);

// colex-ordered r-subsets of {0..g-1}
std::vector<std::vector<unsigned>> colex_subsets(unsigned g, unsigned r);

}  // namespace ranksyz
