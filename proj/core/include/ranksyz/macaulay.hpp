#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ranksyz/matrix.hpp"
#include "ranksyz/maxminors.hpp"
#include "ranksyz/modelling.hpp"
#include "ranksyz/polynomial.hpp"

namespace ranksyz {

// All monomials over nvars variables with per-variable exponent below q and
// total degree <= d, grevlex-descending (constant last).
std::vector<Monomial> monomials_upto(size_t nvars, unsigned d, unsigned q);

// Affine Macaulay matrix at degree d: one row per product t*f_i with
// deg(t) <= d - deg(f_i), reduced modulo the field equations.
struct MacaulayMatrix {
    unsigned degree = 0;
    std::vector<Monomial> columns;
    std::vector<std::pair<Monomial, size_t>> row_tags;  // (multiplier, poly index)
    MatFq mat;
};

MacaulayMatrix build_macaulay(const std::vector<Polynomial>& system, size_t nvars, unsigned d,
                              size_t column_cap = 4000000);

enum class SolveStatus { Solved, Inconsistent, DegreeCapReached };
const char* status_name(SolveStatus s);

struct SolveStep {
    unsigned d = 0;
    size_t rows = 0, cols = 0, rank = 0, new_falls = 0;
    double elapsed_ms = 0;
};

struct SolveReport {
    SolveStatus status = SolveStatus::DegreeCapReached;
    int d_ff = -1;   // first degree with a fall, -1 if none observed
    int d_max = -1;  // largest degree at which new polynomials appeared
    std::vector<SolveStep> steps;
    std::vector<int16_t> solution;  // per variable, -1 when not pinned
    std::string note;
};

// Invoked when the dense Macaulay for degree d would not fit the memory
// budget. Returns the degree falls of the current system at degree d (in
// the system's variables), or nullopt when d is out of reach.
using OversizeHook =
    std::function<std::optional<std::vector<Polynomial>>(unsigned d, const std::vector<Polynomial>&)>;

struct XlOptions {
    unsigned d_start = 0;  // 0: maximum degree of the input system
    unsigned d_cap = 0;
    size_t memory_budget_bytes = size_t(3) << 30;
    size_t column_cap = 8000000;
    uint64_t seed = 1;
    std::function<void(const SolveStep&)> trace;
    OversizeHook oversize;
};

// Degree-bounded linearization solver: builds the Macaulay matrix at
// increasing degrees, echelonizes, harvests degree falls back into the
// system until a fixpoint, pins variables from linear rows (substituting
// partial assignments), and verifies any full assignment against the
// original system before reporting Solved.
SolveReport xl_solve(const std::vector<Polynomial>& system, size_t nvars, XlOptions opts);

struct OjSolveOutcome {
    SolveReport report;
    bool solved = false;
    bool has_minors = false;
    Regime regime = Regime::Overdetermined;
    HarvestResult harvest;
    MatFq S, C;                 // specialized matrices at the solution
    std::vector<ExtElem> word;  // recovered low-rank codeword, original coordinate order
};

// The attack's per-specialization pipeline: build the support/coefficient
// system, harvest the low-degree minor equations, then solve. In the
// underdetermined regime the coefficient-only stage runs first (that is
// where the work concentrates) and the support variables follow from a
// linear solve; otherwise the joint system goes straight to the solver.
OjSolveOutcome solve_with_J(const DecodingInstance& inst, unsigned target_rank,
                            const Specialization& spec, XlOptions opts,
                            bool adjoin_degree_r = false);

}  // namespace ranksyz
