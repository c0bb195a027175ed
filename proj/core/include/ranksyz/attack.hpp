#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "ranksyz/codes.hpp"
#include "ranksyz/macaulay.hpp"

namespace ranksyz {

struct AttackConfig {
    unsigned blocks = 0;              // c; 0 means floor((m-1)/(r-1))
    unsigned max_column_retries = 4;  // fresh pinned-column draws in full_attack
    uint64_t seed = 0;
    unsigned d_cap_override = 0;
    bool rank_sweep = false;  // try target ranks 1..r
    size_t memory_budget_bytes = size_t(3) << 30;
    std::optional<size_t> forced_column;  // test hook: fix the pinned column
    std::function<void(const SolveStep&)> trace;
};

struct AttemptRecord {
    unsigned target_rank = 0;
    size_t column = 0;
    std::vector<unsigned> block_rows;
    SolveStatus status = SolveStatus::DegreeCapReached;
    int d_ff = -1, d_max = -1;
    double elapsed_s = 0;
};

struct AttackOutcome {
    bool success = false;
    std::vector<ExtElem> error;
    ExtElem lambda;  // scaling that maps the recovered word onto the error
    unsigned rank_found = 0;
    int d_max = -1;
    std::vector<AttemptRecord> attempts;
    double total_s = 0;
    std::string note;
};

// One run of the specialization loop: pin a column (random unless forced),
// try up to c disjoint identity blocks, return the first verified solve.
AttackOutcome algorithm1(const DecodingInstance& inst, unsigned target_rank,
                         const AttackConfig& cfg);

// Wraps algorithm1 with fresh column retries and the optional sweep over
// increasing target ranks; a success always satisfies y - e in C and
// rank_weight(e) = target.
AttackOutcome full_attack(const DecodingInstance& inst, const AttackConfig& cfg);

// prod_{i=0}^{a-1} (1 - q^{i-b}): probability that a uniform a x b matrix
// over F_q has full rank (a <= b)
mpq_class p_full_rank(unsigned q, unsigned a, unsigned b);

// Lower bound on the probability that at most c specialization attempts are
// needed on a uniform instance:
// (1-q^-r)/(1-q^-n) * (1 - (1-p_{q,r-1,r-1})^c / p_{q,r-1,m-1})
mpq_class success_probability(unsigned m, unsigned n, unsigned r, unsigned q, unsigned c);

// Monte Carlo batteries used by tests and the verify command. All are
// deterministic under seed.
double mc_nonzero_pinned_coordinate(unsigned q, unsigned m, unsigned n, unsigned r, size_t trials,
                                    uint64_t seed);
double mc_block_invertible(unsigned q, unsigned m, unsigned r, unsigned c, size_t trials,
                           uint64_t seed);
double mc_algorithm1_success(unsigned q, unsigned m, unsigned n, unsigned k, unsigned r, unsigned c,
                             size_t trials, uint64_t seed);

}  // namespace ranksyz
