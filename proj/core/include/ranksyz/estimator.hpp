#pragma once

#include <string>
#include <vector>

#include "ranksyz/maxminors.hpp"

namespace ranksyz {

struct ParamSet {
    std::string name;
    unsigned m = 0, n = 0, k = 0, r = 0;
    double claimed_bits = 0;  // previously claimed classical security
};

// The 13 parameter sets of the rank-metric cryptosystems covered by the
// security table.
std::vector<ParamSet> builtin_parameter_sets();

// omega * log2(sum_{delta<=d} C((m-r)(r-1)+(n-1)r, delta)); binomials exact,
// only the final log2 in floating point.
double oj_complexity_bits(unsigned m, unsigned n, unsigned k, unsigned r, unsigned d, double omega);

// r when the linearized minors system is overdetermined, r+1 otherwise
// (conservative for the intermediate regime).
unsigned choose_d(unsigned m, unsigned n, unsigned k, unsigned r);

// omega * log2(sum_{delta<=r+2} C(km + r(n-r), delta)): the kernel-modelling
// comparison bound.
double ks_complexity_bits(unsigned m, unsigned n, unsigned k, unsigned r, double omega);

struct SecurityEstimate {
    ParamSet params;
    Regime regime = Regime::Overdetermined;
    unsigned d_bold = 0;
    double bits_at_r = 0;
    double bits_at_r1 = 0;
    double bits_bold = 0;
    double ks_bits = 0;
    // asymptotic orders (log2): (3/2) w r log2 n, 2 w r log2 n, r n / 2
    double asym_oj = 0, asym_ks = 0, asym_comb = 0;
};

std::vector<SecurityEstimate> security_table(const std::vector<ParamSet>& params, double omega);

}  // namespace ranksyz
