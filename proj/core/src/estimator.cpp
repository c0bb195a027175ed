#include "ranksyz/estimator.hpp"

#include <cmath>

namespace ranksyz {

std::vector<ParamSet> builtin_parameter_sets() {
    return {
        {"Loidreau", 128, 120, 80, 4, 256},   {"ROLLO-I-128", 79, 94, 47, 5, 128},
        {"ROLLO-I-192", 89, 106, 53, 6, 192}, {"ROLLO-I-256", 113, 134, 67, 7, 256},
        {"ROLLO-II-128", 83, 298, 149, 5, 128}, {"ROLLO-II-192", 107, 302, 151, 6, 192},
        {"ROLLO-II-256", 127, 314, 157, 7, 256}, {"ROLLO-III-128", 101, 94, 47, 5, 128},
        {"ROLLO-III-192", 107, 118, 59, 6, 192}, {"ROLLO-III-256", 131, 134, 67, 7, 256},
        {"RQC-I", 97, 134, 67, 5, 128},       {"RQC-II", 107, 202, 101, 6, 192},
        {"RQC-III", 137, 262, 131, 7, 256},
    };
}

namespace {

double log2_mpz(const mpz_class& v) {
    signed long exp;
    double d = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log2(d) + double(exp);
}

double bits_of_sum(unsigned long vars, unsigned d, double omega) {
    mpz_class sum = 0;
    for (unsigned delta = 0; delta <= d; ++delta) sum += binomial(vars, delta);
    return omega * log2_mpz(sum);
}

}  // namespace

double oj_complexity_bits(unsigned m, unsigned n, unsigned k, unsigned r, unsigned d,
                          double omega) {
    (void)k;  // the bound depends on the variable count only
    const unsigned long vars = (unsigned long)(m - r) * (r - 1) + (unsigned long)(n - 1) * r;
    return bits_of_sum(vars, d, omega);
}

unsigned choose_d(unsigned m, unsigned n, unsigned k, unsigned r) {
    return classify_regime(m, n, k, r).regime == Regime::Overdetermined ? r : r + 1;
}

double ks_complexity_bits(unsigned m, unsigned n, unsigned k, unsigned r, double omega) {
    const unsigned long vars = (unsigned long)k * m + (unsigned long)r * (n - r);
    return bits_of_sum(vars, r + 2, omega);
}

std::vector<SecurityEstimate> security_table(const std::vector<ParamSet>& params, double omega) {
    std::vector<SecurityEstimate> out;
    out.reserve(params.size());
    for (const auto& p : params) {
        SecurityEstimate e;
        e.params = p;
        e.regime = classify_regime(p.m, p.n, p.k, p.r).regime;
        e.d_bold = choose_d(p.m, p.n, p.k, p.r);
        e.bits_at_r = oj_complexity_bits(p.m, p.n, p.k, p.r, p.r, omega);
        e.bits_at_r1 = oj_complexity_bits(p.m, p.n, p.k, p.r, p.r + 1, omega);
        e.bits_bold = e.d_bold == p.r ? e.bits_at_r : e.bits_at_r1;
        e.ks_bits = ks_complexity_bits(p.m, p.n, p.k, p.r, omega);
        e.asym_oj = 1.5 * omega * p.r * std::log2(double(p.n));
        e.asym_ks = 2.0 * omega * p.r * std::log2(double(p.n));
        e.asym_comb = 0.5 * double(p.r) * double(p.n);
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace ranksyz
