#include "ranksyz/attack.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "ranksyz/rng.hpp"

namespace ranksyz {

namespace {

using Clock = std::chrono::steady_clock;

double secs_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// disjoint (r-1)-subsets of {2..m}, randomly drawn
std::vector<std::vector<unsigned>> draw_blocks(unsigned m, unsigned r, unsigned count, Rng& rng) {
    std::vector<unsigned> pool;
    for (unsigned i = 2; i <= m; ++i) pool.push_back(i);
    for (size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[rng.below(i)]);
    std::vector<std::vector<unsigned>> blocks;
    size_t at = 0;
    for (unsigned b = 0; b < count; ++b) {
        std::vector<unsigned> rows(pool.begin() + at, pool.begin() + at + (r - 1));
        std::sort(rows.begin(), rows.end());
        blocks.push_back(std::move(rows));
        at += r - 1;
    }
    return blocks;
}

// mu with y - mu*word in C, verified entirely; nullopt when word is invalid
std::optional<ExtElem> normalization(const DecodingInstance& inst, const MatExt& H,
                                     const std::vector<ExtElem>& word) {
    const FieldTower& t = *inst.code.tower;
    const size_t rows = H.rows(), n = inst.code.n;
    std::vector<ExtElem> sy(rows, t.zero()), sw(rows, t.zero());
    for (size_t l = 0; l < rows; ++l)
        for (size_t j = 0; j < n; ++j) {
            sy[l] = t.add(sy[l], t.mul(inst.y[j], H.at(l, j)));
            sw[l] = t.add(sw[l], t.mul(word[j], H.at(l, j)));
        }
    std::optional<ExtElem> mu;
    for (size_t l = 0; l < rows; ++l) {
        if (sw[l].is_zero()) continue;
        mu = t.mul(sy[l], t.inv(sw[l]));
        break;
    }
    if (!mu) return std::nullopt;
    for (size_t l = 0; l < rows; ++l)
        if (!(t.mul(*mu, sw[l]) == sy[l])) return std::nullopt;
    return mu;
}

}  // namespace

AttackOutcome algorithm1(const DecodingInstance& inst, unsigned target_rank,
                         const AttackConfig& cfg) {
    const FieldTower& t = *inst.code.tower;
    const unsigned m = t.m(), n = unsigned(inst.code.n), r = target_rank;
    if (r < 1) throw std::invalid_argument("algorithm1: target rank must be positive");

    AttackOutcome out;
    Clock::time_point t0 = Clock::now();
    Rng rng(cfg.seed ^ (uint64_t(target_rank) << 32));

    const size_t column = cfg.forced_column ? *cfg.forced_column : size_t(rng.below(n));
    const unsigned max_blocks = r >= 2 ? (m - 1) / (r - 1) : 1;
    unsigned c = cfg.blocks ? std::min(cfg.blocks, max_blocks) : max_blocks;
    if (r >= 2 && c == 0)
        throw std::invalid_argument("algorithm1: no identity block fits (r too large for m)");

    std::vector<std::vector<unsigned>> blocks;
    if (r >= 2)
        blocks = draw_blocks(m, r, c, rng);
    else
        blocks.push_back({});  // the loop degenerates to the single pinned solve

    MatExt H = parity_check(inst.code);

    for (const auto& block : blocks) {
        Specialization spec;
        spec.pinned_col = column;
        spec.block_rows = block;

        XlOptions xopts;
        xopts.seed = rng.u64();
        xopts.memory_budget_bytes = cfg.memory_budget_bytes;
        if (cfg.d_cap_override) xopts.d_cap = cfg.d_cap_override;
        xopts.trace = cfg.trace;

        Clock::time_point ta = Clock::now();
        AttemptRecord rec;
        rec.target_rank = r;
        rec.column = column;
        rec.block_rows = block;
        OjSolveOutcome sol;
        try {
            sol = solve_with_J(inst, r, spec, xopts);
        } catch (const std::exception& e) {
            rec.status = SolveStatus::DegreeCapReached;
            rec.elapsed_s = secs_since(ta);
            out.attempts.push_back(rec);
            out.note = e.what();
            continue;
        }
        rec.status = sol.report.status;
        rec.d_ff = sol.report.d_ff;
        rec.d_max = sol.report.d_max;
        rec.elapsed_s = secs_since(ta);
        out.attempts.push_back(rec);

        if (!sol.solved) continue;
        auto mu = normalization(inst, H, sol.word);
        if (!mu) continue;
        std::vector<ExtElem> err(n);
        for (size_t j = 0; j < n; ++j) err[j] = t.mul(*mu, sol.word[j]);
        if (rank_weight(t, err) != r) continue;
        std::vector<ExtElem> cword = sub_vectors(t, inst.y, err);
        if (!in_code(inst.code, cword)) continue;
        out.success = true;
        out.error = std::move(err);
        out.lambda = *mu;
        out.rank_found = r;
        out.d_max = sol.report.d_max;
        break;
    }
    out.total_s = secs_since(t0);
    return out;
}

AttackOutcome full_attack(const DecodingInstance& inst, const AttackConfig& cfg) {
    AttackOutcome out;
    Clock::time_point t0 = Clock::now();
    std::vector<unsigned> targets;
    if (cfg.rank_sweep)
        for (unsigned rr = 1; rr <= inst.r; ++rr) targets.push_back(rr);
    else
        targets.push_back(inst.r);

    Rng rng(cfg.seed);
    for (unsigned target : targets) {
        for (unsigned retry = 0; retry < std::max(1u, cfg.max_column_retries); ++retry) {
            AttackConfig sub = cfg;
            sub.seed = rng.u64();
            AttackOutcome got;
            try {
                got = algorithm1(inst, target, sub);
            } catch (const std::exception& e) {
                out.note = e.what();
                break;
            }
            for (auto& a : got.attempts) out.attempts.push_back(a);
            if (got.success) {
                got.attempts = out.attempts;
                got.total_s = secs_since(t0);
                return got;
            }
        }
    }
    out.total_s = secs_since(t0);
    out.note = out.note.empty() ? "all retries exhausted" : out.note;
    return out;
}

mpq_class p_full_rank(unsigned q, unsigned a, unsigned b) {
    if (a > b) throw std::invalid_argument("p_full_rank: need a <= b");
    mpq_class p(1);
    for (unsigned i = 0; i < a; ++i) {
        // 1 - q^{i-b} = (q^b - q^i) / q^b
        mpz_class qb, qi;
        mpz_ui_pow_ui(qb.get_mpz_t(), q, b);
        mpz_ui_pow_ui(qi.get_mpz_t(), q, i);
        p *= mpq_class(qb - qi, qb);
    }
    p.canonicalize();
    return p;
}

mpq_class success_probability(unsigned m, unsigned n, unsigned r, unsigned q, unsigned c) {
    if (r < 2) throw std::invalid_argument("success_probability: needs r >= 2");
    if (c < 1 || c > (m - 1) / (r - 1))
        throw std::invalid_argument("success_probability: c out of range");
    mpz_class qr, qn;
    mpz_ui_pow_ui(qr.get_mpz_t(), q, r);
    mpz_ui_pow_ui(qn.get_mpz_t(), q, n);
    // (1 - q^-r)/(1 - q^-n) = (1 - q^{-r}) * q^n / (q^n - 1)
    mpq_class first = mpq_class(qr - 1, qr) * mpq_class(qn, qn - 1);
    mpq_class p_small = p_full_rank(q, r - 1, r - 1);
    mpq_class p_big = p_full_rank(q, r - 1, m - 1);
    mpq_class fail = 1 - p_small;
    mpq_class fail_c(1);
    for (unsigned i = 0; i < c; ++i) fail_c *= fail;
    mpq_class second = 1 - fail_c / p_big;
    mpq_class out = first * second;
    out.canonicalize();
    return out;
}

double mc_nonzero_pinned_coordinate(unsigned q, unsigned m, unsigned n, unsigned r, size_t trials,
                                    uint64_t seed) {
    Gf f(q);
    size_t hits = 0;
    Rng root(seed);
    for (size_t i = 0; i < trials; ++i) {
        Rng rng = root.fork(i);
        MatFq S = random_full_rank(f, m, r, rng);
        MatFq C = random_full_rank(f, r, n, rng);
        (void)S;  // e_j = 0 iff column j of C is zero
        size_t j = rng.below(n);
        bool nonzero = false;
        for (unsigned i2 = 0; i2 < r; ++i2) nonzero |= C.get(i2, j) != 0;
        hits += nonzero;
    }
    return double(hits) / double(trials);
}

double mc_block_invertible(unsigned q, unsigned m, unsigned r, unsigned c, size_t trials,
                           uint64_t seed) {
    Gf f(q);
    size_t hits = 0;
    Rng root(seed);
    for (size_t i = 0; i < trials; ++i) {
        Rng rng = root.fork(i);
        MatFq shat = random_full_rank(f, m - 1, r - 1, rng);
        bool any = false;
        for (unsigned b = 0; b < c && !any; ++b) {
            MatFq block(f, r - 1, r - 1);
            for (unsigned i2 = 0; i2 < r - 1; ++i2)
                for (unsigned j = 0; j < r - 1; ++j)
                    block.set(i2, j, shat.get(b * (r - 1) + i2, j));
            any = rank_of(block) == r - 1;
        }
        hits += any;
    }
    return double(hits) / double(trials);
}

double mc_algorithm1_success(unsigned q, unsigned m, unsigned n, unsigned k, unsigned r, unsigned c,
                             size_t trials, uint64_t seed) {
    size_t hits = 0;
    Rng root(seed);
    for (size_t i = 0; i < trials; ++i) {
        Rng rng = root.fork(i);
        DecodingInstance inst = gen_instance(q, m, n, k, r, rng.u64());
        AttackConfig cfg;
        cfg.blocks = c;
        cfg.seed = rng.u64();
        AttackOutcome out = algorithm1(inst, r, cfg);
        hits += out.success;
    }
    return double(hits) / double(trials);
}

}  // namespace ranksyz
