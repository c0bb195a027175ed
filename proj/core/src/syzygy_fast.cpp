#include "ranksyz/syzygy_fast.hpp"

#include <array>

#include "ranksyz/elimination.hpp"
#include "xl_internal.hpp"

namespace ranksyz {

namespace {

constexpr unsigned kProjBits = 4096;
constexpr unsigned kProjWords = kProjBits / 64;

inline uint64_t splitmix(uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::unique_ptr<MinorFallContext> MinorFallContext::build(const MaxMinorsMatrix& M,
                                                          const HarvestResult& harvest,
                                                          const VarSpace& vs, uint64_t seed) {
    if (!harvest.fell_back_to_degree_r) return nullptr;  // meant for the underdetermined shape
    std::unique_ptr<MinorFallContext> ctx(new MinorFallContext());
    ctx->field_ = Gf(2);
    ctx->r_ = M.r;
    ctx->n_ = M.n;
    ctx->n_support_ = vs.n_support;
    ctx->va_ = unsigned(vs.n_coeff);
    ctx->seed_ = seed ^ 0x5371ab5e5c1d9d15ULL;
    ctx->minor_count_ = M.degree_r_cols;
    if (ctx->va_ != size_t(M.r) * (M.n - 1)) return nullptr;
    if (ctx->va_ > xl::kMaxPackedVars) return nullptr;

    const unsigned pinned_label = unsigned(M.pinned_col) + 1;
    for (unsigned label = 1; label <= M.n; ++label)
        if (label != pinned_label) ctx->others_.push_back(label);

    // every pivot must sit in the degree-r block
    ctx->row_of_minor_.assign(ctx->minor_count_, -1);
    for (size_t p = 0; p < harvest.pivot_cols.size(); ++p) {
        if (harvest.pivot_cols[p] >= ctx->minor_count_) return nullptr;
        ctx->pivot_minor_.push_back(uint32_t(harvest.pivot_cols[p]));
        ctx->row_of_minor_[harvest.pivot_cols[p]] = int32_t(p);
    }
    ctx->kernel_dim_ = ctx->minor_count_ - harvest.pivot_cols.size();

    // kernel of the degree-r block of the echelonized linearization, one
    // component vector per minor variable
    const size_t kw_words = (ctx->kernel_dim_ + 63) / 64;
    ctx->kw_.assign(ctx->minor_count_, std::vector<uint64_t>(std::max<size_t>(kw_words, 1), 0));
    size_t l = 0;
    for (size_t j = 0; j < ctx->minor_count_; ++j) {
        if (ctx->row_of_minor_[j] >= 0) continue;
        ctx->kw_[j][l >> 6] |= uint64_t(1) << (l & 63);
        for (size_t p = 0; p < ctx->pivot_minor_.size(); ++p)
            if (harvest.rref.get(p, j))
                ctx->kw_[ctx->pivot_minor_[p]][l >> 6] |= uint64_t(1) << (l & 63);
        ++l;
    }

    // pack the equations over the coefficient variables
    ctx->eqs_.resize(harvest.polys.size());
    for (size_t p = 0; p < harvest.polys.size(); ++p) {
        for (auto& [mono, c] : harvest.polys[p].terms()) {
            (void)c;
            std::array<uint64_t, 3> mask{0, 0, 0};
            for (auto& [v, e] : mono.exps) {
                (void)e;
                if (v < vs.n_support) return nullptr;  // support variable leaked in
                unsigned pos = unsigned(v - vs.n_support);
                mask[pos >> 6] |= uint64_t(1) << (pos & 63);
            }
            ctx->eqs_[p].term_masks.push_back(mask);
        }
    }
    return ctx;
}

std::optional<std::vector<Polynomial>> MinorFallContext::falls_at(unsigned degree,
                                                                  size_t memory_budget) const {
    const unsigned u = degree > r_ ? degree - r_ : 0;
    if (u < 1 || u > 2) return std::nullopt;
    using namespace xl;
    const BinomTable& bt = binom_table();
    const unsigned va = va_;
    const unsigned n1 = n_ - 1;

    // multiplier-monomial universe of degree <= u, colex indexed
    const size_t tcount = 1 + va + (u == 2 ? size_t(bt(va, 2)) : 0);
    std::vector<Mask> tmask(tcount);
    for (unsigned v = 0; v < va; ++v) tmask[1 + v].set(v);
    if (u == 2) {
        size_t idx = 1 + va;
        for (unsigned b = 1; b < va; ++b)
            for (unsigned a = 0; a < b; ++a) {
                tmask[idx].set(a);
                tmask[idx].set(b);
                ++idx;
            }
    }
    auto tpair = [&](unsigned a, unsigned b) {  // a < b
        return 1 + va + size_t(b) * (b - 1) / 2 + a;
    };

    const size_t sw = kernel_dim_;
    const size_t sw_words = sw ? (sw + 63) / 64 : 0;
    const size_t c_bits = tcount * sw_words * 64;
    const size_t mu_choices = (u == 2) ? (1 + va) : 1;
    const auto Qs = colex_subsets(n1, r_ + 1);
    const size_t gens = mu_choices * r_ * Qs.size();
    const size_t cols = c_bits + kProjBits + gens;
    const size_t words = (cols + 63) / 64;
    if (gens * words * 8 > memory_budget) return std::nullopt;

    // minor index of an ascending position set, combinatorial number system
    auto minor_rank = [&](const unsigned* pos, unsigned len) {
        uint64_t rank = 0;
        for (unsigned i = 0; i < len; ++i) rank += bt(pos[i], i + 1);
        return size_t(rank);
    };
    auto coeff_var = [&](unsigned row, unsigned pos) { return row * n1 + pos; };

    BitMatrix a(gens, cols);
    size_t g = 0;
    std::vector<unsigned> rest(r_);
    for (size_t mu = 0; mu < mu_choices; ++mu) {
        const int mu_var = int(mu) - 1;  // -1 means multiplier 1
        for (unsigned i = 0; i < r_; ++i) {
            for (const auto& Q : Qs) {
                uint64_t* row = a.row(g);
                for (size_t jj = 0; jj < Q.size(); ++jj) {
                    const unsigned v = coeff_var(i, Q[jj]);
                    size_t t;
                    if (mu_var < 0 || unsigned(mu_var) == v)
                        t = 1 + v;
                    else
                        t = tpair(std::min<unsigned>(unsigned(mu_var), v),
                                  std::max<unsigned>(unsigned(mu_var), v));
                    unsigned len = 0;
                    for (size_t x = 0; x < Q.size(); ++x)
                        if (x != jj) rest[len++] = Q[x];
                    const size_t T = minor_rank(rest.data(), len);
                    if (sw) {
                        uint64_t* dst = row + (t * sw_words * 64) / 64;
                        const uint64_t* src = kw_[T].data();
                        for (size_t w = 0; w < sw_words; ++w) dst[w] ^= src[w];
                    }
                    uint64_t key = seed_ ^ (uint64_t(t) * minor_count_ + T) * 0x2545f4914f6cdd1dULL;
                    uint64_t* proj = row + c_bits / 64;
                    for (unsigned w = 0; w < kProjWords; ++w) proj[w] ^= splitmix(key);
                }
                const size_t xbit = c_bits + kProjBits + g;
                row[xbit >> 6] |= uint64_t(1) << (xbit & 63);
                ++g;
            }
        }
    }

    BitRrefInfo info = bit_rref_inplace(a);

    // useful rows: pivot inside the projection block means the combination
    // annihilates every membership constraint with a nonzero image
    std::vector<Polynomial> falls;
    ColumnSpace cs(va, degree);
    const size_t acc_words = (cs.cols() + 63) / 64;
    std::vector<uint64_t> acc(acc_words);
    const uint64_t top_block = cs.degree_block_size(degree);
    std::vector<uint64_t> vacc((tcount * eqs_.size() + 63) / 64, 0);
    std::vector<size_t> touched;

    for (size_t col = c_bits; col < c_bits + kProjBits; ++col) {
        if (info.row_of_pivot_col[col] < 0) continue;
        const uint64_t* row = a.row(size_t(info.row_of_pivot_col[col]));

        std::fill(acc.begin(), acc.end(), 0);
        for (size_t s : touched) vacc[s >> 6] = 0;
        touched.clear();

        // decode the combination and gather its slot vector at pivot minors
        for (size_t gg = 0; gg < gens; ++gg) {
            const size_t bit = c_bits + kProjBits + gg;
            if (!((row[bit >> 6] >> (bit & 63)) & 1)) continue;
            const size_t qidx = gg % Qs.size();
            const unsigned i = unsigned((gg / Qs.size()) % r_);
            const int mu_var = int(gg / (Qs.size() * r_)) - 1;
            const auto& Q = Qs[qidx];
            for (size_t jj = 0; jj < Q.size(); ++jj) {
                const unsigned v = coeff_var(i, Q[jj]);
                size_t t;
                if (mu_var < 0 || unsigned(mu_var) == v)
                    t = 1 + v;
                else
                    t = tpair(std::min<unsigned>(unsigned(mu_var), v),
                              std::max<unsigned>(unsigned(mu_var), v));
                unsigned len = 0;
                for (size_t x = 0; x < Q.size(); ++x)
                    if (x != jj) rest[len++] = Q[x];
                const size_t T = minor_rank(rest.data(), len);
                if (row_of_minor_[T] < 0) continue;  // free minor: implied consistent
                const size_t slot = t * eqs_.size() + size_t(row_of_minor_[T]);
                vacc[slot >> 6] ^= uint64_t(1) << (slot & 63);
                touched.push_back(slot);
            }
        }
        // accumulate sum v_{t,rho} * reduce(t * P_rho)
        for (size_t s : touched) {
            if (!((vacc[s >> 6] >> (s & 63)) & 1)) continue;
            vacc[s >> 6] ^= uint64_t(1) << (s & 63);  // consume once
            const size_t t = s / eqs_.size();
            const size_t rho = s % eqs_.size();
            const Mask& tm = tmask[t];
            for (const auto& term : eqs_[rho].term_masks) {
                Mask m;
                m.w = term;
                const uint64_t cix = cs.index_of(m.united(tm));
                acc[cix >> 6] ^= uint64_t(1) << (cix & 63);
            }
        }
        // the top block must cancel; anything else signals a combination we
        // cannot certify, so it is dropped
        bool clean = true;
        for (uint64_t w = 0; w < (top_block + 63) / 64 && clean; ++w) {
            uint64_t word = acc[w];
            if (w == top_block / 64 && (top_block & 63)) word &= (uint64_t(1) << (top_block & 63)) - 1;
            if (word) clean = false;
        }
        if (!clean) continue;

        Polynomial fall(field_);
        for (size_t w = top_block / 64; w < acc_words; ++w) {
            uint64_t word = acc[w];
            if (w == top_block / 64 && (top_block & 63)) word &= ~((uint64_t(1) << (top_block & 63)) - 1);
            while (word) {
                const uint64_t cix = w * 64 + uint64_t(__builtin_ctzll(word));
                word &= word - 1;
                if (cix >= cs.cols()) break;
                auto [mask, deg] = cs.monomial_of(cix);
                (void)deg;
                Monomial mono;
                mask.for_each_bit(
                    [&](unsigned b) { mono.exps.emplace_back(uint32_t(n_support_ + b), 1); });
                fall.add_term(mono, 1);
            }
        }
        if (!fall.is_zero()) falls.push_back(std::move(fall));
    }
    return falls;
}

}  // namespace ranksyz
