#pragma once

// Internal packed-monomial machinery shared by the Macaulay solver and the
// structured syzygy pass. Squarefree monomials over at most 192 variables
// are bitmasks; grevlex-descending column order within a degree block is
// colex-ascending on the variable index sets, so column indices come from
// the combinatorial number system instead of hash lookups.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ranksyz/polynomial.hpp"

namespace ranksyz::xl {

constexpr unsigned kMaxPackedVars = 192;

struct Mask {
    std::array<uint64_t, 3> w{0, 0, 0};

    bool operator==(const Mask& o) const { return w == o.w; }
    unsigned degree() const {
        return unsigned(__builtin_popcountll(w[0]) + __builtin_popcountll(w[1]) +
                        __builtin_popcountll(w[2]));
    }
    bool test(unsigned b) const { return (w[b >> 6] >> (b & 63)) & 1; }
    void set(unsigned b) { w[b >> 6] |= uint64_t(1) << (b & 63); }
    Mask united(const Mask& o) const {
        Mask r;
        for (int i = 0; i < 3; ++i) r.w[i] = w[i] | o.w[i];
        return r;
    }
    bool intersects(const Mask& o) const {
        return (w[0] & o.w[0]) || (w[1] & o.w[1]) || (w[2] & o.w[2]);
    }
    template <typename Fn>
    void for_each_bit(Fn&& fn) const {
        for (int i = 0; i < 3; ++i) {
            uint64_t v = w[i];
            while (v) {
                fn(unsigned(i * 64 + __builtin_ctzll(v)));
                v &= v - 1;
            }
        }
    }
};

// binomial table C(n, k) for n <= kMaxPackedVars, k <= 9
class BinomTable {
public:
    BinomTable() {
        for (unsigned n = 0; n <= kMaxPackedVars; ++n) {
            c_[n][0] = 1;
            for (unsigned k = 1; k <= 9; ++k)
                c_[n][k] = (k > n || n == 0) ? 0 : c_[n - 1][k - 1] + c_[n - 1][k];
        }
    }
    uint64_t operator()(unsigned n, unsigned k) const { return k <= 9 ? c_[n][k] : 0; }

private:
    uint64_t c_[kMaxPackedVars + 1][10] = {};
};

const BinomTable& binom_table();

// Column indexing for squarefree monomials of degree <= d over v variables,
// ordered grevlex-descending: degree-d block first, constant column last.
class ColumnSpace {
public:
    ColumnSpace() = default;
    ColumnSpace(unsigned nvars, unsigned degree) : v_(nvars), d_(degree) {
        if (nvars > kMaxPackedVars) throw std::length_error("ColumnSpace: too many variables");
        if (degree > 8) throw std::length_error("ColumnSpace: degree above packed limit");
        offset_.assign(d_ + 1, 0);
        const BinomTable& bt = binom_table();
        uint64_t acc = 0;
        for (int deg = int(d_); deg >= 0; --deg) {
            offset_[size_t(deg)] = acc;
            acc += bt(v_, unsigned(deg));
        }
        cols_ = acc;
    }

    unsigned nvars() const { return v_; }
    unsigned degree() const { return d_; }
    uint64_t cols() const { return cols_; }
    uint64_t degree_block_start(unsigned deg) const { return offset_[deg]; }
    uint64_t degree_block_size(unsigned deg) const { return binom_table()(v_, deg); }

    uint64_t index_of(const Mask& m) const {
        const BinomTable& bt = binom_table();
        uint64_t rank = 0;
        unsigned i = 0;
        m.for_each_bit([&](unsigned b) { rank += bt(b, ++i); });
        return offset_[i] + rank;
    }

    // inverse of index_of
    std::pair<Mask, unsigned> monomial_of(uint64_t col) const {
        unsigned deg = d_;
        while (deg > 0 && col >= offset_[deg - 1]) --deg;
        // now col >= offset_[deg] (blocks descend by degree)
        uint64_t rank = col - offset_[deg];
        Mask m;
        const BinomTable& bt = binom_table();
        for (unsigned i = deg; i >= 1; --i) {
            unsigned p = i - 1;
            while (p + 1 <= v_ && bt(p + 1, i) <= rank) ++p;
            rank -= bt(p, i);
            m.set(p);
        }
        return {m, deg};
    }

private:
    unsigned v_ = 0, d_ = 0;
    std::vector<uint64_t> offset_;
    uint64_t cols_ = 0;
};

struct PackedTerm {
    Mask mask;
    unsigned degree;
};

struct PackedPoly {
    std::vector<PackedTerm> terms;
    unsigned degree = 0;
};

// positions[global_var] = packed bit position, or -1 if not participating
PackedPoly pack_poly(const Polynomial& p, const std::vector<int>& position);

// rebuild a Polynomial over global variables from a packed bit row
Polynomial unpack_row(const Gf& f, const uint64_t* row, const ColumnSpace& cs,
                      const std::vector<uint32_t>& global_of_position);

}  // namespace ranksyz::xl
