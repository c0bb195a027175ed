#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ranksyz/field.hpp"
#include "ranksyz/rng.hpp"

namespace ranksyz {

// Dense matrix over F_q. Rows are packed 64 entries per word when q = 2;
// otherwise entries are stored as bytes and arithmetic goes through Gf
// tables. Matrices are plain values; operations never share mutable state,
// so distinct matrices can be processed concurrently.
class MatFq {
public:
    MatFq() : field_(2) {}
    MatFq(Gf field, size_t rows, size_t cols);

    static MatFq identity(const Gf& f, size_t n);

    const Gf& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool packed() const { return field_.q() == 2; }
    size_t words_per_row() const { return words_; }

    uint8_t get(size_t i, size_t j) const {
        return packed() ? uint8_t((bits_[i * words_ + (j >> 6)] >> (j & 63)) & 1)
                        : vals_[i * cols_ + j];
    }
    void set(size_t i, size_t j, uint8_t v) {
        if (packed()) {
            uint64_t& w = bits_[i * words_ + (j >> 6)];
            const uint64_t mask = uint64_t(1) << (j & 63);
            w = v ? (w | mask) : (w & ~mask);
        } else {
            vals_[i * cols_ + j] = v;
        }
    }

    uint64_t* row_words(size_t i) { return bits_.data() + i * words_; }
    const uint64_t* row_words(size_t i) const { return bits_.data() + i * words_; }

    void swap_rows(size_t a, size_t b);
    // row a -= c * row b  (xor when q = 2)
    void add_scaled_row(size_t a, size_t b, uint8_t c);
    void scale_row(size_t a, uint8_t c);

    bool operator==(const MatFq& o) const;

private:
    Gf field_;
    size_t rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<uint64_t> bits_;
    std::vector<uint8_t> vals_;
};

struct EchelonResult {
    MatFq rref;
    size_t rank = 0;
    std::vector<size_t> pivot_cols;  // ascending
};

// Reduced row echelon form with deterministic pivoting (leftmost column,
// topmost remaining row). Dispatches to the word-XOR path for q = 2.
EchelonResult rref(const MatFq& m);

namespace detail {
// Scalar elimination through the element accessors, any q. Exists so the
// bit-packed path can be checked against it entrywise.
EchelonResult rref_basic(const MatFq& m);
}  // namespace detail

size_t rank_of(const MatFq& m);

// Basis of { x : M x = 0 } as columns; column count = cols - rank.
MatFq right_kernel(const MatFq& m);

// Column permutation and systematic generator (I | R) spanning the same row
// space as g (after permuting coordinates). perm[i] is the original column
// shown at position i; perm is the identity whenever the leading block is
// already invertible. Throws if g is not of full row rank.
std::pair<std::vector<size_t>, MatFq> systematic_form(const MatFq& g);

MatFq mul(const MatFq& a, const MatFq& b);
MatFq transpose(const MatFq& m);

MatFq random_matrix(const Gf& f, size_t rows, size_t cols, Rng& rng);
// rejection-sampled uniform full-rank matrix, rank = min(rows, cols)
MatFq random_full_rank(const Gf& f, size_t rows, size_t cols, Rng& rng);

}  // namespace ranksyz
