#pragma once

#include <cstdint>
#include <cstring>
#include <vector>

namespace ranksyz {

// Flat bit matrix used by the Macaulay eliminations. Row data is contiguous
// 64-bit words; allocation happens once up front so the big eliminations
// never reallocate.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t words() const { return words_; }
    size_t bytes() const { return data_.size() * 8; }

    uint64_t* row(size_t i) { return data_.data() + i * words_; }
    const uint64_t* row(size_t i) const { return data_.data() + i * words_; }

    bool get(size_t i, size_t j) const { return (row(i)[j >> 6] >> (j & 63)) & 1; }
    void set(size_t i, size_t j) { row(i)[j >> 6] |= uint64_t(1) << (j & 63); }
    void flip(size_t i, size_t j) { row(i)[j >> 6] ^= uint64_t(1) << (j & 63); }

    bool row_is_zero(size_t i) const {
        const uint64_t* r = row(i);
        for (size_t w = 0; w < words_; ++w)
            if (r[w]) return false;
        return true;
    }
    // first set column of row i, or -1
    long long row_leading(size_t i) const {
        const uint64_t* r = row(i);
        for (size_t w = 0; w < words_; ++w)
            if (r[w]) return (long long)(w * 64 + size_t(__builtin_ctzll(r[w])));
        return -1;
    }

private:
    size_t rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<uint64_t> data_;
};

struct BitRrefInfo {
    size_t rank = 0;
    std::vector<uint32_t> pivot_cols;       // ascending
    std::vector<int32_t> row_of_pivot_col;  // col -> row holding that pivot, or -1
    std::vector<int32_t> pivot_col_of_row;  // row -> its pivot col, or -1
};

// In-place reduced row echelon form with deterministic pivoting (leftmost
// column, topmost row). Table-assisted: panels of `panel_bits` columns are
// cleared with two 256-entry combination tables per pass, which is what
// makes the solver-scale eliminations feasible. Rows stay in place; rows of
// dependent input end up all-zero.
BitRrefInfo bit_rref_inplace(BitMatrix& a, unsigned panel_bits = 16);

// Right-kernel basis of a matrix already in rref state (one vector per free
// column among `cols_used` leading columns, each of length cols_used bits,
// packed). Stops after max_vectors.
std::vector<std::vector<uint64_t>> bit_kernel(const BitMatrix& a, const BitRrefInfo& info,
                                              size_t cols_used, size_t max_vectors = SIZE_MAX);

// Generic small-field dense elimination (byte entries); plain schoolbook,
// used by the q > 2 solver path at unit-test scale.
class ByteMatrix {
public:
    ByteMatrix() = default;
    ByteMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    uint8_t get(size_t i, size_t j) const { return data_[i * cols_ + j]; }
    void set(size_t i, size_t j, uint8_t v) { data_[i * cols_ + j] = v; }
    uint8_t* row(size_t i) { return data_.data() + i * cols_; }
    const uint8_t* row(size_t i) const { return data_.data() + i * cols_; }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<uint8_t> data_;
};

class Gf;
BitRrefInfo byte_rref_inplace(ByteMatrix& a, const Gf& field);

}  // namespace ranksyz
