#include "ranksyz/elimination.hpp"

#include <stdexcept>

#include "ranksyz/field.hpp"
#include "ranksyz/threading.hpp"

namespace ranksyz {

namespace {

inline uint32_t extract_bits(const uint64_t* row, size_t start, unsigned count) {
    const size_t w = start >> 6, off = start & 63;
    uint64_t v = row[w] >> off;
    if (off + count > 64) v |= row[w + 1] << (64 - off);
    return uint32_t(v & ((uint64_t(1) << count) - 1));
}

}  // namespace

BitRrefInfo bit_rref_inplace(BitMatrix& a, unsigned panel_bits) {
    const size_t rows = a.rows(), cols = a.cols(), words = a.words();
    if (panel_bits < 1 || panel_bits > 16) panel_bits = 16;

    BitRrefInfo info;
    info.row_of_pivot_col.assign(cols, -1);
    info.pivot_col_of_row.assign(rows, -1);
    std::vector<uint8_t> is_pivot(rows, 0);

    // combination tables for the low and high byte of a panel slice
    std::vector<uint64_t> table_lo(size_t(256) * words, 0), table_hi(size_t(256) * words, 0);
    std::vector<uint8_t> is_new_pivot(rows, 0);

    for (size_t c = 0; c < cols; c += panel_bits) {
        const unsigned kb = unsigned(std::min<size_t>(panel_bits, cols - c));
        const size_t wstart = c >> 6;
        const size_t wspan = words - wstart;

        // 1. pivot hunt on panel slices; claimed rows get physically reduced
        //    against the other claimed rows so their slices stay canonical
        int32_t local_pivot_row[16];
        uint32_t local_pivot_slice[16];
        for (unsigned b = 0; b < kb; ++b) local_pivot_row[b] = -1;
        unsigned found = 0;
        for (size_t r = 0; r < rows && found < kb; ++r) {
            if (is_pivot[r]) continue;
            uint32_t s = extract_bits(a.row(r), c, kb);
            if (!s) continue;
            while (s) {
                unsigned b = unsigned(__builtin_ctz(s));
                if (local_pivot_row[b] < 0) {
                    local_pivot_row[b] = int32_t(r);
                    local_pivot_slice[b] = s;
                    ++found;
                    break;
                }
                // physically reduce row r by the claiming row
                uint64_t* rr = a.row(r) + wstart;
                const uint64_t* pr = a.row(size_t(local_pivot_row[b])) + wstart;
                for (size_t w = 0; w < wspan; ++w) rr[w] ^= pr[w];
                s ^= local_pivot_slice[b];
            }
        }
        if (!found) continue;

        // 2. clean claimed rows against each other (larger local bits first)
        for (int b = int(kb) - 1; b >= 0; --b) {
            if (local_pivot_row[b] < 0) continue;
            uint64_t* rb = a.row(size_t(local_pivot_row[b])) + wstart;
            for (int b2 = int(kb) - 1; b2 > b; --b2) {
                if (local_pivot_row[b2] < 0) continue;
                if ((extract_bits(a.row(size_t(local_pivot_row[b])), c, kb) >> b2) & 1) {
                    const uint64_t* r2 = a.row(size_t(local_pivot_row[b2])) + wstart;
                    for (size_t w = 0; w < wspan; ++w) rb[w] ^= r2[w];
                }
            }
            local_pivot_slice[b] = extract_bits(a.row(size_t(local_pivot_row[b])), c, kb);
        }

        // 3. build the combination tables over the cleaned pivot rows
        const unsigned lo_bits = std::min(kb, 8u), hi_bits = kb > 8 ? kb - 8 : 0;
        auto build = [&](std::vector<uint64_t>& table, unsigned base, unsigned nbits) {
            std::fill(table.begin(), table.begin() + (size_t(1) << nbits) * wspan, 0);
            for (uint32_t v = 1; v < (uint32_t(1) << nbits); ++v) {
                uint32_t low = v & (v - 1);
                unsigned b = unsigned(__builtin_ctz(v)) + base;
                uint64_t* dst = table.data() + size_t(v) * wspan;
                const uint64_t* src = table.data() + size_t(low) * wspan;
                if (local_pivot_row[b] >= 0) {
                    const uint64_t* pr = a.row(size_t(local_pivot_row[b])) + wstart;
                    for (size_t w = 0; w < wspan; ++w) dst[w] = src[w] ^ pr[w];
                } else {
                    for (size_t w = 0; w < wspan; ++w) dst[w] = src[w];
                }
            }
        };
        build(table_lo, 0, lo_bits);
        if (hi_bits) build(table_hi, 8, hi_bits);

        // 4. one pass clearing the panel bits of every other row
        for (unsigned b = 0; b < kb; ++b)
            if (local_pivot_row[b] >= 0) is_new_pivot[size_t(local_pivot_row[b])] = 1;
        parallel_for(0, rows, [&](size_t lo, size_t hi) {
            for (size_t r = lo; r < hi; ++r) {
                if (is_new_pivot[r]) continue;
                uint32_t s = extract_bits(a.row(r), c, kb);
                if (!s) continue;
                uint64_t* rr = a.row(r) + wstart;
                const uint64_t* t1 = table_lo.data() + size_t(s & 255) * wspan;
                if (hi_bits && (s >> 8)) {
                    const uint64_t* t2 = table_hi.data() + size_t(s >> 8) * wspan;
                    for (size_t w = 0; w < wspan; ++w) rr[w] ^= t1[w] ^ t2[w];
                } else {
                    for (size_t w = 0; w < wspan; ++w) rr[w] ^= t1[w];
                }
            }
        });

        for (unsigned b = 0; b < kb; ++b) {
            if (local_pivot_row[b] < 0) continue;
            const size_t col = c + b;
            info.row_of_pivot_col[col] = local_pivot_row[b];
            info.pivot_col_of_row[size_t(local_pivot_row[b])] = int32_t(col);
            is_pivot[size_t(local_pivot_row[b])] = 1;
            is_new_pivot[size_t(local_pivot_row[b])] = 0;
        }
    }

    for (size_t col = 0; col < cols; ++col)
        if (info.row_of_pivot_col[col] >= 0) info.pivot_cols.push_back(uint32_t(col));
    info.rank = info.pivot_cols.size();
    return info;
}

std::vector<std::vector<uint64_t>> bit_kernel(const BitMatrix& a, const BitRrefInfo& info,
                                              size_t cols_used, size_t max_vectors) {
    const size_t vwords = (cols_used + 63) / 64;
    std::vector<std::vector<uint64_t>> basis;
    for (size_t j = 0; j < cols_used && basis.size() < max_vectors; ++j) {
        if (info.row_of_pivot_col[j] >= 0) continue;
        std::vector<uint64_t> v(vwords, 0);
        v[j >> 6] |= uint64_t(1) << (j & 63);
        for (uint32_t p : info.pivot_cols) {
            if (p >= cols_used) break;
            if (a.get(size_t(info.row_of_pivot_col[p]), j)) v[p >> 6] ^= uint64_t(1) << (p & 63);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

BitRrefInfo byte_rref_inplace(ByteMatrix& a, const Gf& f) {
    const size_t rows = a.rows(), cols = a.cols();
    BitRrefInfo info;
    info.row_of_pivot_col.assign(cols, -1);
    info.pivot_col_of_row.assign(rows, -1);
    size_t pivot_row = 0;
    std::vector<size_t> order(rows);
    for (size_t i = 0; i < rows; ++i) order[i] = i;
    for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
        size_t found = rows;
        for (size_t i = pivot_row; i < rows; ++i) {
            if (a.get(order[i], col)) {
                found = i;
                break;
            }
        }
        if (found == rows) continue;
        std::swap(order[pivot_row], order[found]);
        const size_t pr = order[pivot_row];
        uint8_t inv = f.inv(a.get(pr, col));
        if (inv != 1)
            for (size_t j = col; j < cols; ++j) a.set(pr, j, f.mul(a.get(pr, j), inv));
        for (size_t i = 0; i < rows; ++i) {
            const size_t ri = order[i];
            if (ri == pr) continue;
            uint8_t c = a.get(ri, col);
            if (!c) continue;
            for (size_t j = col; j < cols; ++j)
                a.set(ri, j, f.sub(a.get(ri, j), f.mul(c, a.get(pr, j))));
        }
        info.row_of_pivot_col[col] = int32_t(pr);
        info.pivot_col_of_row[pr] = int32_t(col);
        info.pivot_cols.push_back(uint32_t(col));
        ++pivot_row;
    }
    info.rank = info.pivot_cols.size();
    return info;
}

}  // namespace ranksyz
