#include "ranksyz/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace ranksyz {

MatFq::MatFq(Gf field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
    if (packed()) {
        words_ = (cols + 63) / 64;
        bits_.assign(rows * words_, 0);
    } else {
        vals_.assign(rows * cols, 0);
    }
}

MatFq MatFq::identity(const Gf& f, size_t n) {
    MatFq m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void MatFq::swap_rows(size_t a, size_t b) {
    if (a == b) return;
    if (packed()) {
        std::swap_ranges(bits_.begin() + a * words_, bits_.begin() + (a + 1) * words_,
                         bits_.begin() + b * words_);
    } else {
        std::swap_ranges(vals_.begin() + a * cols_, vals_.begin() + (a + 1) * cols_,
                         vals_.begin() + b * cols_);
    }
}

void MatFq::add_scaled_row(size_t a, size_t b, uint8_t c) {
    if (c == 0) return;
    if (packed()) {
        uint64_t* ra = row_words(a);
        const uint64_t* rb = row_words(b);
        for (size_t w = 0; w < words_; ++w) ra[w] ^= rb[w];
    } else {
        uint8_t* ra = vals_.data() + a * cols_;
        const uint8_t* rb = vals_.data() + b * cols_;
        for (size_t j = 0; j < cols_; ++j) ra[j] = field_.sub(ra[j], field_.mul(c, rb[j]));
    }
}

void MatFq::scale_row(size_t a, uint8_t c) {
    if (packed()) return;  // only scalars 0/1
    uint8_t* ra = vals_.data() + a * cols_;
    for (size_t j = 0; j < cols_; ++j) ra[j] = field_.mul(ra[j], c);
}

bool MatFq::operator==(const MatFq& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_.q() != o.field_.q()) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (get(i, j) != o.get(i, j)) return false;
    return true;
}

namespace {

EchelonResult rref_packed(MatFq m) {
    const size_t rows = m.rows(), cols = m.cols(), words = m.words_per_row();
    EchelonResult res;
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
        const size_t w = col >> 6;
        const uint64_t mask = uint64_t(1) << (col & 63);
        size_t found = rows;
        for (size_t i = pivot_row; i < rows; ++i) {
            if (m.row_words(i)[w] & mask) {
                found = i;
                break;
            }
        }
        if (found == rows) continue;
        m.swap_rows(pivot_row, found);
        const uint64_t* pr = m.row_words(pivot_row);
        for (size_t i = 0; i < rows; ++i) {
            if (i == pivot_row) continue;
            uint64_t* ri = m.row_words(i);
            if (ri[w] & mask) {
                for (size_t k = w; k < words; ++k) ri[k] ^= pr[k];
            }
        }
        res.pivot_cols.push_back(col);
        ++pivot_row;
    }
    res.rank = res.pivot_cols.size();
    res.rref = std::move(m);
    return res;
}

}  // namespace

namespace detail {

EchelonResult rref_basic(const MatFq& input) {
    MatFq m = input;
    const Gf& f = m.field();
    const size_t rows = m.rows(), cols = m.cols();
    EchelonResult res;
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
        size_t found = rows;
        for (size_t i = pivot_row; i < rows; ++i) {
            if (m.get(i, col) != 0) {
                found = i;
                break;
            }
        }
        if (found == rows) continue;
        m.swap_rows(pivot_row, found);
        m.scale_row(pivot_row, f.inv(m.get(pivot_row, col)));
        for (size_t i = 0; i < rows; ++i) {
            if (i == pivot_row) continue;
            m.add_scaled_row(i, pivot_row, m.get(i, col));
        }
        res.pivot_cols.push_back(col);
        ++pivot_row;
    }
    res.rank = res.pivot_cols.size();
    res.rref = std::move(m);
    return res;
}

}  // namespace detail

EchelonResult rref(const MatFq& m) {
    return m.packed() ? rref_packed(m) : detail::rref_basic(m);
}

size_t rank_of(const MatFq& m) { return rref(m).rank; }

MatFq right_kernel(const MatFq& m) {
    EchelonResult e = rref(m);
    const Gf& f = m.field();
    const size_t cols = m.cols();
    std::vector<size_t> free_cols;
    {
        size_t p = 0;
        for (size_t c = 0; c < cols; ++c) {
            if (p < e.pivot_cols.size() && e.pivot_cols[p] == c)
                ++p;
            else
                free_cols.push_back(c);
        }
    }
    MatFq k(f, cols, free_cols.size());
    for (size_t fc = 0; fc < free_cols.size(); ++fc) {
        k.set(free_cols[fc], fc, 1);
        for (size_t p = 0; p < e.pivot_cols.size(); ++p)
            k.set(e.pivot_cols[p], fc, f.neg(e.rref.get(p, free_cols[fc])));
    }
    return k;
}

std::pair<std::vector<size_t>, MatFq> systematic_form(const MatFq& g) {
    EchelonResult e = rref(g);
    if (e.rank != g.rows()) throw std::invalid_argument("systematic_form: matrix is not of full row rank");
    const size_t cols = g.cols();
    std::vector<size_t> perm = e.pivot_cols;
    {
        size_t p = 0;
        for (size_t c = 0; c < cols; ++c) {
            if (p < e.pivot_cols.size() && e.pivot_cols[p] == c)
                ++p;
            else
                perm.push_back(c);
        }
    }
    MatFq sys(g.field(), g.rows(), cols);
    for (size_t i = 0; i < g.rows(); ++i)
        for (size_t j = 0; j < cols; ++j) sys.set(i, j, e.rref.get(i, perm[j]));
    return {std::move(perm), std::move(sys)};
}

MatFq mul(const MatFq& a, const MatFq& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("MatFq mul: dimension mismatch");
    MatFq r(a.field(), a.rows(), b.cols());
    if (a.packed()) {
        for (size_t i = 0; i < a.rows(); ++i) {
            uint64_t* ri = r.row_words(i);
            for (size_t t = 0; t < a.cols(); ++t) {
                if (a.get(i, t)) {
                    const uint64_t* bt = b.row_words(t);
                    for (size_t w = 0; w < r.words_per_row(); ++w) ri[w] ^= bt[w];
                }
            }
        }
    } else {
        const Gf& f = a.field();
        for (size_t i = 0; i < a.rows(); ++i)
            for (size_t t = 0; t < a.cols(); ++t) {
                uint8_t v = a.get(i, t);
                if (!v) continue;
                for (size_t j = 0; j < b.cols(); ++j)
                    r.set(i, j, f.add(r.get(i, j), f.mul(v, b.get(t, j))));
            }
    }
    return r;
}

MatFq transpose(const MatFq& m) {
    MatFq t(m.field(), m.cols(), m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) t.set(j, i, m.get(i, j));
    return t;
}

MatFq random_matrix(const Gf& f, size_t rows, size_t cols, Rng& rng) {
    MatFq m(f, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.set(i, j, uint8_t(rng.below(f.q())));
    return m;
}

MatFq random_full_rank(const Gf& f, size_t rows, size_t cols, Rng& rng) {
    const size_t want = std::min(rows, cols);
    for (;;) {
        MatFq m = random_matrix(f, rows, cols, rng);
        if (rank_of(m) == want) return m;
    }
}

}  // namespace ranksyz
