#include "ranksyz/ext_matrix.hpp"

#include <stdexcept>

namespace ranksyz {

MatExt::MatExt(std::shared_ptr<const FieldTower> tower, size_t rows, size_t cols)
    : tower_(std::move(tower)), rows_(rows), cols_(cols) {
    elems_.assign(rows * cols, tower_->zero());
}

MatExt MatExt::identity(std::shared_ptr<const FieldTower> tower, size_t n) {
    MatExt m(tower, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = m.tower().one();
    return m;
}

ExtEchelonResult rref(const MatExt& input) {
    MatExt m = input;
    const FieldTower& t = m.tower();
    const size_t rows = m.rows(), cols = m.cols();
    ExtEchelonResult res;
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
        size_t found = rows;
        for (size_t i = pivot_row; i < rows; ++i) {
            if (!m.at(i, col).is_zero()) {
                found = i;
                break;
            }
        }
        if (found == rows) continue;
        if (found != pivot_row)
            for (size_t j = 0; j < cols; ++j) std::swap(m.at(pivot_row, j), m.at(found, j));
        ExtElem piv_inv = t.inv(m.at(pivot_row, col));
        for (size_t j = col; j < cols; ++j) m.at(pivot_row, j) = t.mul(m.at(pivot_row, j), piv_inv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == pivot_row) continue;
            ExtElem c = m.at(i, col);
            if (c.is_zero()) continue;
            for (size_t j = col; j < cols; ++j)
                m.at(i, j) = t.sub(m.at(i, j), t.mul(c, m.at(pivot_row, j)));
        }
        res.pivot_cols.push_back(col);
        ++pivot_row;
    }
    res.rank = res.pivot_cols.size();
    res.rref = std::move(m);
    return res;
}

size_t rank_of(const MatExt& m) { return rref(m).rank; }

MatExt right_kernel(const MatExt& m) {
    ExtEchelonResult e = rref(m);
    const FieldTower& t = m.tower();
    const size_t cols = m.cols();
    std::vector<size_t> free_cols;
    size_t p = 0;
    for (size_t c = 0; c < cols; ++c) {
        if (p < e.pivot_cols.size() && e.pivot_cols[p] == c)
            ++p;
        else
            free_cols.push_back(c);
    }
    MatExt k(m.tower_ptr(), cols, free_cols.size());
    for (size_t fc = 0; fc < free_cols.size(); ++fc) {
        k.at(free_cols[fc], fc) = t.one();
        for (size_t i = 0; i < e.pivot_cols.size(); ++i)
            k.at(e.pivot_cols[i], fc) = t.neg(e.rref.at(i, free_cols[fc]));
    }
    return k;
}

std::pair<std::vector<size_t>, MatExt> systematic_form(const MatExt& g) {
    ExtEchelonResult e = rref(g);
    if (e.rank != g.rows())
        throw std::invalid_argument("systematic_form: matrix is not of full row rank");
    const size_t cols = g.cols();
    std::vector<size_t> perm = e.pivot_cols;
    size_t p = 0;
    for (size_t c = 0; c < cols; ++c) {
        if (p < e.pivot_cols.size() && e.pivot_cols[p] == c)
            ++p;
        else
            perm.push_back(c);
    }
    MatExt sys(g.tower_ptr(), g.rows(), cols);
    for (size_t i = 0; i < g.rows(); ++i)
        for (size_t j = 0; j < cols; ++j) sys.at(i, j) = e.rref.at(i, perm[j]);
    return {std::move(perm), std::move(sys)};
}

MatExt mul(const MatExt& a, const MatExt& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("MatExt mul: dimension mismatch");
    const FieldTower& t = a.tower();
    MatExt r(a.tower_ptr(), a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            const ExtElem& v = a.at(i, k);
            if (v.is_zero()) continue;
            for (size_t j = 0; j < b.cols(); ++j)
                r.at(i, j) = t.add(r.at(i, j), t.mul(v, b.at(k, j)));
        }
    return r;
}

ExtElem det(const MatExt& input) {
    if (input.rows() != input.cols()) throw std::invalid_argument("det: matrix not square");
    MatExt m = input;
    const FieldTower& t = m.tower();
    const size_t n = m.rows();
    ExtElem d = t.one();
    for (size_t col = 0; col < n; ++col) {
        size_t found = n;
        for (size_t i = col; i < n; ++i) {
            if (!m.at(i, col).is_zero()) {
                found = i;
                break;
            }
        }
        if (found == n) return t.zero();
        if (found != col) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(col, j), m.at(found, j));
            d = t.neg(d);
        }
        d = t.mul(d, m.at(col, col));
        ExtElem piv_inv = t.inv(m.at(col, col));
        for (size_t i = col + 1; i < n; ++i) {
            ExtElem c = t.mul(m.at(i, col), piv_inv);
            if (c.is_zero()) continue;
            for (size_t j = col; j < n; ++j)
                m.at(i, j) = t.sub(m.at(i, j), t.mul(c, m.at(col, j)));
        }
    }
    return d;
}

MatExt random_matrix(std::shared_ptr<const FieldTower> t, size_t rows, size_t cols, Rng& rng) {
    MatExt m(t, rows, cols);
    const unsigned q = m.tower().q(), mm = m.tower().m();
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            std::vector<uint8_t> c(mm);
            for (auto& v : c) v = uint8_t(rng.below(q));
            m.at(i, j) = ExtElem{std::move(c)};
        }
    return m;
}

MatExt random_full_rank(std::shared_ptr<const FieldTower> t, size_t rows, size_t cols, Rng& rng) {
    const size_t want = std::min(rows, cols);
    for (;;) {
        MatExt m = random_matrix(t, rows, cols, rng);
        if (rank_of(m) == want) return m;
    }
}

MatFq coordinate_matrix(const FieldTower& t, const std::vector<ExtElem>& x) {
    MatFq m(t.base(), t.m(), x.size());
    for (size_t j = 0; j < x.size(); ++j)
        for (unsigned i = 1; i <= t.m(); ++i) m.set(i - 1, j, t.coord(x[j], i));
    return m;
}

}  // namespace ranksyz
