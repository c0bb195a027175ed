#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "ranksyz/field.hpp"
#include "ranksyz/matrix.hpp"
#include "ranksyz/rng.hpp"

namespace ranksyz {

// Dense matrix over the extension field F_{q^m}. Only used at modelling
// scale (systematic forms, parity checks, minor determinants), so plain
// element-wise elimination is enough here.
class MatExt {
public:
    MatExt() = default;
    MatExt(std::shared_ptr<const FieldTower> tower, size_t rows, size_t cols);

    static MatExt identity(std::shared_ptr<const FieldTower> tower, size_t n);

    const FieldTower& tower() const { return *tower_; }
    std::shared_ptr<const FieldTower> tower_ptr() const { return tower_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    const ExtElem& at(size_t i, size_t j) const { return elems_[i * cols_ + j]; }
    ExtElem& at(size_t i, size_t j) { return elems_[i * cols_ + j]; }

    bool operator==(const MatExt& o) const { return elems_ == o.elems_; }

private:
    std::shared_ptr<const FieldTower> tower_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<ExtElem> elems_;
};

struct ExtEchelonResult {
    MatExt rref;
    size_t rank = 0;
    std::vector<size_t> pivot_cols;
};

ExtEchelonResult rref(const MatExt& m);
size_t rank_of(const MatExt& m);
MatExt right_kernel(const MatExt& m);
std::pair<std::vector<size_t>, MatExt> systematic_form(const MatExt& g);
MatExt mul(const MatExt& a, const MatExt& b);
ExtElem det(const MatExt& m);  // square matrices, elimination-based

MatExt random_matrix(std::shared_ptr<const FieldTower> t, size_t rows, size_t cols, Rng& rng);
MatExt random_full_rank(std::shared_ptr<const FieldTower> t, size_t rows, size_t cols, Rng& rng);

// Mat(x) of a vector over F_{q^m}: m x n matrix over F_q whose column j
// holds the coordinates of x[j].
MatFq coordinate_matrix(const FieldTower& t, const std::vector<ExtElem>& x);

}  // namespace ranksyz
