#include "ranksyz/modelling.hpp"

#include <algorithm>
#include <stdexcept>

namespace ranksyz {

namespace {

void validate_spec(unsigned m, unsigned n, unsigned r, const Specialization& spec) {
    if (spec.pinned_col >= n) throw std::invalid_argument("specialization: pinned column out of range");
    if (spec.block_rows.size() != size_t(r > 0 ? r - 1 : 0))
        throw std::invalid_argument("specialization: block must have r-1 rows");
    unsigned prev = 1;
    for (unsigned row : spec.block_rows) {
        if (row < 2 || row > m || row <= prev)
            throw std::invalid_argument("specialization: block rows must be a sorted subset of {2..m}");
        prev = row;
    }
}

}  // namespace

VarSpace make_oj_varspace(unsigned m, unsigned n, unsigned r, const Specialization& spec) {
    validate_spec(m, n, r, spec);
    VarSpace vs;
    for (unsigned i = 2; i <= m; ++i) {
        if (std::binary_search(spec.block_rows.begin(), spec.block_rows.end(), i)) continue;
        for (unsigned j = 2; j <= r; ++j) vs.support_coord.emplace_back(int(i), int(j));
    }
    vs.n_support = vs.support_coord.size();
    for (unsigned t = 1; t <= r; ++t)
        for (unsigned j = 1; j <= n; ++j) {
            if (j == spec.pinned_col + 1) continue;
            vs.coeff_coord.emplace_back(int(t), int(j));
        }
    vs.n_coeff = vs.coeff_coord.size();
    return vs;
}

std::vector<std::vector<Polynomial>> oj_symbolic_S(const Gf& f, unsigned m, unsigned r,
                                                   const VarSpace& vs, const Specialization& spec) {
    std::vector<std::vector<Polynomial>> S(m, std::vector<Polynomial>(r, Polynomial(f)));
    S[0][0].add_term(Monomial::one(), 1);
    for (size_t p = 0; p < spec.block_rows.size(); ++p)
        S[spec.block_rows[p] - 1][p + 1].add_term(Monomial::one(), 1);
    for (size_t v = 0; v < vs.n_support; ++v) {
        auto [i, j] = vs.support_coord[v];
        S[i - 1][j - 1].add_term(Monomial::var(uint32_t(v)), 1);
    }
    return S;
}

std::vector<std::vector<Polynomial>> oj_symbolic_C(const Gf& f, unsigned n, unsigned r,
                                                   const VarSpace& vs, const Specialization& spec) {
    std::vector<std::vector<Polynomial>> C(r, std::vector<Polynomial>(n, Polynomial(f)));
    C[0][spec.pinned_col].add_term(Monomial::one(), 1);
    for (size_t v = 0; v < vs.n_coeff; ++v) {
        auto [t, j] = vs.coeff_coord[v];
        C[t - 1][j - 1].add_term(Monomial::var(uint32_t(vs.n_support + v)), 1);
    }
    return C;
}

Polynomial symbolic_det(const Gf& f, const std::vector<std::vector<Polynomial>>& m) {
    const size_t n = m.size();
    if (n == 0) {
        Polynomial one(f);
        one.add_term(Monomial::one(), 1);
        return one;
    }
    if (n == 1) return m[0][0];
    Polynomial det(f);
    // expand along the first row
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        minor.reserve(n - 1);
        for (size_t i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            row.reserve(n - 1);
            for (size_t jj = 0; jj < n; ++jj)
                if (jj != j) row.push_back(m[i][jj]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][j].mul(symbolic_det(f, minor)).scale(f.sign(long(j)));
        det = det.add(term);
    }
    return det;
}

std::vector<std::vector<PolyExt>> oj_w_matrix(const ExtendedCode& ext, unsigned r,
                                              const VarSpace& vs, const Specialization& spec) {
    const auto tower = ext.tower;
    const FieldTower& t = *tower;
    const unsigned n = unsigned(ext.n), k = unsigned(ext.k);
    auto C = oj_symbolic_C(t.base(), n, r, vs, spec);
    std::vector<std::vector<PolyExt>> W(r, std::vector<PolyExt>(n - k - 1, PolyExt(tower)));
    for (unsigned row = 0; row < r; ++row) {
        for (unsigned j = 0; j + k + 1 < n; ++j) {
            PolyExt w(tower);
            for (auto& [mono, c] : C[row][k + 1 + j].terms()) w.add_term(mono, t.from_base(c));
            for (unsigned s = 0; s < k + 1; ++s) {
                if (C[row][s].is_zero()) continue;
                const ExtElem coeff = t.neg(ext.R.at(s, j));
                for (auto& [mono, c] : C[row][s].terms()) w.add_term(mono, t.mul_base(coeff, c));
            }
            W[row][j] = std::move(w);
        }
    }
    return W;
}

BilinearSystem build_oj_system(const ExtendedCode& ext, unsigned r, const Specialization& spec) {
    const auto tower = ext.tower;
    const FieldTower& t = *tower;
    const unsigned m = t.m(), n = unsigned(ext.n), k = unsigned(ext.k);
    if (r < 1) throw std::invalid_argument("build_oj_system: r must be positive");

    BilinearSystem sys;
    sys.spec = spec;
    sys.vars = make_oj_varspace(m, n, r, spec);

    auto S = oj_symbolic_S(t.base(), m, r, sys.vars, spec);
    auto W = oj_w_matrix(ext, r, sys.vars, spec);

    // u[t] = sum_i alpha^{i-1} S[i][t]
    std::vector<PolyExt> u(r, PolyExt(tower));
    for (unsigned col = 0; col < r; ++col)
        for (unsigned i = 0; i < m; ++i)
            for (auto& [mono, c] : S[i][col].terms())
                u[col].add_term(mono, t.mul_base(t.alpha_pow(i), c));

    sys.ext_eqs.reserve(n - k - 1);
    for (unsigned j = 0; j + k + 1 < n; ++j) {
        PolyExt eq(tower);
        for (unsigned col = 0; col < r; ++col) eq = eq.add(u[col].mul(W[col][j]));
        sys.ext_eqs.push_back(std::move(eq));
    }
    sys.polys.reserve(size_t(m) * (n - k - 1));
    for (const auto& eq : sys.ext_eqs)
        for (auto& p : eq.split()) sys.polys.push_back(std::move(p));
    return sys;
}

std::vector<Polynomial> field_equations(const Gf& f, const VarSpace& vs) {
    std::vector<Polynomial> eqs;
    eqs.reserve(vs.total());
    for (size_t v = 0; v < vs.total(); ++v) {
        Polynomial p(f);
        p.add_term(Monomial::var(uint32_t(v), f.q()), 1);
        p.add_term(Monomial::var(uint32_t(v)), f.neg(1));
        eqs.push_back(std::move(p));
    }
    return eqs;
}

BilinearSystem build_ks_system(const DecodingInstance& inst) {
    const FieldTower& t = *inst.code.tower;
    const Gf& f = t.base();
    const unsigned m = t.m(), n = unsigned(inst.code.n), k = unsigned(inst.code.k), r = inst.r;
    const unsigned nz = k * m + 1, nk = r * (n - r);

    BilinearSystem sys;
    sys.vars.support_prefix = "z";
    sys.vars.coeff_prefix = "k";
    for (unsigned l = 0; l < nz; ++l) sys.vars.support_coord.emplace_back(int(l), -1);
    sys.vars.n_support = nz;
    for (unsigned i = 1; i <= r; ++i)
        for (unsigned j = 1; j <= n - r; ++j) sys.vars.coeff_coord.emplace_back(int(i), int(j));
    sys.vars.n_coeff = nk;

    // M_0 = Mat(y), M_{1..km} = Mat(alpha^{i-1} g_j)
    std::vector<MatFq> mats;
    mats.reserve(nz);
    mats.push_back(coordinate_matrix(t, inst.y));
    for (unsigned j = 0; j < k; ++j)
        for (unsigned i = 0; i < m; ++i) {
            std::vector<ExtElem> row(n);
            for (unsigned c = 0; c < n; ++c) row[c] = t.mul(t.alpha_pow(i), inst.code.G.at(j, c));
            mats.push_back(coordinate_matrix(t, row));
        }

    auto kvar = [&](unsigned i, unsigned j) { return uint32_t(nz + i * (n - r) + j); };
    for (unsigned a = 0; a < m; ++a)
        for (unsigned b = 0; b + r < n; ++b) {
            Polynomial eq(f);
            for (unsigned l = 0; l < nz; ++l) {
                uint8_t lin = mats[l].get(a, b);
                if (lin) eq.add_term(Monomial::var(l), lin);
                for (unsigned i = 0; i < r; ++i) {
                    uint8_t c = mats[l].get(a, n - r + i);
                    if (!c) continue;
                    eq.add_term(Monomial::var(l).mul(Monomial::var(kvar(i, b))), c);
                }
            }
            sys.polys.push_back(std::move(eq));
        }
    return sys;
}

BilinearSystem build_syndrome_system(const DecodingInstance& inst) {
    const auto tower = inst.code.tower;
    const FieldTower& t = *tower;
    const unsigned m = t.m(), n = unsigned(inst.code.n), k = unsigned(inst.code.k), r = inst.r;

    BilinearSystem sys;
    for (unsigned i = 1; i <= m; ++i)
        for (unsigned j = 1; j <= r; ++j) sys.vars.support_coord.emplace_back(int(i), int(j));
    sys.vars.n_support = size_t(m) * r;
    for (unsigned i = 1; i <= r; ++i)
        for (unsigned j = 1; j <= n; ++j) sys.vars.coeff_coord.emplace_back(int(i), int(j));
    sys.vars.n_coeff = size_t(r) * n;

    MatExt H = parity_check(inst.code);
    // syndrome s = y H^T
    std::vector<ExtElem> synd(n - k, t.zero());
    for (unsigned l = 0; l + k < n; ++l)
        for (unsigned j = 0; j < n; ++j)
            synd[l] = t.add(synd[l], t.mul(inst.y[j], H.at(l, j)));

    auto svar = [&](unsigned i, unsigned col) { return uint32_t(i * r + col); };
    auto cvar = [&](unsigned row, unsigned j) { return uint32_t(size_t(m) * r + row * n + j); };

    // u[col] = sum_i alpha^{i-1} s_{i,col};  w[row][l] = sum_j c_{row,j} H[l][j]
    for (unsigned l = 0; l + k < n; ++l) {
        PolyExt eq(tower);
        for (unsigned col = 0; col < r; ++col)
            for (unsigned i = 0; i < m; ++i)
                for (unsigned j = 0; j < n; ++j) {
                    if (H.at(l, j).is_zero()) continue;
                    ExtElem c = t.mul(t.alpha_pow(i), H.at(l, j));
                    eq.add_term(Monomial::var(svar(i, col)).mul(Monomial::var(cvar(col, j))), c);
                }
        eq.add_term(Monomial::one(), t.neg(synd[l]));
        sys.ext_eqs.push_back(std::move(eq));
    }
    for (const auto& eq : sys.ext_eqs)
        for (auto& p : eq.split()) sys.polys.push_back(std::move(p));
    return sys;
}

bool jacobian_kronecker_check(const Gf& f, const std::vector<std::vector<Polynomial>>& A,
                              const std::vector<std::vector<Polynomial>>& Y, size_t p, size_t r,
                              uint32_t x_base) {
    const size_t ma = A.size();
    if (ma == 0 || A[0].size() != p) throw std::invalid_argument("jacobian check: A must be ma x p");
    if (Y.size() != r) throw std::invalid_argument("jacobian check: Y must be r x nb");
    const size_t nb = Y[0].size();

    auto xvar_row = [&](size_t s, size_t t) { return uint32_t(x_base + s * r + t); };

    // f_{i,j} = sum_{s,t} A[i][s] x_{s,t} Y[t][j]
    std::vector<std::vector<Polynomial>> F(ma, std::vector<Polynomial>(nb, Polynomial(f)));
    for (size_t i = 0; i < ma; ++i)
        for (size_t j = 0; j < nb; ++j)
            for (size_t s = 0; s < p; ++s)
                for (size_t t = 0; t < r; ++t) {
                    Polynomial x(f);
                    x.add_term(Monomial::var(xvar_row(s, t)), 1);
                    F[i][j] = F[i][j].add(A[i][s].mul(x).mul(Y[t][j]));
                }

    // row order: equations (i, j) row-major against vec_row(X)
    for (size_t i = 0; i < ma; ++i)
        for (size_t j = 0; j < nb; ++j)
            for (size_t s = 0; s < p; ++s)
                for (size_t t = 0; t < r; ++t)
                    if (!(F[i][j].derivative(xvar_row(s, t)) == A[i][s].mul(Y[t][j]))) return false;
    // column order: equations (j, i) column-major against vec_col(X); the
    // expected entry is the same product, so inspect it transposed
    for (size_t j = 0; j < nb; ++j)
        for (size_t i = 0; i < ma; ++i)
            for (size_t t = 0; t < r; ++t)
                for (size_t s = 0; s < p; ++s)
                    if (!(F[i][j].derivative(xvar_row(s, t)) == Y[t][j].mul(A[i][s]))) return false;
    return true;
}

std::vector<PolyExt> kernel_vector_vj(const ExtendedCode& ext, unsigned r,
                                      const Specialization& spec, const std::vector<unsigned>& J) {
    if (J.size() != r) throw std::invalid_argument("kernel_vector_vj: |J| must equal r");
    const unsigned n = unsigned(ext.n), k = unsigned(ext.k), m = ext.tower->m();
    for (size_t i = 0; i < J.size(); ++i) {
        if (J[i] < 1 || J[i] > n - k - 1 || (i && J[i] <= J[i - 1]))
            throw std::invalid_argument("kernel_vector_vj: J must be a sorted subset of {1..n-k-1}");
    }
    VarSpace vs = make_oj_varspace(m, n, r, spec);
    auto W = oj_w_matrix(ext, r, vs, spec);

    std::vector<PolyExt> v(n - k - 1, PolyExt(ext.tower));
    for (size_t l = 0; l < J.size(); ++l) {
        // minor of rows 2..r on columns J \ {J[l]}
        std::vector<std::vector<PolyExt>> minor;
        minor.reserve(r - 1);
        for (unsigned row = 1; row < r; ++row) {
            std::vector<PolyExt> mr;
            mr.reserve(r - 1);
            for (size_t jj = 0; jj < J.size(); ++jj)
                if (jj != l) mr.push_back(W[row][J[jj] - 1]);
            minor.push_back(std::move(mr));
        }
        // symbolic determinant over PolyExt via Laplace on the first row
        std::function<PolyExt(const std::vector<std::vector<PolyExt>>&)> det_ext =
            [&](const std::vector<std::vector<PolyExt>>& mm) -> PolyExt {
            if (mm.empty()) {
                PolyExt one(ext.tower);
                one.add_term(Monomial::one(), ext.tower->one());
                return one;
            }
            if (mm.size() == 1) return mm[0][0];
            PolyExt acc(ext.tower);
            for (size_t j = 0; j < mm.size(); ++j) {
                if (mm[0][j].is_zero()) continue;
                std::vector<std::vector<PolyExt>> sub;
                sub.reserve(mm.size() - 1);
                for (size_t i = 1; i < mm.size(); ++i) {
                    std::vector<PolyExt> row;
                    row.reserve(mm.size() - 1);
                    for (size_t jj = 0; jj < mm.size(); ++jj)
                        if (jj != j) row.push_back(mm[i][jj]);
                    sub.push_back(std::move(row));
                }
                PolyExt term = mm[0][j].mul(det_ext(sub));
                if (j % 2) term = term.scale(ext.tower->neg(ext.tower->one()));
                acc = acc.add(term);
            }
            return acc;
        };
        PolyExt entry = det_ext(minor);
        if (l % 2) entry = entry.scale(ext.tower->neg(ext.tower->one()));  // (-1)^{l+1} with 1-based l
        v[J[l] - 1] = std::move(entry);
    }
    return v;
}

namespace {

// unique solution X of A X = B for full-column-rank A, via rref of [A | B]
std::optional<MatFq> solve_exact(const MatFq& A, const MatFq& B) {
    const Gf& f = A.field();
    MatFq aug(f, A.rows(), A.cols() + B.cols());
    for (size_t i = 0; i < A.rows(); ++i) {
        for (size_t j = 0; j < A.cols(); ++j) aug.set(i, j, A.get(i, j));
        for (size_t j = 0; j < B.cols(); ++j) aug.set(i, A.cols() + j, B.get(i, j));
    }
    EchelonResult e = rref(aug);
    // need pivots exactly on the A block
    if (e.rank < A.cols()) return std::nullopt;
    for (size_t p = 0; p < e.pivot_cols.size(); ++p)
        if (e.pivot_cols[p] >= A.cols()) return std::nullopt;  // inconsistent
    MatFq x(f, A.cols(), B.cols());
    for (size_t i = 0; i < A.cols(); ++i)
        for (size_t j = 0; j < B.cols(); ++j) x.set(i, j, e.rref.get(i, A.cols() + j));
    return x;
}

}  // namespace

std::optional<std::pair<MatFq, MatFq>> planted_solution(const DecodingInstance& inst,
                                                        const ExtendedCode& ext,
                                                        const Specialization& spec) {
    if (!inst.planted) return std::nullopt;
    const FieldTower& t = *inst.code.tower;
    const Gf& f = t.base();
    const unsigned m = t.m(), r = inst.r;
    const size_t n = ext.n;

    std::vector<ExtElem> e = inst.planted_error();
    std::vector<ExtElem> eperm(n);
    for (size_t i = 0; i < n; ++i) eperm[i] = e[ext.perm[i]];

    const ExtElem& pin = eperm[spec.pinned_col];
    if (pin.is_zero()) return std::nullopt;
    ExtElem lambda = t.inv(pin);
    std::vector<ExtElem> v(n);
    for (size_t i = 0; i < n; ++i) v[i] = t.mul(lambda, eperm[i]);

    MatFq mat = coordinate_matrix(t, v);  // m x n, column pinned_col = e_1

    // greedy column basis starting from the pinned column
    std::vector<size_t> basis_cols{spec.pinned_col};
    for (size_t c = 0; c < n && basis_cols.size() < r; ++c) {
        if (c == spec.pinned_col) continue;
        std::vector<size_t> cand = basis_cols;
        cand.push_back(c);
        MatFq sub(f, m, cand.size());
        for (size_t j = 0; j < cand.size(); ++j)
            for (unsigned i = 0; i < m; ++i) sub.set(i, j, mat.get(i, cand[j]));
        if (rank_of(sub) == cand.size()) basis_cols = std::move(cand);
    }
    if (basis_cols.size() < r) return std::nullopt;  // rank of the word below target

    MatFq S0(f, m, r);
    for (size_t j = 0; j < r; ++j)
        for (unsigned i = 0; i < m; ++i) S0.set(i, j, mat.get(i, basis_cols[j]));
    // clear the first row of columns 2..r
    for (size_t j = 1; j < r; ++j) {
        uint8_t c = S0.get(0, j);
        if (c) {
            for (unsigned i = 0; i < m; ++i) S0.set(i, j, f.sub(S0.get(i, j), f.mul(c, S0.get(i, 0))));
        }
    }
    if (r >= 2) {
        // right-multiply columns 2..r so the block rows carry the identity
        MatFq block(f, r - 1, r - 1);
        for (size_t bi = 0; bi < spec.block_rows.size(); ++bi)
            for (size_t j = 1; j < r; ++j) block.set(bi, j - 1, S0.get(spec.block_rows[bi] - 1, j));
        auto inv = solve_exact(block, MatFq::identity(f, r - 1));
        if (!inv) return std::nullopt;  // singular block
        MatFq tail(f, m, r - 1);
        for (unsigned i = 0; i < m; ++i)
            for (size_t j = 1; j < r; ++j) tail.set(i, j - 1, S0.get(i, j));
        MatFq fixed = mul(tail, *inv);
        for (unsigned i = 0; i < m; ++i)
            for (size_t j = 1; j < r; ++j) S0.set(i, j, fixed.get(i, j - 1));
    }
    auto C = solve_exact(S0, mat);
    if (!C) return std::nullopt;
    return std::make_pair(std::move(S0), std::move(*C));
}

}  // namespace ranksyz
