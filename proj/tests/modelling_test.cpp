#include <doctest.h>

#include "oracles.hpp"
#include "ranksyz/modelling.hpp"
#include "ranksyz/rng.hpp"

using namespace ranksyz;

namespace {

// first specialization compatible with the planted witness: scans pinned
// columns and block choices
struct Compat {
    Specialization spec;
    MatFq S, C;
};
Compat find_compatible(const DecodingInstance& inst, const ExtendedCode& ext) {
    const unsigned m = inst.code.tower->m(), r = inst.r;
    for (size_t col = 0; col < ext.n; ++col) {
        // default block: rows 2..r, then a few shifted variants
        for (unsigned shift = 0; shift + r <= m; ++shift) {
            Specialization spec;
            spec.pinned_col = col;
            for (unsigned i = 0; i < r - 1; ++i) spec.block_rows.push_back(2 + shift + i);
            auto sol = planted_solution(inst, ext, spec);
            if (sol) return {spec, sol->first, sol->second};
        }
    }
    REQUIRE(false);
    return {Specialization{}, MatFq{}, MatFq{}};
}

std::vector<uint8_t> point_of(const VarSpace& vs, const Specialization& spec, const MatFq& S,
                              const MatFq& C) {
    std::vector<uint8_t> point(vs.total(), 0);
    for (size_t v = 0; v < vs.n_support; ++v) {
        auto [i, j] = vs.support_coord[v];
        point[v] = S.get(size_t(i) - 1, size_t(j) - 1);
    }
    for (size_t v = 0; v < vs.n_coeff; ++v) {
        auto [i, j] = vs.coeff_coord[v];
        point[vs.n_support + v] = C.get(size_t(i) - 1, size_t(j) - 1);
    }
    return point;
}

}  // namespace

TEST_CASE("support/coefficient system") {
    SUBCASE("variable and equation counts match the table formulas") {
        DecodingInstance inst = gen_instance(2, 25, 30, 15, 2, 11);
        ExtendedCode ext = extend_code(inst);
        Specialization spec;
        spec.pinned_col = 0;
        spec.block_rows = {2};
        BilinearSystem sys = build_oj_system(ext, 2, spec);
        CHECK(sys.vars.n_support == 23);
        CHECK(sys.vars.n_coeff == 58);
        CHECK(sys.polys.size() == 350);
        DecodingInstance i2 = gen_instance(2, 14, 18, 11, 2, 11);
        BilinearSystem s2 = build_oj_system(extend_code(i2), 2, spec);
        CHECK(s2.polys.size() == 84);
    }
    SUBCASE("every polynomial vanishes on the planted solution") {
        Rng rng(5);
        for (int trial = 0; trial < 12; ++trial) {
            DecodingInstance inst = gen_instance(2, 8 + rng.below(4), 10 + rng.below(5),
                                                 3 + rng.below(3), 2 + rng.below(2), rng.u64());
            ExtendedCode ext = extend_code(inst);
            Compat c = find_compatible(inst, ext);
            BilinearSystem sys = build_oj_system(ext, inst.r, c.spec);
            std::vector<uint8_t> point = point_of(sys.vars, c.spec, c.S, c.C);
            for (const auto& p : sys.polys) CHECK(p.eval(point) == 0);
        }
    }
    SUBCASE("affine bilinear with the stated partition") {
        DecodingInstance inst = gen_instance(2, 9, 12, 5, 3, 31);
        ExtendedCode ext = extend_code(inst);
        Specialization spec;
        spec.pinned_col = 2;
        spec.block_rows = {3, 5};
        BilinearSystem sys = build_oj_system(ext, 3, spec);
        for (const auto& p : sys.polys) {
            CHECK(p.degree() <= 2);
            for (auto& [mono, cc] : p.terms()) {
                (void)cc;
                if (mono.degree() < 2) continue;
                REQUIRE(mono.exps.size() == 2);
                CHECK(sys.vars.is_support(mono.exps[0].first));
                CHECK(!sys.vars.is_support(mono.exps[1].first));
            }
        }
    }
    SUBCASE("r = 1 degenerates to a linear system in the coefficients") {
        DecodingInstance inst = gen_instance(2, 7, 9, 4, 1, 3);
        ExtendedCode ext = extend_code(inst);
        Specialization spec;
        spec.pinned_col = 1;
        BilinearSystem sys = build_oj_system(ext, 1, spec);
        CHECK(sys.vars.n_support == 0);
        for (const auto& p : sys.polys) CHECK(p.degree() <= 1);
    }
    SUBCASE("malformed specializations are rejected") {
        DecodingInstance inst = gen_instance(2, 8, 10, 4, 3, 3);
        ExtendedCode ext = extend_code(inst);
        Specialization bad;
        bad.pinned_col = 99;
        bad.block_rows = {2, 3};
        CHECK_THROWS(build_oj_system(ext, 3, bad));
        bad.pinned_col = 0;
        bad.block_rows = {1, 2};  // 1 is not allowed
        CHECK_THROWS(build_oj_system(ext, 3, bad));
        bad.block_rows = {2};  // wrong size
        CHECK_THROWS(build_oj_system(ext, 3, bad));
    }
}

TEST_CASE("field equations") {
    VarSpace vs;
    vs.n_support = 2;
    vs.support_coord = {{1, 2}, {1, 3}};
    vs.n_coeff = 1;
    vs.coeff_coord = {{1, 1}};
    SUBCASE("q = 2 gives x^2 + x") {
        auto eqs = field_equations(Gf(2), vs);
        CHECK(eqs.size() == 3);
        Polynomial expect(Gf(2));
        expect.add_term(Monomial::var(0, 2), 1);
        expect.add_term(Monomial::var(0), 1);
        CHECK(eqs[0] == expect);
    }
    SUBCASE("q = 3 gives x^3 - x") {
        auto eqs = field_equations(Gf(3), vs);
        Polynomial expect(Gf(3));
        expect.add_term(Monomial::var(1, 3), 1);
        expect.add_term(Monomial::var(1), 2);
        CHECK(eqs[1] == expect);
    }
}

TEST_CASE("kernel modelling") {
    DecodingInstance inst = gen_instance(2, 6, 8, 3, 2, 13);
    const FieldTower& t = *inst.code.tower;
    const unsigned m = 6, n = 8, k = 3, r = 2;
    BilinearSystem sys = build_ks_system(inst);
    SUBCASE("counts") {
        CHECK(sys.vars.total() == size_t(k) * m + 1 + size_t(r) * (n - r));
        CHECK(sys.polys.size() == size_t(m) * (n - r));
    }
    SUBCASE("the planted assignment satisfies the system") {
        // z selects Mat(y) minus the codeword's coordinates; K derives from
        // the kernel of Mat(e) brought to systematic form
        std::vector<uint8_t> point(sys.vars.total(), 0);
        point[0] = 1;  // z_0
        // c = sum u_j g_j: recover u by solving G^T? use coordinates of c
        // against the G-basis over F_q: c = sum_{i,j} a_{ij} alpha^{i-1} g_j
        MatExt g = inst.code.G;
        MatExt stacked(inst.code.tower, k, n);
        // solve over F_{q^m}: u with u G = c
        ExtEchelonResult e = rref(g);
        // write c in terms of rref rows: since G has full rank with pivots
        // P, u' = c at pivot positions against rref, then map back is messy;
        // instead evaluate the bilinear system on a directly constructed
        // solution: brute force over the km coefficient bits is too big, so
        // verify instead that SOME assignment exists by checking the planted
        // identity Mat(e) = Mat(y) - Mat(c) and e K-kernel algebra.
        (void)e;
        (void)stacked;
        MatFq mat_e = coordinate_matrix(t, inst.planted_error());
        MatFq kern = right_kernel(mat_e);  // n x (n - rank)
        REQUIRE(kern.cols() == n - r);
        // bring kernel to systematic top block: B * inv(top)
        MatFq top(t.base(), n - r, n - r);
        for (size_t i = 0; i < n - r; ++i)
            for (size_t j = 0; j < n - r; ++j) top.set(i, j, kern.get(i, j));
        REQUIRE(rank_of(top) == n - r);  // holds for this seed
        // solve top^T X^T = kern^T row-wise: easier: for each column find
        // the combination; use systematic_form on kern^T
        auto [perm, sys_k] = systematic_form(transpose(kern));
        for (size_t i = 0; i < perm.size(); ++i) REQUIRE(perm[i] == i);  // this seed
        // K rows are the trailing block of sys_k (columns n-r..n-1)
        for (unsigned i = 0; i < r; ++i)
            for (unsigned j = 0; j < n - r; ++j) {
                // kernel basis in systematic form: row j gives (I | K^T)?
                // sys_k is (n-r) x n with identity in front; the K variables
                // of the modelling satisfy (I_{n-r}; K) columns spanning the
                // kernel: K[i][j] = sys_k[j][n-r+i]
                point[size_t(k) * m + 1 + size_t(i) * (n - r) + j] = sys_k.get(j, n - r + i);
            }
        // z-part: coordinates of -c against the alpha^{i-1} g_j basis; solve
        // the F_q-linear system via rref over the coordinate expansion
        {
            // matrix with km columns: coordinates of alpha^{i-1} g_j
            MatFq a(t.base(), size_t(m) * n, size_t(k) * m);
            size_t col = 0;
            for (unsigned j = 0; j < k; ++j)
                for (unsigned i = 0; i < m; ++i, ++col) {
                    std::vector<ExtElem> row(n);
                    for (unsigned cc = 0; cc < n; ++cc)
                        row[cc] = t.mul(t.alpha_pow(i), inst.code.G.at(j, cc));
                    MatFq cm = coordinate_matrix(t, row);
                    for (unsigned rr = 0; rr < m; ++rr)
                        for (unsigned cc = 0; cc < n; ++cc) a.set(size_t(cc) * m + rr, col, cm.get(rr, cc));
                }
            // right-hand side: coordinates of c
            MatFq rhs(t.base(), size_t(m) * n, 1);
            MatFq cm = coordinate_matrix(t, inst.planted->codeword);
            for (unsigned rr = 0; rr < m; ++rr)
                for (unsigned cc = 0; cc < n; ++cc) rhs.set(size_t(cc) * m + rr, 0, cm.get(rr, cc));
            // solve a x = rhs
            MatFq aug(t.base(), a.rows(), a.cols() + 1);
            for (size_t i = 0; i < a.rows(); ++i) {
                for (size_t j = 0; j < a.cols(); ++j) aug.set(i, j, a.get(i, j));
                aug.set(i, a.cols(), rhs.get(i, 0));
            }
            EchelonResult er = rref(aug);
            REQUIRE(er.rank == a.cols());  // unique codeword expansion
            for (size_t p = 0; p < er.pivot_cols.size(); ++p) {
                REQUIRE(er.pivot_cols[p] < a.cols());
                point[1 + er.pivot_cols[p]] = er.rref.get(p, a.cols());  // z = -(coords), q=2
            }
        }
        for (const auto& p : sys.polys) CHECK(p.eval(point) == 0);
    }
    SUBCASE("r = n edge gives zero equations") {
        DecodingInstance tiny = gen_instance(2, 8, 4, 2, 4, 3);
        BilinearSystem s = build_ks_system(tiny);
        CHECK(s.polys.empty());
    }
}

TEST_CASE("parity-check modelling") {
    DecodingInstance inst = gen_instance(2, 7, 9, 4, 2, 23);
    BilinearSystem sys = build_syndrome_system(inst);
    const unsigned m = 7, n = 9, k = 4, r = 2;
    SUBCASE("counts") {
        CHECK(sys.vars.total() == size_t(m) * r + size_t(n) * r);
        CHECK(sys.polys.size() == size_t(m) * (n - k));
    }
    SUBCASE("planted support and coefficients satisfy it; no linear terms") {
        std::vector<uint8_t> point(sys.vars.total(), 0);
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = 0; j < r; ++j) point[size_t(i) * r + j] = inst.planted->S.get(i, j);
        for (unsigned i = 0; i < r; ++i)
            for (unsigned j = 0; j < n; ++j)
                point[size_t(m) * r + size_t(i) * n + j] = inst.planted->Cmat.get(i, j);
        for (const auto& p : sys.polys) {
            CHECK(p.eval(point) == 0);
            for (auto& [mono, c] : p.terms()) {
                (void)c;
                CHECK((mono.degree() == 0 || mono.degree() == 2));
            }
        }
    }
    SUBCASE("solution transported through a support basis change still works") {
        Rng rng(3);
        MatFq P = random_full_rank(inst.code.tower->base(), r, r, rng);
        // S' = S P, C' = P^{-1} C: evaluate with the transported pair
        MatFq SP = mul(inst.planted->S, P);
        // invert P
        MatFq aug(inst.code.tower->base(), r, 2 * r);
        for (unsigned i = 0; i < r; ++i) {
            for (unsigned j = 0; j < r; ++j) aug.set(i, j, P.get(i, j));
            aug.set(i, r + i, 1);
        }
        EchelonResult er = rref(aug);
        REQUIRE(er.rank == r);
        MatFq Pinv(inst.code.tower->base(), r, r);
        for (unsigned i = 0; i < r; ++i)
            for (unsigned j = 0; j < r; ++j) Pinv.set(i, j, er.rref.get(i, r + j));
        MatFq PC = mul(Pinv, inst.planted->Cmat);
        std::vector<uint8_t> point(sys.vars.total(), 0);
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = 0; j < r; ++j) point[size_t(i) * r + j] = SP.get(i, j);
        for (unsigned i = 0; i < r; ++i)
            for (unsigned j = 0; j < n; ++j) point[size_t(m) * r + size_t(i) * n + j] = PC.get(i, j);
        for (const auto& p : sys.polys) CHECK(p.eval(point) == 0);
    }
}

TEST_CASE("Jacobian factors as a Kronecker product") {
    Gf f2(2);
    Gf f3(3);
    SUBCASE("identity shapes") {
        auto id = [&](const Gf& f, size_t nn) {
            std::vector<std::vector<Polynomial>> m(nn, std::vector<Polynomial>(nn, Polynomial(f)));
            for (size_t i = 0; i < nn; ++i) m[i][i].add_term(Monomial::one(), 1);
            return m;
        };
        CHECK(jacobian_kronecker_check(f2, id(f2, 2), id(f2, 2), 2, 2, 100));
        CHECK(jacobian_kronecker_check(f3, id(f3, 3), id(f3, 3), 3, 3, 100));
    }
    SUBCASE("scalar case") {
        std::vector<std::vector<Polynomial>> a(1, std::vector<Polynomial>(1, Polynomial(f3)));
        std::vector<std::vector<Polynomial>> y(1, std::vector<Polynomial>(1, Polynomial(f3)));
        a[0][0].add_term(Monomial::one(), 2);
        y[0][0].add_term(Monomial::one(), 2);
        CHECK(jacobian_kronecker_check(f3, a, y, 1, 1, 100));
    }
    SUBCASE("100 random shapes up to 4x4x4, including polynomial entries") {
        Rng rng(83);
        for (int trial = 0; trial < 100; ++trial) {
            const Gf& f = trial % 2 ? f3 : f2;
            size_t ma = 1 + rng.below(4), p = 1 + rng.below(4), rr = 1 + rng.below(4),
                   nb = 1 + rng.below(4);
            auto rand_mat = [&](size_t rows, size_t cols) {
                std::vector<std::vector<Polynomial>> m(rows,
                                                       std::vector<Polynomial>(cols, Polynomial(f)));
                for (auto& row : m)
                    for (auto& e : row) {
                        e.add_term(Monomial::one(), uint8_t(rng.below(f.q())));
                        if (rng.coin())  // occasionally a polynomial entry in foreign vars
                            e.add_term(Monomial::var(uint32_t(rng.below(3))), uint8_t(1));
                    }
                return m;
            };
            CHECK(jacobian_kronecker_check(f, rand_mat(ma, p), rand_mat(rr, nb), p, rr, 500));
        }
    }
}

TEST_CASE("left-kernel vectors of the bilinear part") {
    SUBCASE("r = 1: unit vector at J") {
        DecodingInstance inst = gen_instance(2, 6, 8, 3, 1, 3);
        ExtendedCode ext = extend_code(inst);
        Specialization spec;
        spec.pinned_col = 0;
        auto v = kernel_vector_vj(ext, 1, spec, {2});
        REQUIRE(v.size() == ext.n - ext.k - 1);
        for (size_t j = 0; j < v.size(); ++j) {
            if (j == 1) {
                PolyExt one(ext.tower);
                one.add_term(Monomial::one(), ext.tower->one());
                CHECK(v[j] == one);
            } else {
                CHECK(v[j].is_zero());
            }
        }
    }
    SUBCASE("V_J annihilates the bilinear part and contracts F to the J-minor") {
        for (auto params : {std::array<unsigned, 4>{6, 6, 2, 2}, std::array<unsigned, 4>{7, 8, 3, 2}}) {
            auto [m, n, k, r] = params;
            DecodingInstance inst = gen_instance(2, m, n, k, r, 5);
            ExtendedCode ext = extend_code(inst);
            Specialization spec;
            spec.pinned_col = 0;
            for (unsigned i = 0; i < r - 1; ++i) spec.block_rows.push_back(2 + i);
            BilinearSystem sys = build_oj_system(ext, r, spec);
            VarSpace vs = sys.vars;
            auto W = oj_w_matrix(ext, r, vs, spec);
            const unsigned cols = n - k - 1;
            for (const auto& Jidx : colex_subsets(cols, r)) {
                std::vector<unsigned> J;
                for (unsigned x : Jidx) J.push_back(x + 1);
                auto v = kernel_vector_vj(ext, r, spec, J);
                // V_J . F^h = 0
                PolyExt acc(ext.tower);
                for (unsigned j = 0; j < cols; ++j)
                    acc = acc.add(v[j].mul(sys.ext_eqs[j].homogeneous_part(2)));
                CHECK(acc.is_zero());
                // V_J . F = det of the J columns of C2 - C1 R
                PolyExt full(ext.tower);
                for (unsigned j = 0; j < cols; ++j) full = full.add(v[j].mul(sys.ext_eqs[j]));
                std::vector<std::vector<PolyExt>> sub(r, std::vector<PolyExt>(r, PolyExt(ext.tower)));
                for (unsigned i = 0; i < r; ++i)
                    for (unsigned j = 0; j < r; ++j) sub[i][j] = W[i][J[j] - 1];
                PolyExt expect = oracle::leibniz_symbolic_det_ext(ext.tower, sub);
                CHECK(full == expect);
            }
        }
    }
}

TEST_CASE("planted solutions of the specialized system") {
    Rng rng(31);
    for (int trial = 0; trial < 8; ++trial) {
        DecodingInstance inst = gen_instance(2, 10, 12, 5, 3, rng.u64());
        ExtendedCode ext = extend_code(inst);
        Compat c = find_compatible(inst, ext);
        // the produced S has the pinned shape
        CHECK(c.S.get(0, 0) == 1);
        for (unsigned i = 1; i < 10; ++i) CHECK(c.S.get(i, 0) == 0);
        for (unsigned j = 1; j < 3; ++j) CHECK(c.S.get(0, j) == 0);
        for (size_t bi = 0; bi < c.spec.block_rows.size(); ++bi)
            for (unsigned j = 1; j < 3; ++j)
                CHECK(c.S.get(c.spec.block_rows[bi] - 1, j) == (bi == j - 1 ? 1 : 0));
        // C's pinned column is the unit vector
        CHECK(c.C.get(0, c.spec.pinned_col) == 1);
        for (unsigned i = 1; i < 3; ++i) CHECK(c.C.get(i, c.spec.pinned_col) == 0);
    }
}
