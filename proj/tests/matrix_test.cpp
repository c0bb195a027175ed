#include <doctest.h>

#include "oracles.hpp"
#include "ranksyz/ext_matrix.hpp"
#include "ranksyz/matrix.hpp"
#include "ranksyz/rng.hpp"

using namespace ranksyz;

namespace {
std::vector<std::vector<int>> to_ints(const MatFq& m) {
    std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out[i][j] = m.get(i, j);
    return out;
}
}  // namespace

TEST_CASE("rref basics") {
    Gf f2(2);
    SUBCASE("identity maps to itself") {
        MatFq id = MatFq::identity(f2, 7);
        EchelonResult e = rref(id);
        CHECK(e.rank == 7);
        CHECK(e.rref == id);
    }
    SUBCASE("zero matrix") {
        MatFq z(f2, 4, 9);
        EchelonResult e = rref(z);
        CHECK(e.rank == 0);
        CHECK(e.rref == z);
    }
    SUBCASE("rank agrees with the naive oracle") {
        Rng rng(17);
        for (int trial = 0; trial < 25; ++trial) {
            MatFq m = random_matrix(f2, 20, 30, rng);
            CHECK(rref(m).rank == oracle::naive_rank(to_ints(m), 2));
        }
        Gf f3(3);
        for (int trial = 0; trial < 25; ++trial) {
            MatFq m = random_matrix(f3, 12, 17, rng);
            CHECK(rref(m).rank == oracle::naive_rank(to_ints(m), 3));
        }
    }
    SUBCASE("idempotence") {
        Rng rng(23);
        for (int trial = 0; trial < 20; ++trial) {
            MatFq m = random_matrix(f2, 15, 21, rng);
            EchelonResult e = rref(m);
            CHECK(rref(e.rref).rref == e.rref);
        }
    }
    SUBCASE("rank of transpose") {
        Rng rng(29);
        for (unsigned q : {2u, 3u, 5u}) {
            Gf f(q);
            for (int trial = 0; trial < 10; ++trial) {
                MatFq m = random_matrix(f, 14, 9, rng);
                CHECK(rank_of(m) == rank_of(transpose(m)));
            }
        }
    }
}

TEST_CASE("bit-packed path agrees with the scalar path") {
    Gf f2(2);
    Rng rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        size_t rows = 1 + rng.below(trial < 480 ? 40 : 200);
        size_t cols = 1 + rng.below(trial < 480 ? 60 : 300);
        MatFq m = random_matrix(f2, rows, cols, rng);
        EchelonResult fast = rref(m);
        EchelonResult slow = detail::rref_basic(m);
        CHECK(fast.rank == slow.rank);
        CHECK(fast.pivot_cols == slow.pivot_cols);
        CHECK(fast.rref == slow.rref);
    }
}

TEST_CASE("right kernel") {
    Gf f2(2);
    SUBCASE("identity has empty kernel") {
        CHECK(right_kernel(MatFq::identity(f2, 5)).cols() == 0);
    }
    SUBCASE("zero matrix has full kernel") {
        MatFq z(f2, 3, 6);
        MatFq k = right_kernel(z);
        CHECK(k.cols() == 6);
        CHECK(k == MatFq::identity(f2, 6));
    }
    SUBCASE("random rank-5 5x8: kernel of dimension 3 with M K = 0") {
        Rng rng(37);
        MatFq m = random_full_rank(f2, 5, 8, rng);
        MatFq k = right_kernel(m);
        CHECK(k.cols() == 3);
        CHECK(rank_of(k) == 3);
        MatFq prod = mul(m, k);
        for (size_t i = 0; i < prod.rows(); ++i)
            for (size_t j = 0; j < prod.cols(); ++j) CHECK(prod.get(i, j) == 0);
    }
    SUBCASE("dimension theorem over several fields") {
        Rng rng(41);
        for (unsigned q : {2u, 3u, 4u}) {
            Gf f(q);
            for (int trial = 0; trial < 10; ++trial) {
                MatFq m = random_matrix(f, 7, 11, rng);
                CHECK(rank_of(m) + right_kernel(m).cols() == m.cols());
            }
        }
    }
}

TEST_CASE("systematic form") {
    Gf f2(2);
    Rng rng(43);
    SUBCASE("already systematic input is untouched") {
        MatFq g(f2, 3, 7);
        for (size_t i = 0; i < 3; ++i) g.set(i, i, 1);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 3; j < 7; ++j) g.set(i, j, uint8_t(rng.below(2)));
        auto [perm, sys] = systematic_form(g);
        for (size_t i = 0; i < perm.size(); ++i) CHECK(perm[i] == i);
        CHECK(sys == g);
    }
    SUBCASE("row space preserved up to the permutation") {
        for (int trial = 0; trial < 20; ++trial) {
            MatFq g = random_full_rank(f2, 4, 9, rng);
            auto [perm, sys] = systematic_form(g);
            // permute g's columns and check mutual containment by ranks
            MatFq gp(f2, 4, 9);
            for (size_t i = 0; i < 4; ++i)
                for (size_t j = 0; j < 9; ++j) gp.set(i, j, g.get(i, perm[j]));
            MatFq stacked(f2, 8, 9);
            for (size_t i = 0; i < 4; ++i)
                for (size_t j = 0; j < 9; ++j) {
                    stacked.set(i, j, gp.get(i, j));
                    stacked.set(i + 4, j, sys.get(i, j));
                }
            CHECK(rank_of(stacked) == 4);
            // identity block in front
            for (size_t i = 0; i < 4; ++i)
                for (size_t j = 0; j < 4; ++j) CHECK(sys.get(i, j) == (i == j ? 1 : 0));
        }
    }
    SUBCASE("rank-deficient input rejected") {
        MatFq g(f2, 2, 5);
        g.set(0, 1, 1);
        g.set(1, 1, 1);  // equal rows
        CHECK_THROWS(systematic_form(g));
    }
}

TEST_CASE("extension-field matrices") {
    auto t = std::make_shared<const FieldTower>(FieldTower::make(2, 6));
    Rng rng(47);
    SUBCASE("rref and kernel dimensions") {
        for (int trial = 0; trial < 10; ++trial) {
            MatExt m = random_matrix(t, 4, 7, rng);
            ExtEchelonResult e = rref(m);
            MatExt k = right_kernel(m);
            CHECK(e.rank + k.cols() == m.cols());
            MatExt prod = mul(m, k);
            for (size_t i = 0; i < prod.rows(); ++i)
                for (size_t j = 0; j < prod.cols(); ++j) CHECK(prod.at(i, j).is_zero());
        }
    }
    SUBCASE("determinant multiplicativity") {
        for (int trial = 0; trial < 10; ++trial) {
            MatExt a = random_matrix(t, 3, 3, rng), b = random_matrix(t, 3, 3, rng);
            CHECK(det(mul(a, b)) == t->mul(det(a), det(b)));
        }
    }
}
