#include <doctest.h>

#include "oracles.hpp"
#include "ranksyz/codes.hpp"
#include "ranksyz/rng.hpp"

using namespace ranksyz;

TEST_CASE("rank weight") {
    auto t = std::make_shared<const FieldTower>(FieldTower::make(2, 8));
    SUBCASE("zero vector") {
        std::vector<ExtElem> z(5, t->zero());
        CHECK(rank_weight(*t, z) == 0);
    }
    SUBCASE("constant nonzero vector has weight 1") {
        ExtElem beta = t->alpha_pow(3);
        std::vector<ExtElem> v(6, beta);
        CHECK(rank_weight(*t, v) == 1);
    }
    SUBCASE("planted error has weight exactly r, via the naive rank oracle") {
        Rng rng(3);
        for (unsigned r : {1u, 2u, 3u}) {
            MatFq S = random_full_rank(t->base(), 8, r, rng);
            MatFq C = random_full_rank(t->base(), r, 10, rng);
            std::vector<ExtElem> e = error_from_support(*t, S, C);
            CHECK(rank_weight(*t, e) == r);
            MatFq mat = coordinate_matrix(*t, e);
            std::vector<std::vector<int>> ints(mat.rows(), std::vector<int>(mat.cols()));
            for (size_t i = 0; i < mat.rows(); ++i)
                for (size_t j = 0; j < mat.cols(); ++j) ints[i][j] = mat.get(i, j);
            CHECK(oracle::naive_rank(ints, 2) == r);
        }
    }
    SUBCASE("scaling invariance and subadditivity") {
        Rng rng(9);
        for (int trial = 0; trial < 30; ++trial) {
            MatFq S = random_full_rank(t->base(), 8, 2, rng);
            MatFq C = random_full_rank(t->base(), 2, 9, rng);
            std::vector<ExtElem> x = error_from_support(*t, S, C);
            std::vector<uint8_t> lc(t->m());
            for (auto& v : lc) v = uint8_t(rng.below(2));
            ExtElem lambda = t->from_coords(lc);
            if (lambda.is_zero()) continue;
            std::vector<ExtElem> lx(x.size());
            for (size_t i = 0; i < x.size(); ++i) lx[i] = t->mul(lambda, x[i]);
            CHECK(rank_weight(*t, lx) == rank_weight(*t, x));

            MatFq S2 = random_full_rank(t->base(), 8, 3, rng);
            MatFq C2 = random_full_rank(t->base(), 3, 9, rng);
            std::vector<ExtElem> y = error_from_support(*t, S2, C2);
            CHECK(rank_weight(*t, add_vectors(*t, x, y)) <=
                  rank_weight(*t, x) + rank_weight(*t, y));
        }
    }
}

TEST_CASE("instance generation") {
    SUBCASE("counts and planted consistency") {
        DecodingInstance inst = gen_instance(2, 14, 18, 11, 2, 7);
        CHECK(inst.code.k == 11);
        CHECK(inst.code.n == 18);
        CHECK(rank_of(inst.code.G) == 11);
        REQUIRE(inst.planted.has_value());
        std::vector<ExtElem> e = inst.planted_error();
        CHECK(rank_weight(*inst.code.tower, e) == 2);
        // y - c = e
        std::vector<ExtElem> diff = sub_vectors(*inst.code.tower, inst.y, inst.planted->codeword);
        CHECK(diff == e);
        CHECK(in_code(inst.code, inst.planted->codeword));
    }
    SUBCASE("determinism under seed") {
        DecodingInstance a = gen_instance(2, 10, 12, 5, 2, 99);
        DecodingInstance b = gen_instance(2, 10, 12, 5, 2, 99);
        CHECK(instance_to_json(a) == instance_to_json(b));
        DecodingInstance c = gen_instance(2, 10, 12, 5, 2, 100);
        CHECK(instance_to_json(a) != instance_to_json(c));
    }
    SUBCASE("precondition violations") {
        CHECK_THROWS(gen_instance(2, 10, 12, 5, 0, 1));   // r = 0
        CHECK_THROWS(gen_instance(2, 4, 12, 5, 5, 1));    // r > min(m, n)
        CHECK_THROWS(gen_instance(2, 10, 12, 12, 2, 1));  // k >= n
    }
    SUBCASE("unique-decoding warning fires at the GV radius") {
        CHECK(rank_gv_radius(14, 18, 12) == 2);
        CHECK(gen_instance(2, 14, 18, 12, 3, 1).gv_warning);   // above
        CHECK(!gen_instance(2, 14, 18, 11, 2, 1).gv_warning);  // radius 3, r = 2
    }
    SUBCASE("json round trip") {
        DecodingInstance inst = gen_instance(2, 9, 11, 4, 3, 5);
        DecodingInstance back = instance_from_json(instance_to_json(inst));
        CHECK(instance_to_json(back) == instance_to_json(inst));
        CHECK(back.y == inst.y);
    }
}

TEST_CASE("extended code") {
    Rng rng(13);
    SUBCASE("parity duality and shape") {
        DecodingInstance inst = gen_instance(2, 14, 18, 8, 3, 21);
        ExtendedCode ext = extend_code(inst);
        CHECK(ext.Htilde.rows() == 18 - 8 - 1);
        MatExt prod = mul(ext.Gtilde, [&] {
            // H~^T
            MatExt ht(ext.tower, ext.n, ext.Htilde.rows());
            for (size_t i = 0; i < ext.Htilde.rows(); ++i)
                for (size_t j = 0; j < ext.n; ++j) ht.at(j, i) = ext.Htilde.at(i, j);
            return ht;
        }());
        for (size_t i = 0; i < prod.rows(); ++i)
            for (size_t j = 0; j < prod.cols(); ++j) CHECK(prod.at(i, j).is_zero());
    }
    SUBCASE("the planted error satisfies the parity checks after permutation") {
        for (uint64_t seed : {1, 2, 3, 4, 5}) {
            DecodingInstance inst = gen_instance(2, 12, 15, 7, 2, seed);
            ExtendedCode ext = extend_code(inst);
            const FieldTower& t = *inst.code.tower;
            std::vector<ExtElem> e = inst.planted_error();
            std::vector<ExtElem> eperm(ext.n);
            for (size_t i = 0; i < ext.n; ++i) eperm[i] = e[ext.perm[i]];
            for (size_t l = 0; l < ext.Htilde.rows(); ++l) {
                ExtElem acc = t.zero();
                for (size_t j = 0; j < ext.n; ++j)
                    acc = t.add(acc, t.mul(eperm[j], ext.Htilde.at(l, j)));
                CHECK(acc.is_zero());
            }
        }
    }
    SUBCASE("y in the code is rejected") {
        DecodingInstance inst = gen_instance(2, 8, 10, 4, 2, 3);
        inst.y = inst.planted->codeword;  // strip the error
        CHECK_THROWS(extend_code(inst));
    }
    SUBCASE("parity check of the base code") {
        DecodingInstance inst = gen_instance(2, 9, 12, 5, 2, 17);
        MatExt h = parity_check(inst.code);
        CHECK(h.rows() == 12 - 5);
        const FieldTower& t = *inst.code.tower;
        for (size_t l = 0; l < h.rows(); ++l) {
            ExtElem acc = t.zero();
            for (size_t j = 0; j < inst.code.n; ++j)
                acc = t.add(acc, t.mul(inst.planted->codeword[j], h.at(l, j)));
            CHECK(acc.is_zero());
        }
    }
    (void)rng;
}
