#include <doctest.h>

#include "oracles.hpp"
#include "ranksyz/field.hpp"
#include "ranksyz/rng.hpp"

using namespace ranksyz;

TEST_CASE("canonical moduli") {
    SUBCASE("degree-1 extension is the field itself, alpha = 1") {
        FieldTower t = FieldTower::make(2, 1);
        CHECK(t.modulus() == std::vector<uint8_t>{1, 1});  // x + 1
        CHECK(t.alpha() == t.one());
    }
    SUBCASE("first irreducible for (2,4) is x^4+x+1") {
        // oracle: enumerate coefficient vectors with the constant digit
        // fastest and return the first irreducible
        std::vector<uint8_t> expected;
        for (unsigned enc = 1;; ++enc) {
            if (enc % 2 == 0) continue;
            std::vector<int> cand(5, 0);
            unsigned v = enc;
            for (unsigned i = 0; i < 4; ++i) {
                cand[i] = int(v & 1);
                v >>= 1;
            }
            cand[4] = 1;
            if (oracle::frobenius_irreducible(cand, 2)) {
                expected.assign(cand.begin(), cand.end());
                break;
            }
        }
        CHECK(expected == std::vector<uint8_t>{1, 1, 0, 0, 1});  // frozen: x^4 + x + 1
        FieldTower t = FieldTower::make(2, 4);
        CHECK(t.modulus() == expected);
    }
    SUBCASE("(2,25): modulus passes the Frobenius-power irreducibility oracle") {
        FieldTower t = FieldTower::make(2, 25);
        std::vector<int> f(t.modulus().begin(), t.modulus().end());
        CHECK(oracle::frobenius_irreducible(f, 2));
    }
}

TEST_CASE("extension arithmetic") {
    FieldTower t = FieldTower::make(2, 14);
    Rng rng(7);
    auto random_elem = [&] {
        std::vector<uint8_t> c(t.m());
        for (auto& v : c) v = uint8_t(rng.below(t.q()));
        return t.from_coords(std::move(c));
    };

    SUBCASE("identities and characteristic") {
        ExtElem a = random_elem();
        CHECK(t.mul(a, t.one()) == a);
        CHECK(t.add(a, a) == t.zero());  // characteristic 2
    }
    SUBCASE("alpha^m equals the schoolbook reduction of x^m") {
        std::vector<int> xm(t.m() + 1, 0);
        xm[t.m()] = 1;
        std::vector<int> mod(t.modulus().begin(), t.modulus().end());
        std::vector<int> rem = oracle::poly_mod(xm, mod, 2);
        ExtElem got = t.alpha_pow(t.m());
        for (unsigned i = 1; i <= t.m(); ++i) {
            int expect = i - 1 < rem.size() ? rem[i - 1] : 0;
            CHECK(t.coord(got, i) == expect);
        }
    }
    SUBCASE("field axioms on random triples") {
        for (int trial = 0; trial < 200; ++trial) {
            ExtElem a = random_elem(), b = random_elem(), c = random_elem();
            CHECK(t.mul(t.mul(a, b), c) == t.mul(a, t.mul(b, c)));
            CHECK(t.mul(a, t.add(b, c)) == t.add(t.mul(a, b), t.mul(a, c)));
            if (!a.is_zero()) CHECK(t.mul(a, t.inv(a)) == t.one());
        }
    }
    SUBCASE("inversion of zero rejected") { CHECK_THROWS(t.inv(t.zero())); }
}

TEST_CASE("coordinate extraction") {
    FieldTower t = FieldTower::make(2, 9);
    SUBCASE("basis element") {
        ExtElem a = t.alpha();
        CHECK(t.coord(a, 2) == 1);
        for (unsigned j = 1; j <= t.m(); ++j)
            if (j != 2) CHECK(t.coord(a, j) == 0);
    }
    SUBCASE("zero has zero coordinates") {
        for (unsigned i = 1; i <= t.m(); ++i) CHECK(t.coord(t.zero(), i) == 0);
    }
    SUBCASE("reconstruction of 1000 random elements") {
        Rng rng(3);
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<uint8_t> c(t.m());
            for (auto& v : c) v = uint8_t(rng.below(2));
            ExtElem beta = t.from_coords(c);
            ExtElem acc = t.zero();
            for (unsigned i = 1; i <= t.m(); ++i)
                acc = t.add(acc, t.mul_base(t.alpha_pow(i - 1), t.coord(beta, i)));
            CHECK(acc == beta);
        }
    }
    SUBCASE("linearity of coord") {
        Rng rng(11);
        FieldTower t3 = FieldTower::make(3, 5);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<uint8_t> cb(t3.m()), cg(t3.m());
            for (auto& v : cb) v = uint8_t(rng.below(3));
            for (auto& v : cg) v = uint8_t(rng.below(3));
            ExtElem beta = t3.from_coords(cb), gamma = t3.from_coords(cg);
            uint8_t a = uint8_t(rng.below(3));
            ExtElem lhs = t3.add(t3.mul_base(beta, a), gamma);
            for (unsigned i = 1; i <= t3.m(); ++i)
                CHECK(t3.coord(lhs, i) ==
                      t3.base().add(t3.base().mul(a, t3.coord(beta, i)), t3.coord(gamma, i)));
        }
    }
    SUBCASE("index out of range") {
        CHECK_THROWS(t.coord(t.one(), 0));
        CHECK_THROWS(t.coord(t.one(), t.m() + 1));
    }
}

TEST_CASE("non-prime base fields") {
    for (unsigned q : {4u, 8u, 9u}) {
        Gf f(q);
        // multiplicative group sanity
        for (unsigned a = 1; a < q; ++a) {
            CHECK(f.mul(uint8_t(a), f.inv(uint8_t(a))) == 1);
            CHECK(f.mul(uint8_t(a), 1) == a);
        }
        // towers over non-prime bases work
        FieldTower t(f, FieldTower::make(q, 2).modulus());
        CHECK(t.m() == 2);
    }
    CHECK_THROWS(Gf(6));
    CHECK_THROWS(Gf(11));
}

TEST_CASE("element text format round trip") {
    FieldTower t = FieldTower::make(2, 5);
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<uint8_t> c(t.m());
        for (auto& v : c) v = uint8_t(rng.below(2));
        ExtElem e = t.from_coords(c);
        CHECK(t.parse(t.to_string(e)) == e);
    }
    CHECK(t.to_string(t.alpha()) == "0,1,0,0,0");
}
