#include <doctest.h>

#include <algorithm>

#include "ranksyz/polynomial.hpp"
#include "ranksyz/rng.hpp"

using namespace ranksyz;

namespace {
Monomial random_monomial(Rng& rng, unsigned nvars, unsigned maxdeg, unsigned q) {
    Monomial m;
    unsigned deg = unsigned(rng.below(maxdeg + 1));
    for (unsigned i = 0; i < deg; ++i) {
        uint32_t v = uint32_t(rng.below(nvars));
        uint32_t e = 1 + uint32_t(rng.below(q - 1));
        bool merged = false;
        for (auto& [var, ex] : m.exps)
            if (var == v) {
                ex = std::min(ex + e, q - 1);
                merged = true;
            }
        if (!merged) m.exps.emplace_back(v, e);
    }
    std::sort(m.exps.begin(), m.exps.end());
    return m;
}
}  // namespace

TEST_CASE("grevlex order") {
    SUBCASE("degree dominates") {
        Monomial a = Monomial::var(5).mul(Monomial::var(6));
        Monomial b = Monomial::var(0);
        CHECK(grevlex_greater(a, b));
    }
    SUBCASE("known chain in three variables") {
        // x0 x1 > x0 x2 > x1 x2 > x0 > x1 > x2 > 1
        std::vector<Monomial> chain = {
            Monomial::var(0).mul(Monomial::var(1)), Monomial::var(0).mul(Monomial::var(2)),
            Monomial::var(1).mul(Monomial::var(2)), Monomial::var(0),
            Monomial::var(1),                       Monomial::var(2),
            Monomial::one()};
        for (size_t i = 0; i + 1 < chain.size(); ++i) {
            CHECK(grevlex_greater(chain[i], chain[i + 1]));
            CHECK(!grevlex_greater(chain[i + 1], chain[i]));
        }
    }
    SUBCASE("comparator is a strict total order on random monomials") {
        Rng rng(71);
        std::vector<Monomial> ms;
        for (int i = 0; i < 200; ++i) ms.push_back(random_monomial(rng, 6, 4, 3));
        for (int trial = 0; trial < 2000; ++trial) {
            const Monomial& a = ms[rng.below(ms.size())];
            const Monomial& b = ms[rng.below(ms.size())];
            const Monomial& c = ms[rng.below(ms.size())];
            // antisymmetry
            if (grevlex_greater(a, b)) CHECK(!grevlex_greater(b, a));
            if (!grevlex_greater(a, b) && !grevlex_greater(b, a)) CHECK(a == b);
            // transitivity
            if (grevlex_greater(a, b) && grevlex_greater(b, c)) CHECK(grevlex_greater(a, c));
            // degree compatibility
            if (a.degree() > b.degree()) CHECK(grevlex_greater(a, b));
        }
    }
}

TEST_CASE("polynomial arithmetic") {
    Gf f3(3);
    Rng rng(73);
    auto random_poly = [&](unsigned terms) {
        Polynomial p(f3);
        for (unsigned i = 0; i < terms; ++i)
            p.add_term(random_monomial(rng, 5, 3, 3), uint8_t(1 + rng.below(2)));
        return p;
    };
    SUBCASE("ring identities on random polynomials") {
        for (int trial = 0; trial < 50; ++trial) {
            Polynomial a = random_poly(4), b = random_poly(4), c = random_poly(3);
            CHECK(a.mul(b) == b.mul(a));
            CHECK(a.mul(b.add(c)) == a.mul(b).add(a.mul(c)));
            CHECK(a.sub(a).is_zero());
        }
    }
    SUBCASE("evaluation is a homomorphism") {
        for (int trial = 0; trial < 50; ++trial) {
            Polynomial a = random_poly(4), b = random_poly(4);
            std::vector<uint8_t> point(5);
            for (auto& v : point) v = uint8_t(rng.below(3));
            CHECK(a.mul(b).eval(point) == f3.mul(a.eval(point), b.eval(point)));
            CHECK(a.add(b).eval(point) == f3.add(a.eval(point), b.eval(point)));
        }
    }
    SUBCASE("field-equation reduction preserves evaluations") {
        for (int trial = 0; trial < 50; ++trial) {
            Polynomial a = random_poly(5);
            Polynomial high = a.mul(a).mul(a);  // exponents above q
            Polynomial red = high.reduce_exponents();
            for (auto& [m, c] : red.terms()) {
                (void)c;
                for (auto& [v, e] : m.exps) CHECK(e < 3);
            }
            std::vector<uint8_t> point(5);
            for (auto& v : point) v = uint8_t(rng.below(3));
            CHECK(red.eval(point) == high.eval(point));
        }
    }
    SUBCASE("derivative of products (Leibniz)") {
        for (int trial = 0; trial < 30; ++trial) {
            Polynomial a = random_poly(3), b = random_poly(3);
            for (uint32_t v = 0; v < 5; ++v) {
                Polynomial lhs = a.mul(b).derivative(v);
                Polynomial rhs = a.derivative(v).mul(b).add(a.mul(b.derivative(v)));
                CHECK(lhs == rhs);
            }
        }
    }
    SUBCASE("substitution") {
        Polynomial p(f3);
        // x0 x1 + 2 x2
        p.add_term(Monomial::var(0).mul(Monomial::var(1)), 1);
        p.add_term(Monomial::var(2), 2);
        std::vector<int16_t> assign = {2, -1, 1};
        Polynomial s = p.substitute(assign);
        Polynomial expect(f3);
        expect.add_term(Monomial::var(1), 2);
        expect.add_term(Monomial::one(), 2);
        CHECK(s == expect);
        Polynomial repl(f3);
        repl.add_term(Monomial::var(2), 1);
        repl.add_term(Monomial::one(), 1);
        Polynomial sv = p.substitute_var(1, repl);  // x1 := x2 + 1
        std::vector<uint8_t> point = {2, 0, 1};
        std::vector<uint8_t> point2 = {2, f3.add(1, 1), 1};  // x1 = x2+1 = 2
        CHECK(sv.eval(point) == p.eval(point2));
    }
}

TEST_CASE("extension-coefficient polynomials split correctly") {
    auto t = std::make_shared<const FieldTower>(FieldTower::make(2, 5));
    Rng rng(79);
    for (int trial = 0; trial < 30; ++trial) {
        PolyExt p(t);
        for (int i = 0; i < 4; ++i) {
            std::vector<uint8_t> c(t->m());
            for (auto& v : c) v = uint8_t(rng.below(2));
            p.add_term(random_monomial(rng, 4, 2, 2), t->from_coords(c));
        }
        std::vector<Polynomial> comps = p.split();
        REQUIRE(comps.size() == t->m());
        std::vector<uint8_t> point(4);
        for (auto& v : point) v = uint8_t(rng.below(2));
        ExtElem whole = p.eval(point);
        for (unsigned i = 1; i <= t->m(); ++i) CHECK(comps[i - 1].eval(point) == t->coord(whole, i));
    }
}
