#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ranksyz {

// Base field F_q for small prime powers q. Elements are uint8_t indices in
// [0, q). For non-prime q the index packs the coordinate vector over the
// prime subfield in base p (fixed inner modulus, first irreducible in the
// canonical enumeration), so arithmetic is table-driven either way.
//
// Immutable after construction; safe to share across threads.
class Gf {
public:
    using Elem = uint8_t;

    explicit Gf(unsigned q);

    unsigned q() const { return q_; }
    unsigned characteristic() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem inv(Elem a) const;  // throws on 0
    // (-1)^e as a field element
    Elem sign(long long e) const { return (e % 2 == 0) ? one() : neg(one()); }

    bool operator==(const Gf& o) const { return q_ == o.q_; }

private:
    size_t idx(Elem a, Elem b) const { return size_t(a) * q_ + b; }
    unsigned q_ = 0, p_ = 0;
    std::vector<Elem> add_, mul_, neg_, inv_;
};

// Element of F_{q^m}: coordinate vector over F_q in the basis
// (1, alpha, ..., alpha^{m-1}), ascending powers.
struct ExtElem {
    std::vector<uint8_t> coords;

    bool operator==(const ExtElem& o) const { return coords == o.coords; }
    bool operator!=(const ExtElem& o) const { return coords != o.coords; }
    bool is_zero() const {
        for (uint8_t c : coords)
            if (c) return false;
        return true;
    }
};

// F_{q^m} = F_q[x]/(modulus) with alpha the residue class of x.
// The canonical modulus (make_tower) is the first monic irreducible of
// degree m when coefficient vectors (c0,...,c_{m-1}) are enumerated with the
// constant term as the fastest-moving digit; candidates with c0 = 0 are
// divisible by x and skipped. Irreducibility is established at construction
// by trial division against every monic polynomial of degree <= m/2.
//
// Immutable after construction; all operations are pure.
class FieldTower {
public:
    // Canonical tower for q in {2,3,4,5,7,8,9}, m >= 1.
    static FieldTower make(unsigned q, unsigned m);
    // Explicit modulus (ascending coefficients, length m+1, monic). Throws if
    // the polynomial is reducible.
    FieldTower(Gf base, std::vector<uint8_t> modulus);

    const Gf& base() const { return base_; }
    unsigned q() const { return base_.q(); }
    unsigned m() const { return m_; }
    const std::vector<uint8_t>& modulus() const { return modulus_; }

    ExtElem zero() const { return ExtElem{std::vector<uint8_t>(m_, 0)}; }
    ExtElem one() const;
    ExtElem alpha() const;                     // class of x (equals 1 when m = 1)
    ExtElem alpha_pow(unsigned k) const;       // x^k reduced mod modulus
    ExtElem from_base(uint8_t a) const;        // embed F_q
    ExtElem from_coords(std::vector<uint8_t> c) const;

    ExtElem add(const ExtElem& a, const ExtElem& b) const;
    ExtElem sub(const ExtElem& a, const ExtElem& b) const;
    ExtElem neg(const ExtElem& a) const;
    ExtElem mul(const ExtElem& a, const ExtElem& b) const;
    ExtElem mul_base(const ExtElem& a, uint8_t c) const;
    ExtElem inv(const ExtElem& a) const;  // throws on 0

    // [alpha^{i-1}] beta, i in 1..m
    uint8_t coord(const ExtElem& beta, unsigned i) const;

    // "c0,c1,...,c{m-1}" textual form used by the JSON instance format
    std::string to_string(const ExtElem& e) const;
    ExtElem parse(const std::string& s) const;

private:
    void check(const ExtElem& e) const;
    Gf base_;
    unsigned m_;
    std::vector<uint8_t> modulus_;
};

// Polynomial helpers over F_q (ascending coefficient vectors, used for the
// modulus search and by tests). Leading zeros are trimmed.
namespace polyfq {
std::vector<uint8_t> mul(const Gf& f, const std::vector<uint8_t>& a, const std::vector<uint8_t>& b);
// returns remainder of a mod b (b monic)
std::vector<uint8_t> mod(const Gf& f, std::vector<uint8_t> a, const std::vector<uint8_t>& b);
bool divides(const Gf& f, const std::vector<uint8_t>& d, const std::vector<uint8_t>& a);
bool is_irreducible(const Gf& f, const std::vector<uint8_t>& a);
}  // namespace polyfq

}  // namespace ranksyz
