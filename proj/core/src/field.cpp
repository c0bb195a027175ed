#include "ranksyz/field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ranksyz {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// digits of v in base p, length e
std::vector<uint8_t> digits(unsigned v, unsigned p, unsigned e) {
    std::vector<uint8_t> d(e);
    for (unsigned i = 0; i < e; ++i) {
        d[i] = uint8_t(v % p);
        v /= p;
    }
    return d;
}

unsigned pack(const std::vector<uint8_t>& d, unsigned p) {
    unsigned v = 0;
    for (size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

}  // namespace

Gf::Gf(unsigned q) : q_(q) {
    static const unsigned supported[] = {2, 3, 4, 5, 7, 8, 9};
    if (std::find(std::begin(supported), std::end(supported), q) == std::end(supported))
        throw std::invalid_argument("Gf: unsupported field order " + std::to_string(q));

    unsigned p = q, e = 1;
    if (!is_prime(q)) {
        p = (q == 9) ? 3 : 2;
        e = 0;
        for (unsigned t = q; t > 1; t /= p) ++e;
    }
    p_ = p;

    add_.resize(size_t(q) * q);
    mul_.resize(size_t(q) * q);
    neg_.resize(q);
    inv_.assign(q, 0);

    if (e == 1) {
        for (unsigned a = 0; a < q; ++a) {
            neg_[a] = uint8_t((q - a) % q);
            for (unsigned b = 0; b < q; ++b) {
                add_[idx(uint8_t(a), uint8_t(b))] = uint8_t((a + b) % q);
                mul_[idx(uint8_t(a), uint8_t(b))] = uint8_t((a * b) % q);
            }
        }
    } else {
        // Inner modulus: first monic irreducible of degree e over F_p under
        // the canonical enumeration (constant digit fastest, nonzero).
        Gf prime(p);
        std::vector<uint8_t> inner;
        for (unsigned enc = 1;; ++enc) {
            if (enc % p == 0) continue;
            std::vector<uint8_t> cand = digits(enc, p, e);
            cand.push_back(1);
            if (polyfq::is_irreducible(prime, cand)) {
                inner = cand;
                break;
            }
        }
        for (unsigned a = 0; a < q; ++a) {
            auto da = digits(a, p, e);
            std::vector<uint8_t> na(e);
            for (unsigned i = 0; i < e; ++i) na[i] = prime.neg(da[i]);
            neg_[a] = uint8_t(pack(na, p));
            for (unsigned b = 0; b < q; ++b) {
                auto db = digits(b, p, e);
                std::vector<uint8_t> s(e);
                for (unsigned i = 0; i < e; ++i) s[i] = prime.add(da[i], db[i]);
                add_[idx(uint8_t(a), uint8_t(b))] = uint8_t(pack(s, p));
                auto prod = polyfq::mod(prime, polyfq::mul(prime, da, db), inner);
                prod.resize(e, 0);
                mul_[idx(uint8_t(a), uint8_t(b))] = uint8_t(pack(prod, p));
            }
        }
    }
    for (unsigned a = 1; a < q; ++a)
        for (unsigned b = 1; b < q; ++b)
            if (mul_[idx(uint8_t(a), uint8_t(b))] == 1) inv_[a] = uint8_t(b);
}

Gf::Elem Gf::inv(Elem a) const {
    if (a == 0) throw std::domain_error("Gf: inversion of zero");
    return inv_[a];
}

namespace polyfq {

static void trim(std::vector<uint8_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<uint8_t> mul(const Gf& f, const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint8_t> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

std::vector<uint8_t> mod(const Gf& f, std::vector<uint8_t> a, const std::vector<uint8_t>& b) {
    trim(a);
    if (b.empty() || b.back() != 1) throw std::invalid_argument("polyfq::mod: divisor must be monic");
    const size_t db = b.size() - 1;
    while (a.size() > db) {
        uint8_t lead = a.back();
        size_t shift = a.size() - 1 - db;
        if (lead) {
            for (size_t i = 0; i <= db; ++i)
                a[shift + i] = f.sub(a[shift + i], f.mul(lead, b[i]));
        }
        a.pop_back();
        trim(a);
        if (a.size() <= db) break;
    }
    return a;
}

bool divides(const Gf& f, const std::vector<uint8_t>& d, const std::vector<uint8_t>& a) {
    return mod(f, a, d).empty();
}

bool is_irreducible(const Gf& f, const std::vector<uint8_t>& a) {
    std::vector<uint8_t> p = a;
    trim(p);
    if (p.size() < 2) return false;  // constants
    const size_t deg = p.size() - 1;
    if (deg == 1) return true;
    if (p[0] == 0) return false;  // divisible by x
    // monic divisors of degree 1..deg/2, enumerated by packed coefficients
    for (size_t e = 1; e <= deg / 2; ++e) {
        uint64_t count = 1;
        for (size_t i = 0; i < e; ++i) count *= f.q();
        for (uint64_t enc = 0; enc < count; ++enc) {
            std::vector<uint8_t> d(e + 1, 0);
            uint64_t v = enc;
            for (size_t i = 0; i < e; ++i) {
                d[i] = uint8_t(v % f.q());
                v /= f.q();
            }
            d[e] = 1;
            if (divides(f, d, p)) return false;
        }
    }
    return true;
}

}  // namespace polyfq

FieldTower FieldTower::make(unsigned q, unsigned m) {
    if (m < 1) throw std::invalid_argument("FieldTower: m must be >= 1");
    Gf base(q);
    for (uint64_t enc = 1;; ++enc) {
        if (enc % q == 0) continue;  // constant term zero -> divisible by x
        std::vector<uint8_t> cand(m + 1, 0);
        uint64_t v = enc;
        for (unsigned i = 0; i < m; ++i) {
            cand[i] = uint8_t(v % q);
            v /= q;
        }
        if (v != 0) throw std::runtime_error("FieldTower: no irreducible modulus found");
        cand[m] = 1;
        if (polyfq::is_irreducible(base, cand)) return FieldTower(base, std::move(cand));
    }
}

FieldTower::FieldTower(Gf base, std::vector<uint8_t> modulus) : base_(std::move(base)) {
    if (modulus.size() < 2 || modulus.back() != 1)
        throw std::invalid_argument("FieldTower: modulus must be monic of degree >= 1");
    if (!polyfq::is_irreducible(base_, modulus))
        throw std::invalid_argument("FieldTower: modulus is reducible");
    m_ = unsigned(modulus.size() - 1);
    modulus_ = std::move(modulus);
}

ExtElem FieldTower::one() const {
    ExtElem e = zero();
    e.coords[0] = 1;
    return e;
}

ExtElem FieldTower::alpha() const { return alpha_pow(1); }

ExtElem FieldTower::alpha_pow(unsigned k) const {
    std::vector<uint8_t> x(k + 1, 0);
    x[k] = 1;
    auto r = polyfq::mod(base_, std::move(x), modulus_);
    r.resize(m_, 0);
    return ExtElem{std::move(r)};
}

ExtElem FieldTower::from_base(uint8_t a) const {
    ExtElem e = zero();
    e.coords[0] = a;
    return e;
}

ExtElem FieldTower::from_coords(std::vector<uint8_t> c) const {
    if (c.size() != m_) throw std::invalid_argument("FieldTower: coordinate vector has wrong length");
    for (uint8_t v : c)
        if (v >= q()) throw std::invalid_argument("FieldTower: coordinate out of range");
    return ExtElem{std::move(c)};
}

void FieldTower::check(const ExtElem& e) const {
    if (e.coords.size() != m_) throw std::invalid_argument("FieldTower: element from another tower");
}

ExtElem FieldTower::add(const ExtElem& a, const ExtElem& b) const {
    check(a);
    check(b);
    ExtElem r = a;
    for (unsigned i = 0; i < m_; ++i) r.coords[i] = base_.add(r.coords[i], b.coords[i]);
    return r;
}

ExtElem FieldTower::sub(const ExtElem& a, const ExtElem& b) const {
    check(a);
    check(b);
    ExtElem r = a;
    for (unsigned i = 0; i < m_; ++i) r.coords[i] = base_.sub(r.coords[i], b.coords[i]);
    return r;
}

ExtElem FieldTower::neg(const ExtElem& a) const {
    check(a);
    ExtElem r = a;
    for (unsigned i = 0; i < m_; ++i) r.coords[i] = base_.neg(r.coords[i]);
    return r;
}

ExtElem FieldTower::mul(const ExtElem& a, const ExtElem& b) const {
    check(a);
    check(b);
    auto prod = polyfq::mod(base_, polyfq::mul(base_, a.coords, b.coords), modulus_);
    prod.resize(m_, 0);
    return ExtElem{std::move(prod)};
}

ExtElem FieldTower::mul_base(const ExtElem& a, uint8_t c) const {
    check(a);
    ExtElem r = a;
    for (unsigned i = 0; i < m_; ++i) r.coords[i] = base_.mul(r.coords[i], c);
    return r;
}

ExtElem FieldTower::inv(const ExtElem& a) const {
    check(a);
    if (a.is_zero()) throw std::domain_error("FieldTower: inversion of zero");
    // extended Euclid on (a, modulus)
    std::vector<uint8_t> r0 = modulus_, r1 = a.coords, s0 = {}, s1 = {1};
    polyfq::trim(r1);
    while (!r1.empty()) {
        // divide r0 by r1: r0 = q*r1 + r2
        std::vector<uint8_t> q_poly(r0.size() > r1.size() - 1 ? r0.size() - r1.size() + 1 : 1, 0);
        std::vector<uint8_t> rem = r0;
        uint8_t lead_inv = base_.inv(r1.back());
        while (rem.size() >= r1.size() && !rem.empty()) {
            uint8_t c = base_.mul(rem.back(), lead_inv);
            size_t shift = rem.size() - r1.size();
            q_poly[shift] = base_.add(q_poly[shift], c);
            for (size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = base_.sub(rem[shift + i], base_.mul(c, r1[i]));
            polyfq::trim(rem);
            if (rem.size() < r1.size()) break;
        }
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
        auto qs1 = polyfq::mul(base_, q_poly, s1);
        std::vector<uint8_t> s2(std::max(s0.size(), qs1.size()), 0);
        for (size_t i = 0; i < s2.size(); ++i) {
            uint8_t x = i < s0.size() ? s0[i] : 0;
            uint8_t y = i < qs1.size() ? qs1[i] : 0;
            s2[i] = base_.sub(x, y);
        }
        polyfq::trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (a nonzero constant since modulus irreducible), s0 its Bezout factor
    if (r0.size() != 1) throw std::logic_error("FieldTower: gcd with irreducible modulus not constant");
    uint8_t scale = base_.inv(r0[0]);
    std::vector<uint8_t> out(m_, 0);
    for (size_t i = 0; i < s0.size(); ++i) out[i] = base_.mul(s0[i], scale);
    return ExtElem{std::move(out)};
}

uint8_t FieldTower::coord(const ExtElem& beta, unsigned i) const {
    check(beta);
    if (i < 1 || i > m_) throw std::out_of_range("FieldTower::coord: index out of range");
    return beta.coords[i - 1];
}

std::string FieldTower::to_string(const ExtElem& e) const {
    check(e);
    std::string s;
    for (unsigned i = 0; i < m_; ++i) {
        if (i) s += ',';
        s += std::to_string(unsigned(e.coords[i]));
    }
    return s;
}

ExtElem FieldTower::parse(const std::string& s) const {
    std::vector<uint8_t> c;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int v = std::stoi(tok);
        if (v < 0 || unsigned(v) >= q()) throw std::invalid_argument("FieldTower::parse: coordinate out of range");
        c.push_back(uint8_t(v));
    }
    if (c.size() != m_) throw std::invalid_argument("FieldTower::parse: wrong coordinate count");
    return ExtElem{std::move(c)};
}

}  // namespace ranksyz
