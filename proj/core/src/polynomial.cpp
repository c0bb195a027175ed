#include "ranksyz/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace ranksyz {

Monomial Monomial::mul(const Monomial& o) const {
    Monomial r;
    r.exps.reserve(exps.size() + o.exps.size());
    size_t i = 0, j = 0;
    while (i < exps.size() || j < o.exps.size()) {
        if (j == o.exps.size() || (i < exps.size() && exps[i].first < o.exps[j].first)) {
            r.exps.push_back(exps[i++]);
        } else if (i == exps.size() || o.exps[j].first < exps[i].first) {
            r.exps.push_back(o.exps[j++]);
        } else {
            r.exps.emplace_back(exps[i].first, exps[i].second + o.exps[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

Monomial Monomial::reduce_exponents(unsigned q) const {
    Monomial r = *this;
    for (auto& [v, e] : r.exps)
        if (e >= q) e = (e - 1) % (q - 1) + 1;
    return r;
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    size_t i = a.exps.size(), j = b.exps.size();
    while (i > 0 && j > 0) {
        const auto& ta = a.exps[i - 1];
        const auto& tb = b.exps[j - 1];
        if (ta.first > tb.first) return false;  // a has the larger trailing variable
        if (tb.first > ta.first) return true;
        if (ta.second != tb.second) return ta.second < tb.second;
        --i;
        --j;
    }
    return false;  // equal (degrees match, all entries matched)
}

std::string VarSpace::var_name(size_t v) const {
    const bool sup = is_support(v);
    const auto& coord = sup ? support_coord[v] : coeff_coord[v - n_support];
    const std::string& p = sup ? support_prefix : coeff_prefix;
    if (coord.second < 0) return p + "_" + std::to_string(coord.first);
    return p + "_{" + std::to_string(coord.first) + "," + std::to_string(coord.second) + "}";
}

unsigned Polynomial::degree() const {
    unsigned d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void Polynomial::add_term(const Monomial& m, uint8_t c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = field_.add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

uint8_t Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading_monomial of zero polynomial");
    return terms_.begin()->first;
}

Polynomial Polynomial::add(const Polynomial& o) const {
    Polynomial r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::sub(const Polynomial& o) const {
    Polynomial r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, field_.neg(c));
    return r;
}

Polynomial Polynomial::neg() const {
    Polynomial r(field_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, field_.neg(c));
    return r;
}

Polynomial Polynomial::mul(const Polynomial& o) const {
    Polynomial r(field_);
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.add_term(ma.mul(mb), field_.mul(ca, cb));
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, uint8_t c) const {
    Polynomial r(field_);
    for (auto& [mm, cc] : terms_) r.add_term(mm.mul(m), field_.mul(cc, c));
    return r;
}

Polynomial Polynomial::scale(uint8_t c) const {
    Polynomial r(field_);
    for (auto& [m, cc] : terms_) r.add_term(m, field_.mul(cc, c));
    return r;
}

Polynomial Polynomial::reduce_exponents() const {
    Polynomial r(field_);
    for (auto& [m, c] : terms_) r.add_term(m.reduce_exponents(field_.q()), c);
    return r;
}

Polynomial Polynomial::derivative(uint32_t var) const {
    Polynomial r(field_);
    for (auto& [m, c] : terms_) {
        uint32_t e = m.exponent(var);
        if (e == 0) continue;
        uint8_t factor = uint8_t(e % field_.characteristic());
        if (factor == 0) continue;
        Monomial d = m;
        for (auto it = d.exps.begin(); it != d.exps.end(); ++it) {
            if (it->first == var) {
                if (--it->second == 0) d.exps.erase(it);
                break;
            }
        }
        r.add_term(d, field_.mul(c, factor));
    }
    return r;
}

Polynomial Polynomial::homogeneous_part(unsigned d) const {
    Polynomial r(field_);
    for (auto& [m, c] : terms_)
        if (m.degree() == d) r.terms_.emplace(m, c);
    return r;
}

uint8_t Polynomial::eval(const std::vector<uint8_t>& point) const {
    uint8_t acc = 0;
    for (auto& [m, c] : terms_) {
        uint8_t v = c;
        for (auto& [var, e] : m.exps) {
            if (var >= point.size()) throw std::out_of_range("Polynomial::eval: point too short");
            for (uint32_t k = 0; k < e && v; ++k) v = field_.mul(v, point[var]);
        }
        acc = field_.add(acc, v);
    }
    return acc;
}

Polynomial Polynomial::substitute(const std::vector<int16_t>& assignment) const {
    Polynomial r(field_);
    for (auto& [m, c] : terms_) {
        uint8_t scalar = c;
        Monomial rest;
        for (auto& [v, e] : m.exps) {
            if (v < assignment.size() && assignment[v] >= 0) {
                uint8_t val = uint8_t(assignment[v]);
                for (uint32_t k = 0; k < e && scalar; ++k) scalar = field_.mul(scalar, val);
            } else {
                rest.exps.emplace_back(v, e);
            }
        }
        if (scalar) r.add_term(rest, scalar);
    }
    return r;
}

Polynomial Polynomial::substitute_var(uint32_t var, const Polynomial& replacement) const {
    Polynomial r(field_);
    for (auto& [m, c] : terms_) {
        uint32_t e = m.exponent(var);
        if (e == 0) {
            r.add_term(m, c);
            continue;
        }
        Monomial rest;
        for (auto& [v, ex] : m.exps)
            if (v != var) rest.exps.emplace_back(v, ex);
        Polynomial part(field_);
        part.add_term(rest, c);
        for (uint32_t k = 0; k < e; ++k) part = part.mul(replacement);
        r = r.add(part);
    }
    return r;
}

std::string Polynomial::to_string(const VarSpace& vs) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        std::string t;
        if (c != 1 || m.is_one()) t = std::to_string(unsigned(c));
        for (auto& [v, e] : m.exps) {
            if (!t.empty() && t != "1") t += "*";
            if (t == "1") t.clear();
            t += vs.var_name(v);
            if (e > 1) t += "^" + std::to_string(e);
        }
        out += t;
    }
    return out;
}

unsigned PolyExt::degree() const {
    unsigned d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void PolyExt::add_term(const Monomial& m, const ExtElem& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = tower_->add(it->second, c);
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PolyExt PolyExt::add(const PolyExt& o) const {
    PolyExt r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

PolyExt PolyExt::sub(const PolyExt& o) const {
    PolyExt r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, tower_->neg(c));
    return r;
}

PolyExt PolyExt::mul(const PolyExt& o) const {
    PolyExt r(tower_);
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.add_term(ma.mul(mb), tower_->mul(ca, cb));
    return r;
}

PolyExt PolyExt::mul_term(const Monomial& m, const ExtElem& c) const {
    PolyExt r(tower_);
    for (auto& [mm, cc] : terms_) r.add_term(mm.mul(m), tower_->mul(cc, c));
    return r;
}

PolyExt PolyExt::scale(const ExtElem& c) const {
    PolyExt r(tower_);
    for (auto& [m, cc] : terms_) r.add_term(m, tower_->mul(cc, c));
    return r;
}

PolyExt PolyExt::homogeneous_part(unsigned d) const {
    PolyExt r(tower_);
    for (auto& [m, c] : terms_)
        if (m.degree() == d) r.terms_.emplace(m, c);
    return r;
}

ExtElem PolyExt::eval(const std::vector<uint8_t>& point) const {
    const Gf& f = tower_->base();
    ExtElem acc = tower_->zero();
    for (auto& [m, c] : terms_) {
        uint8_t scalar = 1;
        for (auto& [var, e] : m.exps) {
            if (var >= point.size()) throw std::out_of_range("PolyExt::eval: point too short");
            for (uint32_t k = 0; k < e && scalar; ++k) scalar = f.mul(scalar, point[var]);
        }
        if (scalar) acc = tower_->add(acc, tower_->mul_base(c, scalar));
    }
    return acc;
}

std::vector<Polynomial> PolyExt::split() const {
    std::vector<Polynomial> out(tower_->m(), Polynomial(tower_->base()));
    for (auto& [m, c] : terms_)
        for (unsigned i = 1; i <= tower_->m(); ++i) out[i - 1].add_term(m, tower_->coord(c, i));
    return out;
}

}  // namespace ranksyz
