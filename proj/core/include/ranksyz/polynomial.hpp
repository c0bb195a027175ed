#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ranksyz/field.hpp"

namespace ranksyz {

// Sparse monomial: ascending (variable, exponent) pairs, exponents > 0.
// Exponents above q-1 are legal (x^q - x itself must be representable);
// reduce_exponents maps them back to the field-equation-reduced range.
struct Monomial {
    std::vector<std::pair<uint32_t, uint32_t>> exps;

    static Monomial one() { return {}; }
    static Monomial var(uint32_t v, uint32_t e = 1) { return Monomial{{{v, e}}}; }

    unsigned degree() const {
        unsigned d = 0;
        for (auto& [v, e] : exps) d += e;
        return d;
    }
    bool is_one() const { return exps.empty(); }
    uint32_t exponent(uint32_t v) const {
        for (auto& [var, e] : exps)
            if (var == v) return e;
        return 0;
    }

    Monomial mul(const Monomial& o) const;
    // x^e -> x^{((e-1) mod (q-1)) + 1}; squarefree for q = 2
    Monomial reduce_exponents(unsigned q) const;

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator!=(const Monomial& o) const { return exps != o.exps; }
};

// Graded reverse lexicographic order, variable 0 being the largest. Among
// equal degrees the monomial with the smaller exponent at the largest
// differing variable index wins.
bool grevlex_greater(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
};

// Variable partition of a bilinear modelling. Block 0 ("support side")
// occupies indices [0, n_support), block 1 ("coefficient side") the rest —
// so grevlex orders all support variables above all coefficient variables.
// coordinate maps record which matrix entry each variable stands for.
struct VarSpace {
    size_t n_support = 0;
    size_t n_coeff = 0;
    std::vector<std::pair<int, int>> support_coord;  // (row, col), 1-based
    std::vector<std::pair<int, int>> coeff_coord;
    std::string support_prefix = "s";
    std::string coeff_prefix = "c";

    size_t total() const { return n_support + n_coeff; }
    bool is_support(size_t v) const { return v < n_support; }
    std::string var_name(size_t v) const;
};

// Sparse multivariate polynomial over F_q. Terms iterate grevlex-descending;
// zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, uint8_t, GrevlexGreater>;

    explicit Polynomial(const Gf& f) : field_(f) {}

    const Gf& field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    unsigned degree() const;

    void add_term(const Monomial& m, uint8_t c);
    uint8_t coeff(const Monomial& m) const;
    const Monomial& leading_monomial() const;  // throws on zero

    Polynomial add(const Polynomial& o) const;
    Polynomial sub(const Polynomial& o) const;
    Polynomial neg() const;
    Polynomial mul(const Polynomial& o) const;
    Polynomial mul_term(const Monomial& m, uint8_t c) const;
    Polynomial scale(uint8_t c) const;
    Polynomial reduce_exponents() const;  // modulo the field equations
    Polynomial derivative(uint32_t var) const;
    Polynomial homogeneous_part(unsigned d) const;  // terms of degree exactly d

    uint8_t eval(const std::vector<uint8_t>& point) const;

    // folds in the variables with assignment[v] >= 0
    Polynomial substitute(const std::vector<int16_t>& assignment) const;
    // replaces one variable by a polynomial (used for linear elimination)
    Polynomial substitute_var(uint32_t var, const Polynomial& replacement) const;

    std::string to_string(const VarSpace& vs) const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

private:
    Gf field_;
    TermMap terms_;
};

// Polynomial with coefficients in F_{q^m}; the intermediate form of the
// modelling equations before coordinate extraction.
class PolyExt {
public:
    using TermMap = std::map<Monomial, ExtElem, GrevlexGreater>;

    explicit PolyExt(std::shared_ptr<const FieldTower> t) : tower_(std::move(t)) {}

    const FieldTower& tower() const { return *tower_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned degree() const;

    void add_term(const Monomial& m, const ExtElem& c);

    PolyExt add(const PolyExt& o) const;
    PolyExt sub(const PolyExt& o) const;
    PolyExt mul(const PolyExt& o) const;
    PolyExt mul_term(const Monomial& m, const ExtElem& c) const;
    PolyExt scale(const ExtElem& c) const;
    PolyExt homogeneous_part(unsigned d) const;

    ExtElem eval(const std::vector<uint8_t>& point) const;

    // coordinate split: component i-1 carries [alpha^{i-1}] of every
    // coefficient, giving m polynomials over F_q
    std::vector<Polynomial> split() const;

    bool operator==(const PolyExt& o) const { return terms_ == o.terms_; }

private:
    std::shared_ptr<const FieldTower> tower_;
    TermMap terms_;
};

}  // namespace ranksyz
