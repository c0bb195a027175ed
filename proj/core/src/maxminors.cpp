#include "ranksyz/maxminors.hpp"

#include <algorithm>
#include <stdexcept>

namespace ranksyz {

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Overdetermined: return "Overdetermined";
        case Regime::Intermediate: return "Intermediate";
        default: return "Underdetermined";
    }
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    if (k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

RegimeClass classify_regime(unsigned m, unsigned n, unsigned k, unsigned r) {
    if (r < 1 || r > n - k - 1)
        throw std::invalid_argument("classify_regime: need 1 <= r <= n-k-1 for maximal minors");
    RegimeClass rc;
    rc.minors_rows = mpz_class(m) * binomial(n - k - 1, r);
    rc.over_threshold = binomial(n, r) - 1;
    rc.under_threshold = binomial(n - 1, r);
    if (rc.minors_rows >= rc.over_threshold)
        rc.regime = Regime::Overdetermined;
    else if (rc.minors_rows <= rc.under_threshold)
        rc.regime = Regime::Underdetermined;
    else
        rc.regime = Regime::Intermediate;
    return rc;
}

SyzygyPrediction expected_syzygy_count(unsigned m, unsigned n, unsigned k, unsigned r) {
    RegimeClass rc = classify_regime(m, n, k, r);
    SyzygyPrediction p;
    switch (rc.regime) {
        case Regime::Overdetermined:
            p.degree = r - 1;
            p.count = binomial(n - 1, r - 1) - 1;
            break;
        case Regime::Intermediate:
            p.degree = r - 1;
            p.count = rc.minors_rows - rc.under_threshold;
            break;
        case Regime::Underdetermined:
            p.degree = r;
            p.count = rc.minors_rows;
            break;
    }
    return p;
}

long sign_sigma(const std::vector<unsigned>& T2, const std::vector<unsigned>& J, unsigned k,
                unsigned r) {
    (void)k;  // the sign depends only on positions inside J
    for (unsigned t : T2)
        if (!std::binary_search(J.begin(), J.end(), t))
            throw std::invalid_argument("sign_sigma: T2 must be a subset of J");
    const long d = long(J.size()) - long(T2.size());
    const long u = long(T2.size());
    long pos_sum = 0;
    for (unsigned t : T2)
        pos_sum += long(std::lower_bound(J.begin(), J.end(), t) - J.begin()) + 1;
    // rows of T2 sit at positions d+1..r of the submatrix; expanding them
    // against their unit columns and negating the -R block of the remaining
    // d rows gives this exponent
    (void)r;
    return u * d + u * (u + 1) / 2 + pos_sum + d;
}

std::vector<std::vector<unsigned>> colex_subsets(unsigned g, unsigned r) {
    std::vector<std::vector<unsigned>> out;
    if (r > g) return out;
    std::vector<unsigned> s(r);
    for (unsigned i = 0; i < r; ++i) s[i] = i;
    for (;;) {
        out.push_back(s);
        unsigned i = 0;
        while (i < r) {
            unsigned limit = (i + 1 < r) ? s[i + 1] : g;
            if (s[i] + 1 < limit) break;
            ++i;
        }
        if (i == r) break;
        ++s[i];
        for (unsigned j = 0; j < i; ++j) s[j] = j;
    }
    return out;
}

namespace {

// all subsets of a sorted set, by popcount mask
std::vector<std::vector<unsigned>> all_subsets(const std::vector<unsigned>& s) {
    std::vector<std::vector<unsigned>> out;
    const size_t n = s.size();
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        std::vector<unsigned> sub;
        for (size_t i = 0; i < n; ++i)
            if (mask & (size_t(1) << i)) sub.push_back(s[i]);
        out.push_back(std::move(sub));
    }
    return out;
}

// subsets of {1..g} of size d, values shifted by base
void size_d_subsets(unsigned g, unsigned d, std::vector<std::vector<unsigned>>& out) {
    out.clear();
    for (auto& s : colex_subsets(g, d)) {
        for (auto& v : s) v += 1;
        out.push_back(std::move(s));
    }
}

ExtElem minor_of_R(const ExtendedCode& ext, const std::vector<unsigned>& rows1b,
                   const std::vector<unsigned>& cols_labels, unsigned k) {
    const size_t d = rows1b.size();
    MatExt sub(ext.tower, d, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            sub.at(i, j) = ext.R.at(rows1b[i] - 1, cols_labels[j] - (k + 2));
    return det(sub);
}

}  // namespace

PolyExt build_pj(const ExtendedCode& ext, unsigned r, const VarSpace& vs,
                 const Specialization& spec, const std::vector<unsigned>& J) {
    const unsigned n = unsigned(ext.n), k = unsigned(ext.k);
    if (J.size() != r) throw std::invalid_argument("build_pj: |J| must equal r");
    for (size_t i = 0; i < J.size(); ++i)
        if (J[i] < k + 2 || J[i] > n || (i && J[i] <= J[i - 1]))
            throw std::invalid_argument("build_pj: J must be a sorted subset of {k+2..n}");
    const FieldTower& t = *ext.tower;
    auto C = oj_symbolic_C(t.base(), n, r, vs, spec);

    PolyExt pj(ext.tower);
    std::vector<std::vector<unsigned>> t1s;
    for (const auto& T2 : all_subsets(J)) {
        const unsigned d = unsigned(r - T2.size());
        std::vector<unsigned> jmt2;
        std::set_difference(J.begin(), J.end(), T2.begin(), T2.end(), std::back_inserter(jmt2));
        size_d_subsets(k + 1, d, t1s);
        for (const auto& T1 : t1s) {
            ExtElem coeff = minor_of_R(ext, T1, jmt2, k);
            if (coeff.is_zero()) continue;
            if (sign_sigma(T2, J, k, r) % 2) coeff = t.neg(coeff);
            // det(C_{., T}) with T = T1 u T2 (disjoint, already sorted blocks)
            std::vector<unsigned> T = T1;
            T.insert(T.end(), T2.begin(), T2.end());
            std::vector<std::vector<Polynomial>> sub(r, std::vector<Polynomial>(r, Polynomial(t.base())));
            for (unsigned i = 0; i < r; ++i)
                for (unsigned j = 0; j < r; ++j) sub[i][j] = C[i][T[j] - 1];
            Polynomial minor = symbolic_det(t.base(), sub);
            for (auto& [mono, c] : minor.terms()) pj.add_term(mono, t.mul_base(coeff, c));
        }
    }
    return pj;
}

MaxMinorsMatrix build_matrix_M(const ExtendedCode& ext, unsigned r, const Specialization& spec,
                               size_t column_cap) {
    const unsigned n = unsigned(ext.n), k = unsigned(ext.k);
    const FieldTower& t = *ext.tower;
    const unsigned m = t.m();
    if (r < 1 || r > n - k - 1) throw std::invalid_argument("build_matrix_M: no maximal minors");

    MaxMinorsMatrix M;
    M.m = m;
    M.n = n;
    M.k = k;
    M.r = r;
    M.pinned_col = spec.pinned_col;

    mpz_class nu = binomial(n, r);
    if (nu > (unsigned long)column_cap)
        throw std::length_error("build_matrix_M: column cap exceeded (route to the estimator)");

    // columns: degree-r minors (pinned column absent) in colex order over the
    // remaining labels, then degree-(r-1) minors (pinned column present)
    const unsigned pinned_label = unsigned(spec.pinned_col) + 1;
    std::vector<unsigned> others;
    for (unsigned label = 1; label <= n; ++label)
        if (label != pinned_label) others.push_back(label);
    for (auto& s : colex_subsets(n - 1, r)) {
        MinorVar mv;
        for (unsigned idx : s) mv.T.push_back(others[idx]);
        mv.degree = r;
        M.columns.push_back(std::move(mv));
    }
    M.degree_r_cols = M.columns.size();
    for (auto& s : colex_subsets(n - 1, r - 1)) {
        MinorVar mv;
        for (unsigned idx : s) mv.T.push_back(others[idx]);
        mv.T.push_back(pinned_label);
        std::sort(mv.T.begin(), mv.T.end());
        mv.degree = r - 1;
        M.columns.push_back(std::move(mv));
    }

    // column lookup by colex rank over the label positions in `others`
    std::vector<unsigned> pos_of_label(n + 1, 0);
    for (unsigned i = 0; i < others.size(); ++i) pos_of_label[others[i]] = i;
    auto column_of = [&](const std::vector<unsigned>& T_wo_pin, bool has_pin) -> size_t {
        mpz_class rank = 0;
        for (size_t i = 0; i < T_wo_pin.size(); ++i)
            rank += binomial(pos_of_label[T_wo_pin[i]], unsigned(i + 1));
        size_t base = has_pin ? M.degree_r_cols : 0;
        return base + rank.get_ui();
    };

    for (auto& s : colex_subsets(n - k - 1, r)) {
        std::vector<unsigned> J;
        for (unsigned idx : s) J.push_back(idx + k + 2);
        M.row_J.push_back(std::move(J));
    }

    M.mat = MatFq(t.base(), size_t(m) * M.row_J.size(), M.columns.size());

    std::vector<std::vector<unsigned>> t1s;
    for (size_t jr = 0; jr < M.row_J.size(); ++jr) {
        const auto& J = M.row_J[jr];
        for (const auto& T2 : all_subsets(J)) {
            const unsigned d = unsigned(r - T2.size());
            std::vector<unsigned> jmt2;
            std::set_difference(J.begin(), J.end(), T2.begin(), T2.end(), std::back_inserter(jmt2));
            size_d_subsets(k + 1, d, t1s);
            for (const auto& T1 : t1s) {
                ExtElem v = minor_of_R(ext, T1, jmt2, k);
                if (v.is_zero()) continue;
                if (sign_sigma(T2, J, k, r) % 2) v = t.neg(v);
                bool has_pin = false;
                std::vector<unsigned> T_wo_pin;
                T_wo_pin.reserve(r);
                for (unsigned x : T1) {
                    if (x == pinned_label)
                        has_pin = true;
                    else
                        T_wo_pin.push_back(x);
                }
                for (unsigned x : T2) {
                    if (x == pinned_label)
                        has_pin = true;
                    else
                        T_wo_pin.push_back(x);
                }
                std::sort(T_wo_pin.begin(), T_wo_pin.end());
                const size_t col = column_of(T_wo_pin, has_pin);
                for (unsigned i = 1; i <= m; ++i) {
                    uint8_t cur = M.mat.get(jr * m + (i - 1), col);
                    M.mat.set(jr * m + (i - 1), col, t.base().add(cur, t.coord(v, i)));
                }
            }
        }
    }
    return M;
}

HarvestResult extract_J_equations(const MaxMinorsMatrix& M, const VarSpace& vs,
                                  const Specialization& spec, const Gf& field,
                                  bool also_degree_r) {
    HarvestResult h;
    RegimeClass rc = classify_regime(M.m, M.n, M.k, M.r);
    h.regime = rc.regime;
    h.predicted = expected_syzygy_count(M.m, M.n, M.k, M.r);

    EchelonResult e = rref(M.mat);
    h.rank = e.rank;
    h.rref = e.rref;
    h.pivot_cols = e.pivot_cols;

    // symbolic minors, computed lazily per referenced column
    auto C = oj_symbolic_C(field, M.n, M.r, vs, spec);
    std::vector<char> have(M.columns.size(), 0);
    std::vector<Polynomial> minor_poly(M.columns.size(), Polynomial(field));
    auto minor_of_col = [&](size_t col) -> const Polynomial& {
        if (!have[col]) {
            const auto& T = M.columns[col].T;
            std::vector<std::vector<Polynomial>> sub(M.r, std::vector<Polynomial>(M.r, Polynomial(field)));
            for (unsigned i = 0; i < M.r; ++i)
                for (unsigned j = 0; j < M.r; ++j) sub[i][j] = C[i][T[j] - 1];
            minor_poly[col] = symbolic_det(field, sub);
            have[col] = 1;
        }
        return minor_poly[col];
    };
    auto row_to_poly = [&](size_t row) {
        Polynomial p(field);
        for (size_t col = 0; col < M.columns.size(); ++col) {
            uint8_t c = e.rref.get(row, col);
            if (c) p = p.add(minor_of_col(col).scale(c));
        }
        return p;
    };

    for (size_t p = 0; p < e.pivot_cols.size(); ++p) {
        if (e.pivot_cols[p] >= M.degree_r_cols)
            h.polys.push_back(row_to_poly(p));
        else if (also_degree_r)
            h.degree_r_polys.push_back(row_to_poly(p));
    }
    if (!h.polys.empty()) {
        h.degree = M.r - 1;
    } else {
        h.fell_back_to_degree_r = true;
        h.degree = M.r;
        for (size_t p = 0; p < e.pivot_cols.size(); ++p) h.polys.push_back(row_to_poly(p));
        h.degree_r_polys.clear();
    }
    h.count_matches = (h.degree == h.predicted.degree) &&
                      (mpz_class((unsigned long)h.polys.size()) == h.predicted.count);
    return h;
}

}  // namespace ranksyz
