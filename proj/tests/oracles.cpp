#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

namespace {
int inv_mod(int a, int p) {
    int r = 1;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
    }
    return r;
}
void trim(std::vector<int>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
}  // namespace

size_t naive_rank(std::vector<std::vector<int>> m, int p) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rows;
        for (size_t i = rank; i < rows; ++i)
            if (m[i][col] % p != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        int inv = inv_mod((m[rank][col] % p + p) % p, p);
        for (size_t j = 0; j < cols; ++j) m[rank][j] = (m[rank][j] % p + p) % p * inv % p;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank) continue;
            int c = (m[i][col] % p + p) % p;
            if (!c) continue;
            for (size_t j = 0; j < cols; ++j)
                m[i][j] = ((m[i][j] - c * m[rank][j]) % p + p * p) % p;
        }
        ++rank;
    }
    return rank;
}

int leibniz_det(const std::vector<std::vector<int>>& m, int p) {
    const size_t n = m.size();
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long det = 0;
    // iterate permutations with parity tracked via sorted order
    do {
        // parity of perm
        int sign = 1;
        std::vector<char> seen(n, 0);
        for (size_t i = 0; i < n; ++i) {
            if (seen[i]) continue;
            size_t len = 0, j = i;
            while (!seen[j]) {
                seen[j] = 1;
                j = perm[j];
                ++len;
            }
            if (len % 2 == 0) sign = -sign;
        }
        long long term = sign;
        for (size_t i = 0; i < n; ++i) term = term * m[i][perm[i]] % p;
        det = (det + term) % p;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return int((det % p + p) % p);
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    trim(a);
    const size_t db = b.size() - 1;
    while (a.size() > db) {
        int lead = a.back() * inv_mod(b.back(), p) % p;
        size_t shift = a.size() - 1 - db;
        for (size_t i = 0; i <= db; ++i)
            a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p * p) % p;
        trim(a);
    }
    return a;
}

std::vector<int> poly_gcd(std::vector<int> a, std::vector<int> b, int p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        int inv = inv_mod(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

std::vector<int> frobenius_power(const std::vector<int>& f, int p, unsigned e) {
    // x^(p^e) mod f by repeated p-th powering
    std::vector<int> x = {0, 1};
    x = poly_mod(x, f, p);
    for (unsigned step = 0; step < e; ++step) {
        // raise to the p-th power via square-and-multiply
        std::vector<int> acc = {1};
        std::vector<int> base = x;
        int exp = p;
        while (exp) {
            if (exp & 1) acc = poly_mod(poly_mul(acc, base, p), f, p);
            base = poly_mod(poly_mul(base, base, p), f, p);
            exp >>= 1;
        }
        x = acc;
    }
    return x;
}

bool frobenius_irreducible(const std::vector<int>& f, int p) {
    const unsigned m = unsigned(f.size() - 1);
    std::vector<int> x = {0, 1};
    // x^(p^m) == x mod f
    std::vector<int> xm = frobenius_power(f, p, m);
    std::vector<int> diff(std::max(xm.size(), x.size()), 0);
    for (size_t i = 0; i < diff.size(); ++i) {
        int a = i < xm.size() ? xm[i] : 0;
        int b = i < x.size() ? x[i] : 0;
        diff[i] = ((a - b) % p + p) % p;
    }
    trim(diff);
    if (!diff.empty()) return false;
    for (unsigned l = 2; l <= m; ++l) {
        if (m % l) continue;
        bool prime = true;
        for (unsigned dd = 2; dd * dd <= l; ++dd)
            if (l % dd == 0) prime = false;
        if (!prime) continue;
        std::vector<int> xe = frobenius_power(f, p, m / l);
        std::vector<int> d2(std::max(xe.size(), x.size()), 0);
        for (size_t i = 0; i < d2.size(); ++i) {
            int a = i < xe.size() ? xe[i] : 0;
            int b = i < x.size() ? x[i] : 0;
            d2[i] = ((a - b) % p + p) % p;
        }
        trim(d2);
        auto g = poly_gcd(f, d2, p);
        if (g.size() != 1) return false;
    }
    return true;
}

ranksyz::Polynomial leibniz_symbolic_det(const ranksyz::Gf& f,
                                         const std::vector<std::vector<ranksyz::Polynomial>>& m) {
    using ranksyz::Polynomial;
    const size_t n = m.size();
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial det(f);
    do {
        int sign = 1;
        std::vector<char> seen(n, 0);
        for (size_t i = 0; i < n; ++i) {
            if (seen[i]) continue;
            size_t len = 0, j = i;
            while (!seen[j]) {
                seen[j] = 1;
                j = perm[j];
                ++len;
            }
            if (len % 2 == 0) sign = -sign;
        }
        Polynomial term(f);
        term.add_term(ranksyz::Monomial::one(), sign > 0 ? f.one() : f.neg(f.one()));
        for (size_t i = 0; i < n; ++i) term = term.mul(m[i][perm[i]]);
        det = det.add(term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

ranksyz::PolyExt leibniz_symbolic_det_ext(std::shared_ptr<const ranksyz::FieldTower> t,
                                          const std::vector<std::vector<ranksyz::PolyExt>>& m) {
    using ranksyz::PolyExt;
    const size_t n = m.size();
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    PolyExt det(t);
    do {
        int sign = 1;
        std::vector<char> seen(n, 0);
        for (size_t i = 0; i < n; ++i) {
            if (seen[i]) continue;
            size_t len = 0, j = i;
            while (!seen[j]) {
                seen[j] = 1;
                j = perm[j];
                ++len;
            }
            if (len % 2 == 0) sign = -sign;
        }
        PolyExt term(t);
        term.add_term(ranksyz::Monomial::one(), sign > 0 ? t->one() : t->neg(t->one()));
        for (size_t i = 0; i < n; ++i) term = term.mul(m[i][perm[i]]);
        det = det.add(term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

}  // namespace oracle
