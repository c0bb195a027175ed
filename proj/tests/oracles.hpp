#pragma once

// Independent reference implementations used to pin expected values. They
// deliberately avoid the library's linear algebra and minor-expansion code
// paths: plain modular arithmetic over prime fields, schoolbook polynomial
// division, Leibniz determinant expansion.

#include <cstdint>
#include <vector>

#include "ranksyz/polynomial.hpp"

namespace oracle {

// rank of a matrix over the prime field F_p by naive Gaussian elimination
size_t naive_rank(std::vector<std::vector<int>> m, int p);

// determinant over F_p by Leibniz permutation expansion, sign tracked
int leibniz_det(const std::vector<std::vector<int>>& m, int p);

// schoolbook polynomial arithmetic over F_p, ascending coefficients
std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p);
// remainder of a modulo monic b
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p);
std::vector<int> poly_gcd(std::vector<int> a, std::vector<int> b, int p);
// x^(p^e) mod f via square-and-multiply on exponent p^e
std::vector<int> frobenius_power(const std::vector<int>& f, int p, unsigned e);
// Rabin test: f of degree m irreducible over F_p iff x^(p^m) = x (mod f) and
// gcd(x^(p^(m/l)) - x, f) = 1 for every prime l dividing m
bool frobenius_irreducible(const std::vector<int>& f, int p);

// Leibniz-expanded symbolic determinant over the library's polynomial type
// (independent of the Cauchy-Binet route it is used to check)
ranksyz::Polynomial leibniz_symbolic_det(const ranksyz::Gf& f,
                                         const std::vector<std::vector<ranksyz::Polynomial>>& m);
ranksyz::PolyExt leibniz_symbolic_det_ext(std::shared_ptr<const ranksyz::FieldTower> t,
                                          const std::vector<std::vector<ranksyz::PolyExt>>& m);

}  // namespace oracle
