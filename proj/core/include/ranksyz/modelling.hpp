#pragma once

#include <optional>
#include <vector>

#include "ranksyz/codes.hpp"
#include "ranksyz/polynomial.hpp"

namespace ranksyz {

// Specialization of the bilinear support/coefficient modelling: S has first
// column and first row pinned to unit vectors, the rows in block_rows carry
// an identity block on columns 2..r, and column pinned_col of C is pinned to
// (1, 0, ..., 0)^T. block_rows is a sorted (r-1)-subset of {2..m} (1-based).
struct Specialization {
    size_t pinned_col = 0;  // 0-based, in the permuted coordinates of the extended code
    std::vector<unsigned> block_rows;
};

struct BilinearSystem {
    std::vector<Polynomial> polys;
    std::vector<PolyExt> ext_eqs;  // the equations over F_{q^m} before coordinate split
    VarSpace vars;
    Specialization spec;
};

VarSpace make_oj_varspace(unsigned m, unsigned n, unsigned r, const Specialization& spec);

// Symbolic specialized matrices: S (m x r) and C (r x n) with entries that
// are constants or single variables of vs, over F_q.
std::vector<std::vector<Polynomial>> oj_symbolic_S(const Gf& f, unsigned m, unsigned r,
                                                   const VarSpace& vs, const Specialization& spec);
std::vector<std::vector<Polynomial>> oj_symbolic_C(const Gf& f, unsigned n, unsigned r,
                                                   const VarSpace& vs, const Specialization& spec);

// Laplace-expanded determinant of a square matrix of polynomials.
Polynomial symbolic_det(const Gf& f, const std::vector<std::vector<Polynomial>>& m);

// The support-times-coefficient system of the extended code: m(n-k-1)
// affine bilinear equations over F_q that vanish on every specialized
// solution. ext_eqs holds the n-k-1 equations over F_{q^m}.
BilinearSystem build_oj_system(const ExtendedCode& ext, unsigned r, const Specialization& spec);

// x^q - x for every variable of vs
std::vector<Polynomial> field_equations(const Gf& f, const VarSpace& vs);

// Kernel modelling of the underlying MinRank instance: m(n-r) equations in
// the km+1 combination variables and the r(n-r) kernel entries.
BilinearSystem build_ks_system(const DecodingInstance& inst);

// Parity-check modelling: m(n-k) equations in mr + nr variables, bilinear
// with constant terms from the syndrome and no specialization.
BilinearSystem build_syndrome_system(const DecodingInstance& inst);

// Verifies that the Jacobian of vec(A X Y) with respect to the fresh
// variables X equals the Kronecker forms A (x) Y^T (row order) and
// Y^T (x) A (column order). X is p x r with variable indices
// x_base + s*r + t. Always true; exists as a self-test.
bool jacobian_kronecker_check(const Gf& f, const std::vector<std::vector<Polynomial>>& A,
                              const std::vector<std::vector<Polynomial>>& Y, size_t p, size_t r,
                              uint32_t x_base);

// Left-kernel vector of the bilinear part of the specialized system: entry
// j (1-based over 1..n-k-1) is zero outside J and otherwise the signed
// (r-1)-minor of rows 2..r of C2 - C1 R on columns J minus that one.
// J is a sorted r-subset of {1..n-k-1}.
std::vector<PolyExt> kernel_vector_vj(const ExtendedCode& ext, unsigned r,
                                      const Specialization& spec, const std::vector<unsigned>& J);

// The (S*, C*) satisfying the specialized system for a planted instance, or
// nullopt when the specialization is incompatible (zero pinned coordinate or
// singular identity block).
std::optional<std::pair<MatFq, MatFq>> planted_solution(const DecodingInstance& inst,
                                                        const ExtendedCode& ext,
                                                        const Specialization& spec);

// rows 1..r of C2 - C1 R as polynomials over F_{q^m} (the matrix whose
// maximal minors the attack linearizes)
std::vector<std::vector<PolyExt>> oj_w_matrix(const ExtendedCode& ext, unsigned r,
                                              const VarSpace& vs, const Specialization& spec);

}  // namespace ranksyz
