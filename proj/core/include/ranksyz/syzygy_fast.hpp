#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ranksyz/maxminors.hpp"

namespace ranksyz {

// Structured degree-fall search for the linearized minors system, used when
// the dense Macaulay for a degree no longer fits in memory (the
// underdetermined regime at degree r+2). The resolution of the ideal of
// maximal minors of a generic matrix is linear, so the syzygies among the
// products t * P_rho are generated by the duplicate-row relations
// sum_j c_{i,j} det(C_{.,Q\j}) = 0; candidate combinations are spanned by
// monomial multiples of those relations and filtered against the row space
// of the linearization by a single elimination whose width does not depend
// on the number of degree-(r+2) monomials.
//
// Only the q = 2 path is implemented; other fields fall back to the dense
// solver. Every returned polynomial is verified to drop below the requested
// degree; combinations failing the check are discarded.
class MinorFallContext {
public:
    // Requires every pivot of the echelonized linearization to sit in the
    // degree-r block (the generic underdetermined shape); returns nullptr
    // otherwise.
    static std::unique_ptr<MinorFallContext> build(const MaxMinorsMatrix& M,
                                                   const HarvestResult& harvest, const VarSpace& vs,
                                                   uint64_t seed);

    // Degree falls of {J} at `degree` = r + u for u in {1, 2}; nullopt when
    // the degree is out of the supported range or the working set exceeds
    // memory_budget bytes.
    std::optional<std::vector<Polynomial>> falls_at(unsigned degree, size_t memory_budget) const;

    unsigned base_degree() const { return r_; }

private:
    MinorFallContext() = default;

    Gf field_{2};
    unsigned r_ = 0, n_ = 0;
    size_t n_support_ = 0;  // global index offset of the coefficient block
    unsigned va_ = 0;       // number of coefficient variables, r*(n-1)
    uint64_t seed_ = 0;

    std::vector<unsigned> others_;        // non-pinned column labels, ascending
    std::vector<uint32_t> pivot_minor_;   // rho -> degree-r minor index (colex)
    std::vector<int32_t> row_of_minor_;   // minor index -> rho or -1
    size_t minor_count_ = 0;              // C(n-1, r)
    size_t kernel_dim_ = 0;               // minor_count - rank
    std::vector<std::vector<uint64_t>> kw_;  // per minor: kernel components, packed

    // packed equations P_rho over the coefficient variables
    struct PackedEq {
        std::vector<std::array<uint64_t, 3>> term_masks;
    };
    std::vector<PackedEq> eqs_;
};

}  // namespace ranksyz
