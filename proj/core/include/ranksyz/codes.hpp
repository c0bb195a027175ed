#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ranksyz/ext_matrix.hpp"
#include "ranksyz/field.hpp"
#include "ranksyz/matrix.hpp"

namespace ranksyz {

// [n,k] F_{q^m}-linear code given by a full-row-rank generator matrix.
struct LinearCode {
    std::shared_ptr<const FieldTower> tower;
    size_t k = 0, n = 0;
    MatExt G;
};

// Planted witness kept alongside generated instances for verification:
// the error is e = (1, alpha, ..., alpha^{m-1}) * S * C.
struct PlantedWitness {
    MatFq S;     // m x r over F_q, full column rank
    MatFq Cmat;  // r x n over F_q, full row rank
    std::vector<ExtElem> codeword;
};

struct DecodingInstance {
    LinearCode code;
    std::vector<ExtElem> y;
    unsigned r = 0;
    uint64_t seed = 0;
    bool gv_warning = false;  // r at or above the rank Gilbert-Varshamov radius
    std::optional<PlantedWitness> planted;

    std::vector<ExtElem> planted_error() const;  // requires planted
};

// Extended code C~ = C + <y> in systematic form. perm[i] is the original
// coordinate shown at permuted position i; Gtilde = (I_{k+1} | R) and
// Htilde = (-R^T | I_{n-k-1}) satisfy Gtilde * Htilde^T = 0.
struct ExtendedCode {
    std::shared_ptr<const FieldTower> tower;
    size_t k = 0, n = 0;  // k is the dimension of the original code
    MatExt Gtilde, Htilde, R;
    std::vector<size_t> perm;
};

// rank of Mat(x), i.e. the dimension of the support of x
unsigned rank_weight(const FieldTower& t, const std::vector<ExtElem>& x);

// floor((n-k)m / (n+m)), the rough unique-decoding radius used for warnings
unsigned rank_gv_radius(unsigned m, unsigned n, unsigned k);

// Uniform instance with a planted rank-r error; deterministic under seed.
DecodingInstance gen_instance(unsigned q, unsigned m, unsigned n, unsigned k, unsigned r,
                              uint64_t seed);

ExtendedCode extend_code(const DecodingInstance& inst);

MatExt parity_check(const LinearCode& code);  // (n-k) x n, G H^T = 0
bool in_code(const LinearCode& code, const std::vector<ExtElem>& word);

std::vector<ExtElem> add_vectors(const FieldTower& t, const std::vector<ExtElem>& a,
                                 const std::vector<ExtElem>& b);
std::vector<ExtElem> sub_vectors(const FieldTower& t, const std::vector<ExtElem>& a,
                                 const std::vector<ExtElem>& b);
// e[j] = sum_i alpha^{i-1} (S*C)[i][j]
std::vector<ExtElem> error_from_support(const FieldTower& t, const MatFq& S, const MatFq& C);

std::string instance_to_json(const DecodingInstance& inst);
DecodingInstance instance_from_json(const std::string& text);

}  // namespace ranksyz
