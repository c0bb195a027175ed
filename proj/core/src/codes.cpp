#include "ranksyz/codes.hpp"

#include <json.hpp>
#include <stdexcept>

#include "ranksyz/rng.hpp"

namespace ranksyz {

std::vector<ExtElem> DecodingInstance::planted_error() const {
    if (!planted) throw std::logic_error("instance has no planted witness");
    return error_from_support(*code.tower, planted->S, planted->Cmat);
}

unsigned rank_weight(const FieldTower& t, const std::vector<ExtElem>& x) {
    return unsigned(rank_of(coordinate_matrix(t, x)));
}

unsigned rank_gv_radius(unsigned m, unsigned n, unsigned k) {
    return ((n - k) * m) / (n + m);
}

std::vector<ExtElem> add_vectors(const FieldTower& t, const std::vector<ExtElem>& a,
                                 const std::vector<ExtElem>& b) {
    std::vector<ExtElem> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = t.add(a[i], b[i]);
    return r;
}

std::vector<ExtElem> sub_vectors(const FieldTower& t, const std::vector<ExtElem>& a,
                                 const std::vector<ExtElem>& b) {
    std::vector<ExtElem> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = t.sub(a[i], b[i]);
    return r;
}

std::vector<ExtElem> error_from_support(const FieldTower& t, const MatFq& S, const MatFq& C) {
    MatFq prod = mul(S, C);
    std::vector<ExtElem> e(prod.cols());
    for (size_t j = 0; j < prod.cols(); ++j) {
        std::vector<uint8_t> coords(t.m(), 0);
        for (size_t i = 0; i < prod.rows(); ++i) coords[i] = prod.get(i, j);
        e[j] = t.from_coords(std::move(coords));
    }
    return e;
}

DecodingInstance gen_instance(unsigned q, unsigned m, unsigned n, unsigned k, unsigned r,
                              uint64_t seed) {
    if (r == 0) throw std::invalid_argument("gen_instance: r must be positive");
    if (r > std::min(m, n)) throw std::invalid_argument("gen_instance: r exceeds min(m, n)");
    if (k >= n) throw std::invalid_argument("gen_instance: k must be below n");

    auto tower = std::make_shared<const FieldTower>(FieldTower::make(q, m));
    Rng rng(seed);

    DecodingInstance inst;
    inst.code.tower = tower;
    inst.code.k = k;
    inst.code.n = n;
    inst.code.G = random_full_rank(tower, k, n, rng);
    inst.r = r;
    inst.seed = seed;
    inst.gv_warning = r >= rank_gv_radius(m, n, k);

    // random codeword
    MatExt u = random_matrix(tower, 1, k, rng);
    MatExt cw = mul(u, inst.code.G);
    std::vector<ExtElem> c(n);
    for (size_t j = 0; j < n; ++j) c[j] = cw.at(0, j);

    Gf base = tower->base();
    MatFq S = random_full_rank(base, m, r, rng);
    MatFq C = random_full_rank(base, r, n, rng);
    std::vector<ExtElem> e = error_from_support(*tower, S, C);

    inst.y = add_vectors(*tower, c, e);
    inst.planted = PlantedWitness{std::move(S), std::move(C), std::move(c)};
    return inst;
}

ExtendedCode extend_code(const DecodingInstance& inst) {
    const auto& tower = inst.code.tower;
    const size_t k = inst.code.k, n = inst.code.n;
    MatExt stacked(tower, k + 1, n);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) stacked.at(i, j) = inst.code.G.at(i, j);
    for (size_t j = 0; j < n; ++j) stacked.at(k, j) = inst.y[j];

    size_t rk = rank_of(stacked);
    if (rk == k) throw std::invalid_argument("extend_code: y already lies in the code");
    if (rk < k) throw std::invalid_argument("extend_code: generator matrix is rank deficient");

    auto [perm, sys] = systematic_form(stacked);

    ExtendedCode ext;
    ext.tower = tower;
    ext.k = k;
    ext.n = n;
    ext.perm = std::move(perm);
    ext.Gtilde = sys;
    ext.R = MatExt(tower, k + 1, n - k - 1);
    for (size_t i = 0; i < k + 1; ++i)
        for (size_t j = 0; j < n - k - 1; ++j) ext.R.at(i, j) = sys.at(i, k + 1 + j);
    ext.Htilde = MatExt(tower, n - k - 1, n);
    for (size_t i = 0; i < n - k - 1; ++i) {
        for (size_t j = 0; j < k + 1; ++j) ext.Htilde.at(i, j) = tower->neg(ext.R.at(j, i));
        ext.Htilde.at(i, k + 1 + i) = tower->one();
    }
    return ext;
}

MatExt parity_check(const LinearCode& code) {
    MatExt kernel = right_kernel(code.G);  // n x (n-k), columns
    MatExt h(code.tower, kernel.cols(), kernel.rows());
    for (size_t i = 0; i < kernel.rows(); ++i)
        for (size_t j = 0; j < kernel.cols(); ++j) h.at(j, i) = kernel.at(i, j);
    return h;
}

bool in_code(const LinearCode& code, const std::vector<ExtElem>& word) {
    MatExt stacked(code.tower, code.k + 1, code.n);
    for (size_t i = 0; i < code.k; ++i)
        for (size_t j = 0; j < code.n; ++j) stacked.at(i, j) = code.G.at(i, j);
    for (size_t j = 0; j < code.n; ++j) stacked.at(code.k, j) = word[j];
    return rank_of(stacked) == code.k;
}

namespace {

nlohmann::json matfq_to_json(const MatFq& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(int(m.get(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

MatFq matfq_from_json(const Gf& f, const nlohmann::json& rows) {
    size_t r = rows.size();
    size_t c = r ? rows[0].size() : 0;
    MatFq m(f, r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.set(i, j, uint8_t(rows[i][j].get<int>()));
    return m;
}

}  // namespace

std::string instance_to_json(const DecodingInstance& inst) {
    const FieldTower& t = *inst.code.tower;
    nlohmann::json j;
    j["q"] = t.q();
    j["m"] = t.m();
    j["n"] = inst.code.n;
    j["k"] = inst.code.k;
    j["r"] = inst.r;
    j["seed"] = inst.seed;
    std::string mod;
    for (size_t i = 0; i < t.modulus().size(); ++i) {
        if (i) mod += ',';
        mod += std::to_string(unsigned(t.modulus()[i]));
    }
    j["modulus"] = mod;
    nlohmann::json g = nlohmann::json::array();
    for (size_t i = 0; i < inst.code.k; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t jj = 0; jj < inst.code.n; ++jj) row.push_back(t.to_string(inst.code.G.at(i, jj)));
        g.push_back(std::move(row));
    }
    j["G"] = std::move(g);
    nlohmann::json y = nlohmann::json::array();
    for (const auto& e : inst.y) y.push_back(t.to_string(e));
    j["y"] = std::move(y);
    if (inst.planted) {
        nlohmann::json p;
        p["S"] = matfq_to_json(inst.planted->S);
        p["C"] = matfq_to_json(inst.planted->Cmat);
        nlohmann::json cw = nlohmann::json::array();
        for (const auto& e : inst.planted->codeword) cw.push_back(t.to_string(e));
        p["c"] = std::move(cw);
        j["planted"] = std::move(p);
    }
    return j.dump();
}

DecodingInstance instance_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    unsigned q = j.at("q").get<unsigned>();
    unsigned m = j.at("m").get<unsigned>();
    Gf base(q);
    std::vector<uint8_t> mod;
    {
        std::string s = j.at("modulus").get<std::string>();
        size_t pos = 0;
        while (pos != std::string::npos) {
            size_t nxt = s.find(',', pos);
            mod.push_back(uint8_t(std::stoi(s.substr(pos, nxt - pos))));
            pos = nxt == std::string::npos ? nxt : nxt + 1;
        }
    }
    auto tower = std::make_shared<const FieldTower>(base, mod);
    if (tower->m() != m) throw std::invalid_argument("instance_from_json: modulus degree != m");

    DecodingInstance inst;
    inst.code.tower = tower;
    inst.code.n = j.at("n").get<size_t>();
    inst.code.k = j.at("k").get<size_t>();
    inst.r = j.at("r").get<unsigned>();
    inst.seed = j.value("seed", uint64_t(0));
    inst.gv_warning = inst.r >= rank_gv_radius(m, unsigned(inst.code.n), unsigned(inst.code.k));

    inst.code.G = MatExt(tower, inst.code.k, inst.code.n);
    const auto& g = j.at("G");
    for (size_t i = 0; i < inst.code.k; ++i)
        for (size_t jj = 0; jj < inst.code.n; ++jj)
            inst.code.G.at(i, jj) = tower->parse(g[i][jj].get<std::string>());
    inst.y.resize(inst.code.n);
    const auto& y = j.at("y");
    for (size_t jj = 0; jj < inst.code.n; ++jj) inst.y[jj] = tower->parse(y[jj].get<std::string>());

    if (j.contains("planted")) {
        const auto& p = j["planted"];
        PlantedWitness w{matfq_from_json(base, p.at("S")), matfq_from_json(base, p.at("C")), {}};
        const auto& cw = p.at("c");
        w.codeword.resize(inst.code.n);
        for (size_t jj = 0; jj < inst.code.n; ++jj) w.codeword[jj] = tower->parse(cw[jj].get<std::string>());
        inst.planted = std::move(w);
    }
    return inst;
}

}  // namespace ranksyz
