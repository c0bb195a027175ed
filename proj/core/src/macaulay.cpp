#include "ranksyz/macaulay.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

#include "ranksyz/elimination.hpp"
#include "ranksyz/syzygy_fast.hpp"
#include "xl_internal.hpp"

namespace ranksyz {

namespace xl {
const BinomTable& binom_table() {
    static const BinomTable t;
    return t;
}

PackedPoly pack_poly(const Polynomial& p, const std::vector<int>& position) {
    PackedPoly out;
    out.terms.reserve(p.term_count());
    for (auto& [m, c] : p.terms()) {
        (void)c;  // q = 2: stored coefficients are 1
        PackedTerm t;
        for (auto& [v, e] : m.exps) {
            (void)e;
            if (position[v] < 0) throw std::logic_error("pack_poly: inactive variable present");
            t.mask.set(unsigned(position[v]));
        }
        t.degree = t.mask.degree();
        out.degree = std::max(out.degree, t.degree);
        out.terms.push_back(t);
    }
    return out;
}

Polynomial unpack_row(const Gf& f, const uint64_t* row, const ColumnSpace& cs,
                      const std::vector<uint32_t>& global_of_position) {
    Polynomial p(f);
    const size_t words = (cs.cols() + 63) / 64;
    for (size_t w = 0; w < words; ++w) {
        uint64_t v = row[w];
        while (v) {
            uint64_t col = w * 64 + uint64_t(__builtin_ctzll(v));
            v &= v - 1;
            if (col >= cs.cols()) break;
            auto [mask, deg] = cs.monomial_of(col);
            (void)deg;
            Monomial mono;
            mask.for_each_bit([&](unsigned b) { mono.exps.emplace_back(global_of_position[b], 1); });
            p.add_term(mono, 1);
        }
    }
    return p;
}
}  // namespace xl

std::vector<Monomial> monomials_upto(size_t nvars, unsigned d, unsigned q) {
    std::vector<Monomial> out;
    Monomial cur;
    std::function<void(size_t, unsigned)> rec = [&](size_t var, unsigned left) {
        if (var == nvars) {
            out.push_back(cur);
            return;
        }
        rec(var + 1, left);  // exponent 0
        for (unsigned e = 1; e < q && e <= left; ++e) {
            cur.exps.emplace_back(uint32_t(var), e);
            rec(var + 1, left - e);
            cur.exps.pop_back();
        }
    };
    rec(0, d);
    std::sort(out.begin(), out.end(), GrevlexGreater{});
    return out;
}

MacaulayMatrix build_macaulay(const std::vector<Polynomial>& system, size_t nvars, unsigned d,
                              size_t column_cap) {
    if (system.empty()) throw std::invalid_argument("build_macaulay: empty system");
    const Gf& f = system.front().field();
    MacaulayMatrix mm;
    mm.degree = d;
    mm.columns = monomials_upto(nvars, d, f.q());
    if (mm.columns.size() > column_cap)
        throw std::length_error("build_macaulay: column cap exceeded");
    std::map<Monomial, size_t, GrevlexGreater> col_of;
    for (size_t i = 0; i < mm.columns.size(); ++i) col_of.emplace(mm.columns[i], i);

    for (size_t i = 0; i < system.size(); ++i) {
        if (system[i].is_zero()) throw std::invalid_argument("build_macaulay: zero polynomial");
        const unsigned df = system[i].degree();
        if (df > d) continue;
        for (const Monomial& t : monomials_upto(nvars, d - df, f.q()))
            mm.row_tags.emplace_back(t, i);
    }
    mm.mat = MatFq(f, mm.row_tags.size(), mm.columns.size());
    for (size_t rix = 0; rix < mm.row_tags.size(); ++rix) {
        const auto& [t, i] = mm.row_tags[rix];
        Polynomial prod = system[i].mul_term(t, 1).reduce_exponents();
        for (auto& [mono, c] : prod.terms()) mm.mat.set(rix, col_of.at(mono), c);
    }
    return mm;
}

const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Solved: return "Solved";
        case SolveStatus::Inconsistent: return "Inconsistent";
        default: return "DegreeCapReached";
    }
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct StepResult {
    bool inconsistent = false;
    std::vector<Polynomial> low_rows;
    size_t rows = 0, cols = 0, rank = 0;
};

struct BudgetExceeded {
    size_t rows, cols;
};

StepResult dense_step_q2(const std::vector<Polynomial>& sys, const std::vector<uint32_t>& active,
                         unsigned d, size_t column_cap, size_t budget, size_t nvars) {
    using namespace xl;
    const Gf& f = sys.front().field();
    const unsigned va = unsigned(active.size());
    ColumnSpace cs(va, d);
    if (cs.cols() > column_cap) throw BudgetExceeded{0, size_t(cs.cols())};

    std::vector<int> position(nvars, -1);
    for (unsigned i = 0; i < va; ++i) position[active[i]] = int(i);

    std::vector<PackedPoly> packed;
    packed.reserve(sys.size());
    size_t rows = 0;
    const BinomTable& bt = binom_table();
    for (const auto& p : sys) {
        packed.push_back(pack_poly(p, position));
        const unsigned df = packed.back().degree;
        if (df > d) throw std::invalid_argument("dense_step: polynomial above degree bound");
        for (unsigned s = 0; s + df <= d; ++s) rows += size_t(bt(va, s));
    }
    const size_t words = (cs.cols() + 63) / 64;
    if (rows * words * 8 > budget) throw BudgetExceeded{rows, size_t(cs.cols())};

    BitMatrix a(rows, cs.cols());
    size_t rix = 0;
    for (const auto& pp : packed) {
        const unsigned maxu = d - pp.degree;
        for (unsigned s = 0; s <= maxu; ++s) {
            for (const auto& sub : colex_subsets(va, s)) {
                Mask t;
                for (unsigned pos : sub) t.set(pos);
                uint64_t* row = a.row(rix++);
                for (const auto& term : pp.terms) {
                    uint64_t col = cs.index_of(term.mask.united(t));
                    row[col >> 6] ^= uint64_t(1) << (col & 63);
                }
            }
        }
    }

    BitRrefInfo info = bit_rref_inplace(a);

    StepResult res;
    res.rows = rows;
    res.cols = cs.cols();
    res.rank = info.rank;
    const uint64_t low_start = cs.degree_block_size(d);
    std::vector<uint32_t> global_of_position(active.begin(), active.end());
    for (uint32_t col : info.pivot_cols) {
        if (col < low_start) continue;
        if (col == cs.cols() - 1) {
            res.inconsistent = true;
            return res;
        }
        res.low_rows.push_back(
            unpack_row(f, a.row(size_t(info.row_of_pivot_col[col])), cs, global_of_position));
    }
    return res;
}

StepResult dense_step_generic(const std::vector<Polynomial>& sys,
                              const std::vector<uint32_t>& active, unsigned d, size_t column_cap,
                              size_t budget, size_t nvars) {
    const Gf& f = sys.front().field();
    std::vector<Monomial> cols_local = monomials_upto(active.size(), d, f.q());
    if (cols_local.size() > column_cap) throw BudgetExceeded{0, cols_local.size()};
    std::map<Monomial, size_t, GrevlexGreater> col_of;
    for (size_t i = 0; i < cols_local.size(); ++i) col_of.emplace(cols_local[i], i);

    std::vector<int> position(nvars, -1);
    for (size_t i = 0; i < active.size(); ++i) position[active[i]] = int(i);
    auto localize = [&](const Polynomial& p) {
        Polynomial out(f);
        for (auto& [m, c] : p.terms()) {
            Monomial lm;
            for (auto& [v, e] : m.exps) lm.exps.emplace_back(uint32_t(position[v]), e);
            std::sort(lm.exps.begin(), lm.exps.end());
            out.add_term(lm, c);
        }
        return out;
    };

    std::vector<std::pair<Monomial, size_t>> tags;
    std::vector<Polynomial> local;
    local.reserve(sys.size());
    for (size_t i = 0; i < sys.size(); ++i) {
        local.push_back(localize(sys[i]));
        const unsigned df = local.back().degree();
        for (const Monomial& t : monomials_upto(active.size(), d - df, f.q()))
            tags.emplace_back(t, i);
    }
    if (tags.size() * cols_local.size() > budget) throw BudgetExceeded{tags.size(), cols_local.size()};

    ByteMatrix a(tags.size(), cols_local.size());
    for (size_t rix = 0; rix < tags.size(); ++rix) {
        Polynomial prod = local[tags[rix].second].mul_term(tags[rix].first, 1).reduce_exponents();
        for (auto& [mono, c] : prod.terms()) a.set(rix, col_of.at(mono), c);
    }
    BitRrefInfo info = byte_rref_inplace(a, f);

    StepResult res;
    res.rows = tags.size();
    res.cols = cols_local.size();
    res.rank = info.rank;
    for (uint32_t col : info.pivot_cols) {
        if (cols_local[col].degree() >= d) continue;
        if (cols_local[col].is_one()) {
            res.inconsistent = true;
            return res;
        }
        Polynomial p(f);
        const size_t row = size_t(info.row_of_pivot_col[col]);
        for (size_t j = 0; j < cols_local.size(); ++j) {
            uint8_t c = a.get(row, j);
            if (!c) continue;
            Monomial g;
            for (auto& [v, e] : cols_local[j].exps) g.exps.emplace_back(active[v], e);
            p.add_term(g, c);
        }
        res.low_rows.push_back(std::move(p));
    }
    return res;
}

std::vector<uint32_t> active_vars(const std::vector<Polynomial>& polys, size_t nvars) {
    std::vector<char> seen(nvars, 0);
    for (const auto& p : polys)
        for (auto& [m, c] : p.terms()) {
            (void)c;
            for (auto& [v, e] : m.exps) {
                (void)e;
                seen[v] = 1;
            }
        }
    std::vector<uint32_t> act;
    for (size_t v = 0; v < nvars; ++v)
        if (seen[v]) act.push_back(uint32_t(v));
    return act;
}

}  // namespace

SolveReport xl_solve(const std::vector<Polynomial>& system, size_t nvars, XlOptions opts) {
    SolveReport rep;
    if (system.empty()) {
        rep.note = "empty system";
        return rep;
    }
    const Gf f = system.front().field();

    std::vector<Polynomial> original, F0;
    for (const auto& p : system) {
        Polynomial r = p.reduce_exponents();
        if (r.is_zero()) continue;
        if (r.degree() == 0) {
            rep.status = SolveStatus::Inconsistent;
            rep.solution.assign(nvars, -1);
            return rep;
        }
        original.push_back(r);
        F0.push_back(std::move(r));
    }
    rep.solution.assign(nvars, -1);
    if (F0.empty()) {
        rep.status = SolveStatus::Solved;
        rep.note = "all equations trivially zero";
        return rep;
    }

    std::vector<int16_t>& assign = rep.solution;
    std::vector<std::pair<uint32_t, Polynomial>> elim_stack;
    const std::vector<uint32_t> initially_active = active_vars(F0, nvars);

    unsigned maxdeg = 0;
    for (const auto& p : F0) maxdeg = std::max(maxdeg, p.degree());
    const unsigned d_start = opts.d_start ? opts.d_start : std::max(1u, maxdeg);
    if (opts.d_cap == 0 || opts.d_cap < d_start)
        throw std::invalid_argument("xl_solve: d_cap must be at least d_start");

    std::vector<Polynomial> L;    // harvested basis below the current degree
    std::vector<Polynomial> Lhi;  // falls delivered by the oversize hook

    auto note_production = [&](unsigned d, bool is_fall) {
        if (is_fall) rep.d_ff = rep.d_ff < 0 ? int(d) : std::min(rep.d_ff, int(d));
        rep.d_max = std::max(rep.d_max, int(d));
    };

    // Fold constants and linear rows into assignments / eliminations until
    // none remain. Returns false on inconsistency.
    auto consume_linear = [&](bool& progressed) -> bool {
        for (;;) {
            Polynomial* lin = nullptr;
            for (auto* vec : {&F0, &L, &Lhi}) {
                for (auto& p : *vec) {
                    if (p.is_zero()) continue;
                    if (p.degree() == 0) return false;
                    if (p.degree() == 1) {
                        lin = &p;
                        break;
                    }
                }
                if (lin) break;
            }
            if (!lin) return true;
            progressed = true;
            const Polynomial linp = *lin;
            const Monomial lead = linp.leading_monomial();
            const uint32_t var = lead.exps[0].first;
            const uint8_t c = linp.coeff(lead);
            Polynomial rest = linp;
            rest.add_term(lead, f.neg(c));
            const Polynomial repl = rest.scale(f.neg(f.inv(c)));
            const bool constant =
                repl.is_zero() || (repl.term_count() == 1 && repl.terms().begin()->first.is_one());
            if (constant) {
                assign[var] = repl.is_zero() ? 0 : int16_t(repl.terms().begin()->second);
            } else {
                elim_stack.emplace_back(var, repl);
            }
            for (auto* vec : {&F0, &L, &Lhi}) {
                for (auto& p : *vec) {
                    p = constant ? p.substitute(assign)
                                 : p.substitute_var(var, repl).reduce_exponents();
                }
                vec->erase(std::remove_if(vec->begin(), vec->end(),
                                          [](const Polynomial& p) { return p.is_zero(); }),
                           vec->end());
            }
        }
    };

    auto consumed_everything = [&]() { return F0.empty() && L.empty() && Lhi.empty(); };

    // back-substitute eliminated variables; 1 solved, 0 rank-deficient
    auto finalize = [&]() -> int {
        for (auto it = elim_stack.rbegin(); it != elim_stack.rend(); ++it) {
            Polynomial val = it->second.substitute(assign);
            if (val.is_zero()) {
                assign[it->first] = 0;
            } else if (val.term_count() == 1 && val.terms().begin()->first.is_one()) {
                assign[it->first] = int16_t(val.terms().begin()->second);
            } else {
                return 0;
            }
        }
        for (uint32_t v : initially_active)
            if (assign[v] < 0) return 0;
        std::vector<uint8_t> point(nvars, 0);
        for (size_t v = 0; v < nvars; ++v)
            if (assign[v] > 0) point[v] = uint8_t(assign[v]);
        for (const auto& p : original)
            if (p.eval(point) != 0)
                throw std::logic_error("xl_solve: assignment fails the original system");
        return 1;
    };

    // fixpoint at one degree: 0 no progress, 1 progressed, 2 inconsistent,
    // 3 over budget
    auto fixpoint_at = [&](unsigned dd, bool record_falls) -> int {
        int result = 0;
        for (;;) {
            std::vector<Polynomial> sys = F0;
            sys.insert(sys.end(), Lhi.begin(), Lhi.end());
            sys.insert(sys.end(), L.begin(), L.end());
            if (sys.empty()) return result;
            unsigned dmax_sys = 0;
            for (auto& p : sys) dmax_sys = std::max(dmax_sys, p.degree());
            if (dmax_sys > dd) return result;  // cannot process at this degree
            std::vector<uint32_t> act = active_vars(sys, nvars);

            Clock::time_point t0 = Clock::now();
            StepResult sr;
            try {
                if (f.q() == 2 && act.size() <= xl::kMaxPackedVars && dd <= 8)
                    sr = dense_step_q2(sys, act, dd, opts.column_cap, opts.memory_budget_bytes,
                                       nvars);
                else
                    sr = dense_step_generic(sys, act, dd, opts.column_cap,
                                            opts.memory_budget_bytes, nvars);
            } catch (const BudgetExceeded&) {
                return 3;
            }
            const size_t before = L.size();
            size_t falls = 0;
            if (!sr.inconsistent) {
                L = std::move(sr.low_rows);
                falls = L.size() > before ? L.size() - before : 0;
                // hook falls below this degree are now represented in L
                Lhi.erase(std::remove_if(Lhi.begin(), Lhi.end(),
                                         [&](const Polynomial& p) { return p.degree() < dd; }),
                          Lhi.end());
            }
            SolveStep st{dd, sr.rows, sr.cols, sr.rank, falls, ms_since(t0)};
            rep.steps.push_back(st);
            if (opts.trace) opts.trace(st);
            if (sr.inconsistent) {
                if (record_falls) note_production(dd, true);
                return 2;
            }
            bool lin_progress = false;
            if (!consume_linear(lin_progress)) return 2;
            if (falls == 0 && !lin_progress) return result;
            result = 1;
            if (record_falls && falls > 0) note_production(dd, true);
            if (record_falls && lin_progress) note_production(dd, false);
            if (consumed_everything()) return 1;
        }
    };

    // fold linear input before any Macaulay work
    {
        bool progressed = false;
        if (!consume_linear(progressed)) {
            rep.status = SolveStatus::Inconsistent;
            return rep;
        }
        if (progressed) rep.d_max = std::max(rep.d_max, 1);
        if (consumed_everything()) {
            int fin = finalize();
            rep.status = fin == 1 ? SolveStatus::Solved : SolveStatus::DegreeCapReached;
            if (fin != 1) rep.note = "solution not unique at the linear level";
            return rep;
        }
    }

    for (unsigned d = d_start; d <= opts.d_cap; ++d) {
        int rc = fixpoint_at(d, true);
        if (rc == 2) {
            rep.status = SolveStatus::Inconsistent;
            return rep;
        }
        if (rc == 3) {
            if (!opts.oversize) {
                rep.status = SolveStatus::DegreeCapReached;
                rep.note = "degree " + std::to_string(d) + " exceeds the memory budget";
                return rep;
            }
            for (;;) {
                std::vector<Polynomial> sys = F0;
                sys.insert(sys.end(), Lhi.begin(), Lhi.end());
                sys.insert(sys.end(), L.begin(), L.end());
                Clock::time_point t0 = Clock::now();
                auto fallsOpt = opts.oversize(d, sys);
                if (!fallsOpt) {
                    rep.status = SolveStatus::DegreeCapReached;
                    rep.note = "degree " + std::to_string(d) +
                               " exceeds the memory budget (no structured step available)";
                    return rep;
                }
                size_t added = 0;
                for (Polynomial p : *fallsOpt) {
                    p = p.substitute(assign);
                    for (const auto& [var, repl] : elim_stack) p = p.substitute_var(var, repl);
                    p = p.reduce_exponents();
                    if (!p.is_zero() && p.degree() < d) {
                        Lhi.push_back(std::move(p));
                        ++added;
                    }
                }
                SolveStep st{d, 0, 0, 0, added, ms_since(t0)};
                rep.steps.push_back(st);
                if (opts.trace) opts.trace(st);
                if (added == 0) break;
                note_production(d, true);
                bool lin_progress = false;
                if (!consume_linear(lin_progress)) {
                    rep.status = SolveStatus::Inconsistent;
                    return rep;
                }
                bool cascade_progress = false;
                if (!consumed_everything() && d >= 2) {
                    int rc2 = fixpoint_at(d - 1, false);
                    if (rc2 == 2) {
                        rep.status = SolveStatus::Inconsistent;
                        return rep;
                    }
                    if (rc2 == 3) {
                        rep.status = SolveStatus::DegreeCapReached;
                        rep.note = "cascade below degree " + std::to_string(d) + " over budget";
                        return rep;
                    }
                    cascade_progress = rc2 == 1;
                    if (cascade_progress) rep.d_max = std::max(rep.d_max, int(d));
                }
                if (consumed_everything()) break;
                if (!lin_progress && !cascade_progress) break;
            }
        }
        if (consumed_everything()) {
            int fin = finalize();
            if (fin == 1) {
                rep.status = SolveStatus::Solved;
                if (rep.d_max < 0) rep.d_max = int(d);
                return rep;
            }
            rep.status = SolveStatus::DegreeCapReached;
            rep.note = "solution not unique";
            return rep;
        }
    }
    rep.status = SolveStatus::DegreeCapReached;
    return rep;
}

OjSolveOutcome solve_with_J(const DecodingInstance& inst, unsigned target_rank,
                            const Specialization& spec, XlOptions opts, bool adjoin_degree_r) {
    OjSolveOutcome out;
    const FieldTower& t = *inst.code.tower;
    const Gf& f = t.base();
    const unsigned n = unsigned(inst.code.n), k = unsigned(inst.code.k), r = target_rank;

    ExtendedCode ext = extend_code(inst);
    BilinearSystem sys = build_oj_system(ext, r, spec);
    const VarSpace& vs = sys.vars;

    out.has_minors = (r >= 1 && r <= n - k - 1);
    bool staged = false;
    if (out.has_minors) {
        MaxMinorsMatrix M = build_matrix_M(ext, r, spec);
        out.harvest = extract_J_equations(M, vs, spec, f, adjoin_degree_r);
        out.regime = out.harvest.regime;

        if (out.regime == Regime::Underdetermined && f.q() == 2) {
            staged = true;
            XlOptions aopts = opts;
            aopts.d_start = out.harvest.degree;
            if (opts.d_cap == 0) aopts.d_cap = r + 3;
            auto ctx = MinorFallContext::build(M, out.harvest, vs, opts.seed);
            std::shared_ptr<MinorFallContext> shared_ctx(std::move(ctx));
            if (shared_ctx) {
                auto cache = std::make_shared<std::map<unsigned, std::optional<std::vector<Polynomial>>>>();
                size_t budget = opts.memory_budget_bytes;
                aopts.oversize = [shared_ctx, cache, budget](
                                     unsigned d, const std::vector<Polynomial>&)
                    -> std::optional<std::vector<Polynomial>> {
                    auto it = cache->find(d);
                    if (it == cache->end())
                        it = cache->emplace(d, shared_ctx->falls_at(d, budget)).first;
                    return it->second;
                };
            }
            SolveReport repA = xl_solve(out.harvest.polys, vs.total(), aopts);
            out.report = repA;
            if (repA.status == SolveStatus::Solved) {
                std::vector<Polynomial> fsub;
                bool bad = false;
                for (const auto& p : sys.polys) {
                    Polynomial q = p.substitute(repA.solution).reduce_exponents();
                    if (q.is_zero()) continue;
                    if (q.degree() == 0) {
                        bad = true;
                        break;
                    }
                    fsub.push_back(std::move(q));
                }
                if (bad) {
                    out.report.status = SolveStatus::Inconsistent;
                    out.report.note = "coefficient solution does not extend to the support";
                } else if (!fsub.empty()) {
                    XlOptions bopts = opts;
                    bopts.d_start = 0;
                    bopts.d_cap = 2;
                    bopts.oversize = nullptr;
                    SolveReport repB = xl_solve(fsub, vs.total(), bopts);
                    for (auto& st : repB.steps) out.report.steps.push_back(st);
                    if (repB.status == SolveStatus::Solved) {
                        for (size_t v = 0; v < vs.total(); ++v)
                            if (repB.solution[v] >= 0) out.report.solution[v] = repB.solution[v];
                    } else {
                        out.report.status = repB.status;
                        out.report.note =
                            "support stage: " + std::string(status_name(repB.status));
                    }
                }
            }
        }
    }

    if (!staged) {
        std::vector<Polynomial> joint = sys.polys;
        joint.insert(joint.end(), out.harvest.polys.begin(), out.harvest.polys.end());
        if (adjoin_degree_r)
            joint.insert(joint.end(), out.harvest.degree_r_polys.begin(),
                         out.harvest.degree_r_polys.end());
        XlOptions jopts = opts;
        jopts.d_start = 0;
        if (opts.d_cap == 0) {
            unsigned target = r + 2;
            if (out.has_minors) {
                if (out.regime == Regime::Overdetermined)
                    target = r;
                else if (out.regime == Regime::Intermediate)
                    target = r + 1;
            }
            unsigned maxdeg = 2;
            for (auto& p : joint) maxdeg = std::max(maxdeg, p.degree());
            jopts.d_cap = std::max(target + 1, maxdeg);
        }
        out.report = xl_solve(joint, vs.total(), jopts);
    }

    if (out.report.status != SolveStatus::Solved) return out;

    auto S_sym = oj_symbolic_S(f, t.m(), r, vs, spec);
    auto C_sym = oj_symbolic_C(f, n, r, vs, spec);
    auto value_of = [&](const Polynomial& p) -> uint8_t {
        Polynomial v = p.substitute(out.report.solution);
        if (v.is_zero()) return 0;
        if (v.term_count() == 1 && v.terms().begin()->first.is_one())
            return v.terms().begin()->second;
        throw std::logic_error("solve_with_J: unresolved entry after solve");
    };
    out.S = MatFq(f, t.m(), r);
    for (unsigned i = 0; i < t.m(); ++i)
        for (unsigned j = 0; j < r; ++j) out.S.set(i, j, value_of(S_sym[i][j]));
    out.C = MatFq(f, r, n);
    for (unsigned i = 0; i < r; ++i)
        for (unsigned j = 0; j < n; ++j) out.C.set(i, j, value_of(C_sym[i][j]));

    std::vector<ExtElem> word_perm = error_from_support(t, out.S, out.C);
    out.word.assign(n, t.zero());
    for (unsigned i = 0; i < n; ++i) out.word[ext.perm[i]] = word_perm[i];
    out.solved = true;
    return out;
}

}  // namespace ranksyz
