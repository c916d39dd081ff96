#pragma once

// Property suite over an ideal context.  Every check states one consequence
// of the theory that is decidable on concrete modules and reports Pass, Fail
// (with a recomputable witness) or Skipped (with the reason).  A check never
// passes vacuously: if its hypothesis filtered out everything, it is skipped,
// and if members were excluded because a membership or a projective dimension
// stayed undecided, that is counted and can make the whole run inconclusive.

#include "expr.hpp"
#include "io.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <set>

namespace itlab {

struct CheckResult {
    std::string id;
    std::string statement;
    enum class Status { Pass, Fail, Skipped } status = Status::Skipped;
    bool probe = false;        // sharpness probe: reported, never gates the exit
    bool inconclusive = false; // skipped/empty because something stayed undecided
    int qualifying = 0;        // members (or pairs) meeting the hypothesis
    int comparisons = 0;       // individual equalities/inequalities decided
    int excluded = 0;          // dropped because some input stayed undecided
    std::vector<std::string> witnesses;
    std::string skip_reason;
    std::string note;
};

struct SuiteConfig {
    int depth = 4;       // syzygy/cosyzygy depth of the standard corpus
    int count = 30;      // random corpus members
    std::uint64_t seed = 0;
    int cap = 50;        // stage cap for resolutions and memberships
    int max_steps = 200; // phi iteration cap
    int ext_bound = 8;   // Ext horizon when a membership has no exact certificate
    int jmax = 3;        // Ext degrees sampled by the transfer checks
    int pk = 2;          // corner Ext transfer: X with k+1 cover stages on S, degrees 1..k
    int pair_budget = 400;
    std::vector<std::string> only; // run only ids with one of these prefixes
    std::vector<std::string> skip; // drop ids with one of these prefixes
};

template <class F>
struct SuiteReport {
    std::string algebra;
    std::vector<std::string> S;
    SuiteConfig cfg;
    StrongIdemResult strong;
    Ingredients ing;
    int corpus_size = 0;
    std::vector<CheckResult> checks;
    int passes = 0, fails = 0, probe_fails = 0, skips = 0, inconclusive = 0;
    int exit_code() const { return fails ? 1 : (inconclusive ? 2 : 0); }
};

// ---------------------------------------------------------------------------
// Standard corpus: simples, projectives, injectives, their radicals and tops,
// syzygy/cosyzygy strings, the quotient-side family viewed over the algebra,
// the trace ideal itself, and seeded random modules.  Deterministic per seed;
// labels follow the module-expression grammar where one exists.
// ---------------------------------------------------------------------------

template <class F>
Corpus<F> gen_corpus(IdealContext<F>& ctx, std::uint64_t seed, int count, int depth) {
    const AlgPtr<F>& A = ctx.A;
    Corpus<F> out;
    std::set<std::string> seen;
    auto add = [&](const std::string& label, Module<F> m) {
        if (m.total() == 0) return;
        if (!seen.insert(label).second) return;
        out.emplace_back(label, std::move(m));
    };
    const auto& vn = A->vertex_names;
    for (int v = 0; v < A->nv(); ++v) add("S(" + vn[v] + ")", simple_module(A, v));
    for (int v = 0; v < A->nv(); ++v) add("P(" + vn[v] + ")", projective_module(A, v));
    for (int v = 0; v < A->nv(); ++v) add("I(" + vn[v] + ")", injective_module(A, v));
    for (int v = 0; v < A->nv(); ++v) {
        Module<F> P = projective_module(A, v);
        add("Rad(P(" + vn[v] + "))", submodule(P, radical_sub(P)).mod);
        Module<F> I = injective_module(A, v);
        add("Rad(I(" + vn[v] + "))", submodule(I, radical_sub(I)).mod);
        add("Top(I(" + vn[v] + "))", top_module(I).mod);
    }
    for (int v = 0; v < A->nv(); ++v) {
        Module<F> m = simple_module(A, v);
        for (int n = 1; n <= depth; ++n) {
            m = syzygy(m);
            if (m.total() == 0) break;
            add("Omega(" + std::to_string(n) + ",S(" + vn[v] + "))", m);
        }
        m = simple_module(A, v);
        for (int n = 1; n <= depth; ++n) {
            m = cosyzygy(m);
            if (m.total() == 0) break;
            add("OmegaInv(" + std::to_string(n) + ",S(" + vn[v] + "))", m);
        }
    }
    add("TraceIdeal", ctx.ideal_sub.mod);
    if (!ctx.quot_zero) {
        const AlgPtr<F>& Q = ctx.quot.Q;
        const auto& qn = Q->vertex_names;
        add("Infl(L/A)", ctx.quot_mod.mod);
        for (int a = 0; a < Q->nv(); ++a) {
            add("Infl(S(" + qn[a] + "))", inflate_quotient(ctx.quot, A, simple_module(Q, a)));
            add("Infl(P(" + qn[a] + "))", inflate_quotient(ctx.quot, A, projective_module(Q, a)));
        }
        for (int a = 0; a < Q->nv(); ++a) {
            Module<F> m = simple_module(Q, a);
            for (int n = 1; n <= depth; ++n) {
                m = syzygy(m);
                if (m.total() == 0) break;
                add("Infl(Omega(" + std::to_string(n) + ",S(" + qn[a] + ")))",
                    inflate_quotient(ctx.quot, A, m));
            }
        }
        std::mt19937_64 rq(seed ^ 0x51dfce5a11ULL);
        int nq = std::min(10, std::max(4, count / 3));
        for (int k = 0; k < nq; ++k)
            add("Infl(Random(" + std::to_string(k) + "))",
                inflate_quotient(ctx.quot, A, random_module(Q, rq)));
    }
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0xd1b54a32d192ed03ULL);
    for (int k = 0; k < count; ++k)
        add("Random(" + std::to_string(k) + ")", random_module(A, rng));
    return out;
}

namespace detail {

inline bool id_has_prefix(const std::string& id, const std::vector<std::string>& pre) {
    for (const auto& p : pre)
        if (id.compare(0, p.size(), p) == 0) return true;
    return false;
}

inline bool id_selected(const std::string& id, const SuiteConfig& cfg) {
    if (!cfg.only.empty() && !id_has_prefix(id, cfg.only)) return false;
    return !id_has_prefix(id, cfg.skip);
}

inline std::vector<int> stride_sample(int n, int want) {
    std::vector<int> out;
    if (n <= 0 || want <= 0) return out;
    int step = std::max(1, n / std::max(1, want));
    for (int i = 0; i < n && (int)out.size() < want; i += step) out.push_back(i);
    return out;
}

// Everything the checks share: exact per-member facts, membership and phi
// caches, lazy glueings and resolutions.
template <class F>
struct SuiteData {
    IdealContext<F>& ctx;
    const Corpus<F>& corpus;
    SuiteConfig cfg;
    StrongIdemResult strong;
    Ingredients ing;

    std::vector<char> killed, topS, socS;
    std::vector<Membership> pinf, iinf, mT, mTt, p1;
    std::vector<PhiResult> phil, phir;
    std::vector<std::optional<GlueingResult<F>>> gp0, gi0;
    std::vector<std::optional<Module<F>>> corner_restr;
    std::map<int, Resolution<F>> res_cache;

    SuiteData(IdealContext<F>& c, const Corpus<F>& co, const SuiteConfig& f,
              StrongIdemResult st, Ingredients in)
        : ctx(c), corpus(co), cfg(f), strong(std::move(st)), ing(std::move(in)) {}

    int n() const { return (int)corpus.size(); }
    const std::string& lab(int i) const { return corpus[i].first; }
    const Module<F>& mod(int i) const { return corpus[i].second; }

    GlueingResult<F>& p0(int i) {
        if (!gp0[i]) gp0[i] = glueing(ctx, mod(i), GluePair::P0_side);
        return *gp0[i];
    }
    GlueingResult<F>& i0(int i) {
        if (!gi0[i]) gi0[i] = glueing(ctx, mod(i), GluePair::I0_side);
        return *gi0[i];
    }
    Resolution<F>& res(int i) {
        auto it = res_cache.find(i);
        if (it == res_cache.end()) it = res_cache.emplace(i, resolve(mod(i), 1)).first;
        return it->second;
    }
    const Module<F>& eR(int i) { // corner restriction
        if (!corner_restr[i]) corner_restr[i] = restrict_corner(ctx.corner, mod(i));
        return *corner_restr[i];
    }

    void precompute() {
        const auto& A = *ctx.A;
        int m = n();
        killed.assign(m, 0);
        topS.assign(m, 0);
        socS.assign(m, 0);
        gp0.resize(m);
        gi0.resize(m);
        corner_restr.resize(m);
        for (int i = 0; i < m; ++i) {
            const Module<F>& M = mod(i);
            bool k = true;
            for (int b : ctx.ideal)
                if (!act_basis(M, b).is_zero()) {
                    k = false;
                    break;
                }
            killed[i] = k;
            bool t = true;
            for (auto& [v, j] : top_generators(M)) {
                (void)j;
                if (!ctx.in_S[v]) t = false;
            }
            topS[i] = t;
            bool s = true;
            auto soc = socle_sub(M);
            for (int v = 0; v < A.nv(); ++v)
                if (!ctx.in_S[v] && soc[v].cols != 0) s = false;
            socS[i] = s;

            pinf.push_back(membership(ctx, M, Cat::P_inf, cfg.cap));
            iinf.push_back(membership(ctx, M, Cat::I_inf, cfg.cap));
            mT.push_back(membership(ctx, M, Cat::T, cfg.ext_bound));
            mTt.push_back(membership(ctx, M, Cat::T_tilde, cfg.ext_bound));
            p1.push_back(membership_P(ctx, M, 1, cfg.cap));
            phil.push_back(phi_module(*ctx.sess, M, cfg.max_steps));
            phir.push_back(phi_right(*ctx.mirror->sess, M, cfg.max_steps));
        }
    }
};

inline void finalize_check(CheckResult& c) {
    if (c.witnesses.size() > 8) {
        std::size_t extra = c.witnesses.size() - 8;
        c.witnesses.resize(8);
        c.witnesses.push_back("... and " + std::to_string(extra) + " more");
    }
    if (!c.witnesses.empty())
        c.status = CheckResult::Status::Fail;
    else if (c.comparisons > 0)
        c.status = CheckResult::Status::Pass;
    else if (c.excluded > 0) {
        c.status = CheckResult::Status::Skipped;
        c.inconclusive = true;
        c.skip_reason = "every qualifying member stayed undecided";
    } else {
        c.status = CheckResult::Status::Skipped;
        c.skip_reason = "no qualifying modules";
    }
    if (c.excluded > 0 && c.status != CheckResult::Status::Skipped) {
        if (!c.note.empty()) c.note += "; ";
        c.note += std::to_string(c.excluded) + " excluded as undecided";
    }
}

inline CheckResult skip_check(std::string id, std::string stmt, std::string reason,
                              bool inconclusive) {
    CheckResult c;
    c.id = std::move(id);
    c.statement = std::move(stmt);
    c.status = CheckResult::Status::Skipped;
    c.skip_reason = std::move(reason);
    c.inconclusive = inconclusive;
    return c;
}

// Gate shared by everything that assumes the trace ideal is strong
// idempotent.  Returns a skip when the gate is not a certified Yes.
template <class F>
std::optional<CheckResult> gate_strong(const SuiteData<F>& D, const std::string& id,
                                       const std::string& stmt) {
    if (D.strong.yes()) return std::nullopt;
    bool unk = D.strong.status == StrongIdemResult::Status::Unknown;
    return skip_check(id, stmt,
                      unk ? "strong idempotency undecided"
                          : "the ideal is not strong idempotent",
                      unk);
}

// ---------------------------------------------------------------------------

template <class F>
CheckResult chk_hom_orthogonality(SuiteData<F>& D) {
    CheckResult c;
    c.id = "hom-orthogonality";
    c.statement = "modules killed by the ideal admit no nonzero maps from modules whose top "
                  "lies on the vertex set, nor into modules whose socle does";
    int budget = D.cfg.pair_budget;
    for (int i = 0; i < D.n() && c.comparisons < budget; ++i) {
        if (!D.killed[i]) continue;
        for (int j = 0; j < D.n() && c.comparisons < budget; ++j) {
            if (D.socS[j]) {
                ++c.qualifying;
                ++c.comparisons;
                int h = hom_dim(D.mod(i), D.mod(j));
                if (h != 0)
                    c.witnesses.push_back("Hom(" + D.lab(i) + ", " + D.lab(j) + ") has dim " +
                                          std::to_string(h) + " but the source is killed and "
                                          "the target has socle on the vertex set");
            }
            if (D.topS[j]) {
                ++c.qualifying;
                ++c.comparisons;
                int h = hom_dim(D.mod(j), D.mod(i));
                if (h != 0)
                    c.witnesses.push_back("Hom(" + D.lab(j) + ", " + D.lab(i) + ") has dim " +
                                          std::to_string(h) + " but the source has top on the "
                                          "vertex set and the target is killed");
            }
        }
    }
    finalize_check(c);
    return c;
}

template <class F>
CheckResult chk_glueing_exactness(SuiteData<F>& D) {
    CheckResult c;
    c.id = "glueing-exactness";
    c.statement = "both canonical sequences of every member are exact, agree with the "
                  "independent trace computation, and their pieces satisfy the side facts";
    for (int i = 0; i < D.n(); ++i) {
        for (GluePair side : {GluePair::P0_side, GluePair::I0_side}) {
            ++c.qualifying;
            ++c.comparisons;
            auto& g = side == GluePair::P0_side ? D.p0(i) : D.i0(i);
            if (!(g.exact && g.trace_agrees && g.part_checks))
                c.witnesses.push_back(
                    D.lab(i) + (side == GluePair::P0_side ? " (trace side)" : " (annihilator side)") +
                    ": exact=" + std::to_string(g.exact) +
                    " trace=" + std::to_string(g.trace_agrees) +
                    " parts=" + std::to_string(g.part_checks));
        }
    }
    finalize_check(c);
    return c;
}

template <class F>
CheckResult chk_torsion_intersection(SuiteData<F>& D) {
    const std::string stmt =
        "a member has all cover stages on the vertex set exactly when its top lies there and "
        "the dual vanishing holds, and dually for cosyzygy stages";
    if (auto s = gate_strong(D, "torsion-intersection", stmt)) return *s;
    CheckResult c;
    c.id = "torsion-intersection";
    c.statement = stmt;
    auto decided = [](const Membership& m) { return m.status != Membership::Status::Unknown; };
    for (int i = 0; i < D.n(); ++i) {
        ++c.qualifying;
        if (decided(D.pinf[i]) && decided(D.mTt[i])) {
            ++c.comparisons;
            bool lhs = D.pinf[i].yes();
            bool rhs = D.topS[i] && D.mTt[i].yes();
            if (lhs != rhs)
                c.witnesses.push_back(D.lab(i) + ": covered-forever=" + std::to_string(lhs) +
                                      " vs top-on-S=" + std::to_string((bool)D.topS[i]) +
                                      " and dual-vanishing=" + std::to_string(D.mTt[i].yes()));
        } else
            ++c.excluded;
        if (decided(D.iinf[i]) && decided(D.mT[i])) {
            ++c.comparisons;
            bool lhs = D.iinf[i].yes();
            bool rhs = D.socS[i] && D.mT[i].yes();
            if (lhs != rhs)
                c.witnesses.push_back(D.lab(i) + ": co-covered-forever=" + std::to_string(lhs) +
                                      " vs socle-on-S=" + std::to_string((bool)D.socS[i]) +
                                      " and vanishing=" + std::to_string(D.mT[i].yes()));
        } else
            ++c.excluded;
    }
    finalize_check(c);
    return c;
}

template <class F>
CheckResult chk_glueing_into_infinite(SuiteData<F>& D) {
    const std::string stmt =
        "for members with vanishing Ext against the quotient, the annihilator-side quotient "
        "keeps all cosyzygy stages on the vertex set; dually for the trace part";
    if (auto s = gate_strong(D, "glueing-into-infinite-classes", stmt)) return *s;
    CheckResult c;
    c.id = "glueing-into-infinite-classes";
    c.statement = stmt;
    for (int i = 0; i < D.n(); ++i) {
        if (D.mT[i].yes()) {
            ++c.qualifying;
            Membership m = membership(D.ctx, D.i0(i).quot.mod, Cat::I_inf, D.cfg.cap);
            if (m.yes())
                ++c.comparisons;
            else if (m.no())
                c.witnesses.push_back(D.lab(i) + ": torsion-free part leaves the co-covered "
                                      "class at stage " + std::to_string(m.witness.stage));
            else
                ++c.excluded;
        }
        if (D.mTt[i].yes()) {
            ++c.qualifying;
            Membership m = membership(D.ctx, D.p0(i).sub.mod, Cat::P_inf, D.cfg.cap);
            if (m.yes())
                ++c.comparisons;
            else if (m.no())
                c.witnesses.push_back(D.lab(i) + ": trace part leaves the covered class at "
                                      "stage " + std::to_string(m.witness.stage));
            else
                ++c.excluded;
        }
    }
    finalize_check(c);
    return c;
}

template <class F>
CheckResult chk_quotient_phi(SuiteData<F>& D) {
    const std::string stmt = "phi over the quotient algebra never exceeds phi over the full "
                             "algebra on modules killed by the ideal";
    if (D.ctx.quot_zero)
        return skip_check("quotient-phi-comparison", stmt, "the quotient algebra is zero", false);
    if (auto s = gate_strong(D, "quotient-phi-comparison", stmt)) return *s;
    if (D.ing.pd_left_quot.kind != PdResult::Kind::Finite)
        return skip_check("quotient-phi-comparison", stmt,
                          "left projective dimension of the quotient is " +
                              vu_from_pd(D.ing.pd_left_quot).str(),
                          D.ing.pd_left_quot.kind == PdResult::Kind::Unknown);
    CheckResult c;
    c.id = "quotient-phi-comparison";
    c.statement = stmt;
    for (int i = 0; i < D.n(); ++i) {
        if (!D.killed[i]) continue;
        ++c.qualifying;
        Module<F> X = deflate_to_quotient(D.ctx.quot, D.mod(i));
        PhiResult pq = phi_module(*D.ctx.sess_quot, X, D.cfg.max_steps);
        if (pq.known() && D.phil[i].known()) {
            ++c.comparisons;
            if (pq.value > D.phil[i].value)
                c.witnesses.push_back(D.lab(i) + ": phi over quotient " +
                                      std::to_string(pq.value) + " > phi over algebra " +
                                      std::to_string(D.phil[i].value));
        } else
            ++c.excluded;
    }
    finalize_check(c);
    return c;
}

template <class F>
CheckResult chk_corner_phi(SuiteData<F>& D) {
    const std::string stmt = "phi and psi agree with their corner values on members whose "
                             "cover stages all lie on the vertex set";
    if (auto s = gate_strong(D, "corner-phi-transfer", stmt)) return *s;
    CheckResult c;
    c.id = "corner-phi-transfer";
    c.statement = stmt;
    for (int i = 0; i < D.n(); ++i) {
        if (D.pinf[i].status == Membership::Status::Unknown) {
            ++c.excluded;
            continue;
        }
        if (!D.pinf[i].yes()) continue;
        ++c.qualifying;
        const Module<F>& eM = D.eR(i);
        PhiResult pg = phi_module(*D.ctx.sess_corner, eM, D.cfg.max_steps);
        if (pg.known() && D.phil[i].known()) {
            ++c.comparisons;
            if (pg.value != D.phil[i].value)
                c.witnesses.push_back(D.lab(i) + ": corner phi " + std::to_string(pg.value) +
                                      " != phi " + std::to_string(D.phil[i].value));
        } else
            ++c.excluded;
        PsiResult qL = psi_module(*D.ctx.sess, D.mod(i), D.cfg.max_steps);
        PsiResult qG = psi_module(*D.ctx.sess_corner, eM, D.cfg.max_steps);
        if (qL.known && qG.known) {
            ++c.comparisons;
            if (qL.value != qG.value)
                c.witnesses.push_back(D.lab(i) + ": corner psi " + std::to_string(qG.value) +
                                      " != psi " + std::to_string(qL.value));
        } else
            ++c.excluded;
    }
    finalize_check(c);
    return c;
}

template <class F>
CheckResult chk_corner_phi_dual(SuiteData<F>& D) {
    const std::string stmt = "the right-hand phi and psi agree with their corner values on "
                             "members whose cosyzygy stages all lie on the vertex set";
    if (auto s = gate_strong(D, "corner-phi-transfer-dual", stmt)) return *s;
    CheckResult c;
    c.id = "corner-phi-transfer-dual";
    c.statement = stmt;
    IdealContext<F>& mir = *D.ctx.mirror;
    for (int i = 0; i < D.n(); ++i) {
        if (D.iinf[i].status == Membership::Status::Unknown) {
            ++c.excluded;
            continue;
        }
        if (!D.iinf[i].yes()) continue;
        ++c.qualifying;
        Module<F> dm = dual_module(D.mod(i));
        Module<F> edm = restrict_corner(mir.corner, dm);
        PhiResult pg = phi_module(*mir.sess_corner, edm, D.cfg.max_steps);
        if (pg.known() && D.phir[i].known()) {
            ++c.comparisons;
            if (pg.value != D.phir[i].value)
                c.witnesses.push_back(D.lab(i) + ": dual corner phi " + std::to_string(pg.value) +
                                      " != right phi " + std::to_string(D.phir[i].value));
        } else
            ++c.excluded;
        PsiResult qL = psi_module(*mir.sess, dm, D.cfg.max_steps);
        PsiResult qG = psi_module(*mir.sess_corner, edm, D.cfg.max_steps);
        if (qL.known && qG.known) {
            ++c.comparisons;
            if (qL.value != qG.value)
                c.witnesses.push_back(D.lab(i) + ": dual corner psi " + std::to_string(qG.value) +
                                      " != right psi " + std::to_string(qL.value));
        } else
            ++c.excluded;
    }
    finalize_check(c);
    return c;
}

// ---------------------------------------------------------------------------
// Corner preimages: given a corner module X, produce a module over the full
// algebra presented by projectives at S whose corner restriction is X.  The
// presentation is lifted through the restriction, which is onto on maps
// between such projectives.
// ---------------------------------------------------------------------------

template <class F>
typename F::Elt elt_of(const F& f, long long k) {
    return f.from_int(k);
}

template <class F>
std::optional<ModuleMap<F>> epi_combo(const Module<F>& E, const Module<F>& X,
                                      std::uint64_t seed) {
    auto hb = hom_basis(E, X);
    if (hb.empty()) return std::nullopt;
    const F& f = E.A->field;
    int nv = E.A->nv();
    auto surj = [&](const std::vector<Matrix<F>>& comp) {
        for (int v = 0; v < nv; ++v)
            if (rank(comp[v]) != X.dims[v]) return false;
        return true;
    };
    for (auto& h : hb)
        if (surj(h)) return make_map(E, X, std::vector<Matrix<F>>(h));
    std::mt19937_64 rng(seed);
    for (int att = 0; att < 60; ++att) {
        std::vector<Matrix<F>> comp;
        for (int v = 0; v < nv; ++v) comp.emplace_back(f, X.dims[v], E.dims[v]);
        for (auto& h : hb) {
            long long ci = (long long)(rng() % 5) - 2;
            if (ci == 0) continue;
            auto ce = elt_of(f, ci);
            for (int v = 0; v < nv; ++v)
                for (int r = 0; r < comp[v].rows; ++r)
                    for (int cc = 0; cc < comp[v].cols; ++cc)
                        comp[v].at(r, cc) = f.add(comp[v].at(r, cc), f.mul(ce, h[v].at(r, cc)));
        }
        if (surj(comp)) return make_map(E, X, std::move(comp));
    }
    return std::nullopt;
}

template <class F>
std::optional<Module<F>> corner_preimage(IdealContext<F>& ctx, const Module<F>& X,
                                         std::uint64_t seed) {
    const AlgPtr<F>& A = ctx.A;
    const F& f = A->field;
    auto gens0 = top_generators(X);
    if (gens0.empty() || (int)gens0.size() > 6) return std::nullopt;
    std::vector<Module<F>> parts0;
    for (auto& [w, j] : gens0) {
        (void)j;
        parts0.push_back(projective_module(A, ctx.corner.corner_vertices[w]));
    }
    Module<F> L0 = direct_sum(A, parts0);
    Module<F> eL0 = restrict_corner(ctx.corner, L0);
    auto pi = epi_combo(eL0, X, seed);
    if (!pi) return std::nullopt;
    auto K = kernel_module(*pi);
    if (K.mod.total() == 0) return L0;

    auto gens1 = top_generators(K.mod);
    if ((int)gens1.size() > 8) return std::nullopt;
    std::vector<Module<F>> parts1;
    for (auto& [w, j] : gens1) {
        (void)j;
        parts1.push_back(projective_module(A, ctx.corner.corner_vertices[w]));
    }
    Module<F> L1 = direct_sum(A, parts1);
    Module<F> eL1 = restrict_corner(ctx.corner, L1);
    auto rho = epi_combo(eL1, K.mod, seed + 1);
    if (!rho) return std::nullopt;
    ModuleMap<F> d = compose_map(K.incl, *rho); // eL1 -> eL0 over the corner

    auto hb = hom_basis(L1, L0);
    int nb = (int)hb.size();
    int rows = 0;
    int nvG = ctx.corner.G->nv();
    for (int w = 0; w < nvG; ++w) rows += d.comp[w].rows * d.comp[w].cols;
    Matrix<F> E(f, rows, nb), rhs(f, rows, 1);
    int r0 = 0;
    for (int w = 0; w < nvG; ++w) {
        int lv = ctx.corner.corner_vertices[w];
        for (int r = 0; r < d.comp[w].rows; ++r)
            for (int cc = 0; cc < d.comp[w].cols; ++cc) {
                for (int b = 0; b < nb; ++b) E.at(r0, b) = hb[b][lv].at(r, cc);
                rhs.at(r0, 0) = d.comp[w].at(r, cc);
                ++r0;
            }
    }
    auto sol = solve(E, rhs);
    if (!sol) throw Error("internal: corner presentation did not lift");
    std::vector<Matrix<F>> comp;
    for (int v = 0; v < A->nv(); ++v) {
        Matrix<F> m(f, L0.dims[v], L1.dims[v]);
        for (int b = 0; b < nb; ++b) {
            const auto& cb = sol->at(b, 0);
            if (f.is_zero(cb)) continue;
            for (int r = 0; r < m.rows; ++r)
                for (int cc = 0; cc < m.cols; ++cc)
                    m.at(r, cc) = f.add(m.at(r, cc), f.mul(cb, hb[b][v].at(r, cc)));
        }
        comp.push_back(std::move(m));
    }
    return cokernel_module(make_map(L1, L0, std::move(comp))).mod;
}

template <class F>
CheckResult chk_quotient_projectives_transfer(SuiteData<F>& D) {
    const std::string stmt =
        "when one covered stage forces all of them (sampled on the corpus), every corner "
        "module lifts to a module presented by vertex-set projectives with the same phi";
    if (auto s = gate_strong(D, "quotient-projectives-transfer", stmt)) return *s;
    CheckResult c;
    c.id = "quotient-projectives-transfer";
    c.statement = stmt;
    int hyp_undecided = 0;
    for (int i = 0; i < D.n(); ++i) {
        if (!D.p1[i].yes()) continue;
        if (D.pinf[i].no()) {
            c.status = CheckResult::Status::Skipped;
            c.skip_reason = "hypothesis fails on the corpus: " + D.lab(i) +
                            " has its first two cover stages on the vertex set but leaves it "
                            "at stage " + std::to_string(D.pinf[i].witness.stage);
            c.note = "hypothesis sampled, not proved";
            return c;
        }
        if (D.pinf[i].status == Membership::Status::Unknown) ++hyp_undecided;
    }
    c.note = "hypothesis sampled on the corpus, not proved";
    if (hyp_undecided)
        c.note += " (" + std::to_string(hyp_undecided) + " members undecided)";

    const AlgPtr<F>& G = D.ctx.corner.G;
    std::vector<std::pair<std::string, Module<F>>> pool;
    for (int a = 0; a < G->nv(); ++a) {
        pool.push_back({"corner S(" + G->vertex_names[a] + ")", simple_module(G, a)});
        pool.push_back({"corner P(" + G->vertex_names[a] + ")", projective_module(G, a)});
    }
    int extras = 0;
    for (int i = 0; i < D.n() && extras < 4; ++i) {
        if (!D.pinf[i].yes() || D.mod(i).total() > 60) continue;
        const Module<F>& e = D.eR(i);
        if (e.total() == 0) continue;
        pool.push_back({"corner e(" + D.lab(i) + ")", e});
        ++extras;
    }

    std::uint64_t sd = D.cfg.seed ^ 0xc0a7efULL;
    int px = 0;
    for (auto& [xl, X] : pool) {
        ++px;
        auto pre = corner_preimage(D.ctx, X, sd + 97 * px);
        if (!pre) {
            ++c.excluded;
            continue;
        }
        ++c.qualifying;
        Module<F> eY = restrict_corner(D.ctx.corner, *pre);
        ++c.comparisons;
        if (!is_isomorphic(eY, X)) {
            c.witnesses.push_back(xl + ": the lifted presentation restricts to the wrong module");
            continue;
        }
        Membership my = membership(D.ctx, *pre, Cat::P_inf, D.cfg.cap);
        if (my.no()) {
            // the construction itself found a falsifier the corpus scan missed
            c.note += "; constructed preimage of " + xl +
                      " leaves the covered class, so the sampled hypothesis fails there";
            ++c.excluded;
            continue;
        }
        if (!my.yes()) {
            ++c.excluded;
            continue;
        }
        PhiResult pX = phi_module(*D.ctx.sess_corner, X, D.cfg.max_steps);
        PhiResult pY = phi_module(*D.ctx.sess, *pre, D.cfg.max_steps);
        if (pX.known() && pY.known()) {
            ++c.comparisons;
            if (pX.value != pY.value)
                c.witnesses.push_back(xl + ": corner phi " + std::to_string(pX.value) +
                                      " != phi of the lifted module " + std::to_string(pY.value));
        } else
            ++c.excluded;
    }
    finalize_check(c);
    return c;
}

template <class F>
CheckResult chk_cosyzygy_shift(SuiteData<F>& D) {
    const std::string stmt =
        "shifting any member by as many cosyzygies as the left projective dimension of the "
        "quotient lands in the Ext-vanishing class and costs at most that shift in right phi";
    if (auto s = gate_strong(D, "cosyzygy-shift-into-vanishing", stmt)) return *s;
    if (D.ing.pd_left_quot.kind != PdResult::Kind::Finite)
        return skip_check("cosyzygy-shift-into-vanishing", stmt,
                          "left projective dimension of the quotient is " +
                              vu_from_pd(D.ing.pd_left_quot).str(),
                          D.ing.pd_left_quot.kind == PdResult::Kind::Unknown);
    CheckResult c;
    c.id = "cosyzygy-shift-into-vanishing";
    c.statement = stmt;
    int t = D.ing.pd_left_quot.value;
    for (int i = 0; i < D.n(); ++i) {
        ++c.qualifying;
        Module<F> N = D.mod(i);
        for (int k = 0; k < t; ++k) N = cosyzygy(N);
        Membership m = membership(D.ctx, N, Cat::T, D.cfg.ext_bound);
        if (m.yes())
            ++c.comparisons;
        else if (m.no())
            c.witnesses.push_back(D.lab(i) + ": the " + std::to_string(t) +
                                  "-th cosyzygy still has Ext^" + std::to_string(m.witness.i) +
                                  " of dim " + std::to_string(m.witness.dim) +
                                  " against the quotient");
        else
            ++c.excluded;
        PhiResult pN = phi_right(*D.ctx.mirror->sess, N, D.cfg.max_steps);
        if (pN.known() && D.phir[i].known()) {
            ++c.comparisons;
            if (D.phir[i].value > t + pN.value)
                c.witnesses.push_back(D.lab(i) + ": right phi " + std::to_string(D.phir[i].value) +
                                      " > " + std::to_string(t) + " + " +
                                      std::to_string(pN.value) + " (shifted right phi)");
        } else
            ++c.excluded;
    }
    finalize_check(c);
    return c;
}

// Middle term of the pushout of 0 -> W -> P -> Z -> 0 along f: W -> X.
template <class F>
Module<F> pushout_mid(const ModuleMap<F>& incl, const std::vector<Matrix<F>>& f,
                      const Module<F>& X) {
    const AlgPtr<F>& A = incl.dom.A;
    const F& fld = A->field;
    Module<F> sum = direct_sum(A, {incl.cod, X});
    Sub<F> t;
    for (int v = 0; v < A->nv(); ++v) {
        Matrix<F> m(fld, sum.dims[v], incl.dom.dims[v]);
        for (int r = 0; r < incl.comp[v].rows; ++r)
            for (int cc = 0; cc < incl.comp[v].cols; ++cc) m.at(r, cc) = incl.comp[v].at(r, cc);
        for (int r = 0; r < f[v].rows; ++r)
            for (int cc = 0; cc < f[v].cols; ++cc)
                m.at(incl.cod.dims[v] + r, cc) = fld.neg(f[v].at(r, cc));
        t.push_back(std::move(m));
    }
    return quotient_module(sum, t).mod;
}

// Extensions of a killed module by a fully-covered one: the syzygy-reach and
// phi bounds hold with a one-stage shift; the unshifted constants are kept as
// probe rows because concrete algebras violate them (a killed module whose
// cover sits off the vertex set already does at stage zero).
template <class F>
void chk_extensions(SuiteData<F>& D, std::vector<CheckResult>& out) {
    const std::string stmt_a =
        "an extension of a killed module Z by a fully-covered module X has all cover stages "
        "on the vertex set from stage pd(Z over the quotient) + 1 on";
    const std::string stmt_ap = "the same with the unshifted stage pd(Z over the quotient)";
    const std::string stmt_b =
        "phi of such an extension is at most pd(Z over the quotient) + 1 + the corner phi "
        "dimension";
    const std::string stmt_bp = "the same without the +1";

    auto push_all = [&](CheckResult a, CheckResult ap, CheckResult b, CheckResult bp) {
        if (id_selected(a.id, D.cfg)) out.push_back(std::move(a));
        if (id_selected(ap.id, D.cfg)) out.push_back(std::move(ap));
        if (id_selected(b.id, D.cfg)) out.push_back(std::move(b));
        if (id_selected(bp.id, D.cfg)) out.push_back(std::move(bp));
    };

    if (D.ctx.quot_zero) {
        CheckResult a = skip_check("extension-syzygy-reach", stmt_a,
                                   "no modules are killed by the ideal (quotient is zero)", false);
        CheckResult ap = skip_check("extension-syzygy-reach/unshifted", stmt_ap,
                                    a.skip_reason, false);
        ap.probe = true;
        CheckResult b = skip_check("extension-phi-bound", stmt_b, a.skip_reason, false);
        CheckResult bp = skip_check("extension-phi-bound/unshifted", stmt_bp, a.skip_reason, false);
        bp.probe = true;
        push_all(std::move(a), std::move(ap), std::move(b), std::move(bp));
        return;
    }
    if (auto s = gate_strong(D, "extension-syzygy-reach", stmt_a)) {
        CheckResult a = *s;
        CheckResult ap = skip_check("extension-syzygy-reach/unshifted", stmt_ap, a.skip_reason,
                                    a.inconclusive);
        ap.probe = true;
        CheckResult b = skip_check("extension-phi-bound", stmt_b, a.skip_reason, a.inconclusive);
        CheckResult bp = skip_check("extension-phi-bound/unshifted", stmt_bp, a.skip_reason,
                                    a.inconclusive);
        bp.probe = true;
        push_all(std::move(a), std::move(ap), std::move(b), std::move(bp));
        return;
    }

    CheckResult a, ap, b, bp;
    a.id = "extension-syzygy-reach";
    a.statement = stmt_a;
    ap.id = "extension-syzygy-reach/unshifted";
    ap.statement = stmt_ap;
    ap.probe = true;
    b.id = "extension-phi-bound";
    b.statement = stmt_b;
    bp.id = "extension-phi-bound/unshifted";
    bp.statement = stmt_bp;
    bp.probe = true;

    bool phidim_ok = D.ing.phidim_corner.is_num();
    long long pdc = phidim_ok ? D.ing.phidim_corner.v : 0;

    // pools
    std::vector<std::pair<int, int>> zpool; // corpus index, pd over the quotient
    for (int i = 0; i < D.n() && (int)zpool.size() < 4; ++i) {
        if (!D.killed[i]) continue;
        PdResult s = pd_module(*D.ctx.sess_quot, deflate_to_quotient(D.ctx.quot, D.mod(i)),
                               D.cfg.cap);
        if (s.kind == PdResult::Kind::Finite)
            zpool.push_back({i, s.value});
        else if (s.kind == PdResult::Kind::Unknown) {
            ++a.excluded;
            ++ap.excluded;
            ++b.excluded;
            ++bp.excluded;
        }
    }
    std::vector<std::pair<std::string, Module<F>>> xpool;
    xpool.push_back({"0", direct_sum(D.ctx.A, {})});
    for (int i = 0; i < D.n() && (int)xpool.size() < 4; ++i)
        if (D.pinf[i].yes() && D.mod(i).total() <= 60) xpool.push_back({D.lab(i), D.mod(i)});

    for (auto& [zi, s] : zpool) {
        const Module<F>& Z = D.mod(zi);
        for (auto& [xl, X] : xpool) {
            std::vector<std::pair<std::string, Module<F>>> exts;
            std::string base = "(X=" + xl + ", Z=" + D.lab(zi) + ")";
            exts.push_back({"split extension " + base,
                            X.total() ? direct_sum(D.ctx.A, {X, Z}) : Z});
            if (X.total() > 0) {
                auto oz = syzygy_with_incl(Z);
                if (oz.mod.total() > 0) {
                    auto hb = hom_basis(oz.mod, X);
                    for (int h = 0; h < (int)hb.size() && h < 2; ++h)
                        exts.push_back({"pushout extension " + std::to_string(h + 1) + " " + base,
                                        pushout_mid(oz.incl, hb[h], X)});
                }
            }
            for (auto& [yl, Y] : exts) {
                ++a.qualifying;
                ++ap.qualifying;
                Module<F> W = Y;
                for (int k = 0; k < s; ++k) W = syzygy(W);
                Membership mp = membership(D.ctx, W, Cat::P_inf, D.cfg.cap);
                if (mp.yes())
                    ++ap.comparisons;
                else if (mp.no())
                    ap.witnesses.push_back(yl + ": stage-" + std::to_string(s) +
                                           " syzygy leaves the covered class at stage " +
                                           std::to_string(mp.witness.stage) + " (vertex " +
                                           D.ctx.A->vertex_names[mp.witness.vertex] + ")");
                else
                    ++ap.excluded;
                Module<F> W1 = syzygy(W);
                Membership mp1 = membership(D.ctx, W1, Cat::P_inf, D.cfg.cap);
                if (mp1.yes())
                    ++a.comparisons;
                else if (mp1.no())
                    a.witnesses.push_back(yl + ": stage-" + std::to_string(s + 1) +
                                          " syzygy leaves the covered class at stage " +
                                          std::to_string(mp1.witness.stage));
                else
                    ++a.excluded;

                if (phidim_ok) {
                    ++b.qualifying;
                    ++bp.qualifying;
                    PhiResult p = phi_module(*D.ctx.sess, Y, D.cfg.max_steps);
                    if (p.known()) {
                        ++b.comparisons;
                        if (p.value > s + 1 + pdc)
                            b.witnesses.push_back(yl + ": phi " + std::to_string(p.value) +
                                                  " > " + std::to_string(s + 1 + pdc));
                        ++bp.comparisons;
                        if (p.value > s + pdc)
                            bp.witnesses.push_back(yl + ": phi " + std::to_string(p.value) +
                                                   " > " + std::to_string(s + pdc) +
                                                   " (bound without the +1)");
                    } else {
                        ++b.excluded;
                        ++bp.excluded;
                    }
                }
            }
        }
    }
    if (!phidim_ok) {
        b = skip_check(b.id, b.statement, "corner phi dimension is not exactly computable", true);
        bp = skip_check(bp.id, bp.statement, b.skip_reason, true);
        bp.probe = true;
    }
    finalize_check(a);
    finalize_check(ap);
    if (phidim_ok) {
        finalize_check(b);
        finalize_check(bp);
    }
    if (ap.status == CheckResult::Status::Fail)
        ap.note = "the unshifted constant fails; the shifted row holds";
    if (bp.status == CheckResult::Status::Fail)
        bp.note = "the constant without +1 fails; the row with +1 holds";
    push_all(std::move(a), std::move(ap), std::move(b), std::move(bp));
}

template <class F>
CheckResult chk_divisions(SuiteData<F>& D) {
    CheckResult c;
    c.id = "division-cross-check";
    c.statement = "the division search over small coefficient combinations reproduces phi";
    for (int i = 0; i < D.n(); ++i) {
        ++c.qualifying;
        if (!D.phil[i].known()) {
            ++c.excluded;
            continue;
        }
        try {
            int d = phi_via_divisions(*D.ctx.sess, D.mod(i), D.cfg.max_steps);
            ++c.comparisons;
            if (d != D.phil[i].value)
                c.witnesses.push_back(D.lab(i) + ": divisions give " + std::to_string(d) +
                                      ", phi is " + std::to_string(D.phil[i].value));
        } catch (const SearchCapExceeded&) {
            ++c.excluded;
        }
    }
    finalize_check(c);
    return c;
}

template <class F>
CheckResult chk_rank_monotonicity(SuiteData<F>& D) {
    CheckResult c;
    c.id = "rank-monotonicity";
    c.statement = "the free-rank sequence behind phi never increases, on either side";
    for (int i = 0; i < D.n(); ++i) {
        ++c.qualifying;
        for (auto* pr : {&D.phil[i], &D.phir[i]})
            for (size_t k = 0; k + 1 < pr->ranks.size(); ++k) {
                ++c.comparisons;
                if (pr->ranks[k + 1] > pr->ranks[k])
                    c.witnesses.push_back(D.lab(i) + ": rank rises from " +
                                          std::to_string(pr->ranks[k]) + " to " +
                                          std::to_string(pr->ranks[k + 1]) + " at stage " +
                                          std::to_string(k + 1));
            }
    }
    finalize_check(c);
    return c;
}

template <class F>
CheckResult chk_proj_summand(SuiteData<F>& D) {
    CheckResult c;
    c.id = "projective-summand-invariance";
    c.statement = "adding a projective summand never changes phi";
    const AlgPtr<F>& A = D.ctx.A;
    for (int i = 0; i < D.n(); ++i) {
        ++c.qualifying;
        int v = i % A->nv();
        Module<F> M2 = direct_sum(A, {D.mod(i), projective_module(A, v)});
        PhiResult p2 = phi_module(*D.ctx.sess, M2, D.cfg.max_steps);
        if (p2.known() && D.phil[i].known()) {
            ++c.comparisons;
            if (p2.value != D.phil[i].value)
                c.witnesses.push_back(D.lab(i) + " + P(" + A->vertex_names[v] + "): phi " +
                                      std::to_string(p2.value) + " != " +
                                      std::to_string(D.phil[i].value));
        } else
            ++c.excluded;
    }
    finalize_check(c);
    return c;
}

template <class F>
CheckResult chk_finite_pd_collapse(SuiteData<F>& D) {
    CheckResult c;
    c.id = "finite-pd-collapse";
    c.statement = "on a module of finite projective dimension both phi and psi equal it";
    for (int i = 0; i < D.n(); ++i) {
        PdResult pd = pd_module(*D.ctx.sess, D.mod(i), D.cfg.cap);
        if (pd.kind == PdResult::Kind::Unknown) {
            ++c.excluded;
            continue;
        }
        if (pd.kind != PdResult::Kind::Finite) continue;
        ++c.qualifying;
        PsiResult ps = psi_module(*D.ctx.sess, D.mod(i), D.cfg.max_steps);
        if (D.phil[i].known() && ps.known) {
            c.comparisons += 2;
            if (D.phil[i].value != pd.value || ps.value != pd.value)
                c.witnesses.push_back(D.lab(i) + ": pd " + std::to_string(pd.value) + ", phi " +
                                      std::to_string(D.phil[i].value) + ", psi " +
                                      std::to_string(ps.value));
        } else
            ++c.excluded;
    }
    finalize_check(c);
    return c;
}

template <class F>
CheckResult chk_duality_swap(SuiteData<F>& D) {
    CheckResult c;
    c.id = "duality-phi-swap";
    c.statement = "right phi equals phi of the dual over the opposite algebra (recomputed in "
                  "an independent session), and double duals return the module";
    ItSession<F> fresh(opposite(D.ctx.A), 0x5eedd00dULL);
    for (int i = 0; i < D.n(); ++i) {
        ++c.qualifying;
        Module<F> dm = dual_module(D.mod(i));
        PhiResult pf = phi_module(fresh, dm, D.cfg.max_steps);
        if (pf.known() && D.phir[i].known()) {
            ++c.comparisons;
            if (pf.value != D.phir[i].value)
                c.witnesses.push_back(D.lab(i) + ": independent session gives " +
                                      std::to_string(pf.value) + ", cached right phi is " +
                                      std::to_string(D.phir[i].value));
        } else
            ++c.excluded;
        ++c.comparisons;
        if (!is_isomorphic(dual_module(dm), D.mod(i)))
            c.witnesses.push_back(D.lab(i) + ": double dual is not isomorphic to the module");
    }
    finalize_check(c);
    return c;
}

template <class F>
CheckResult chk_hom_via_resolution(SuiteData<F>& D) {
    CheckResult c;
    c.id = "hom-via-resolution";
    c.statement = "the direct Hom solver agrees with the kernel of the first induced map of "
                  "a minimal resolution";
    int want = std::max(2, (int)std::sqrt((double)D.cfg.pair_budget / 2));
    auto is = stride_sample(D.n(), want);
    auto js = stride_sample(D.n(), want);
    for (int i : is)
        for (int j : js) {
            ++c.qualifying;
            ++c.comparisons;
            int h = hom_dim(D.mod(i), D.mod(j));
            auto& R = D.res(i);
            extend_resolution(R, 1);
            int h0 = 0;
            for (auto& [v, g] : R.gens[0]) {
                (void)g;
                h0 += D.mod(j).dims[v];
            }
            h0 -= rank(detail::induced_hom_matrix(R, 1, D.mod(j)));
            if (h != h0)
                c.witnesses.push_back("Hom(" + D.lab(i) + ", " + D.lab(j) + "): solver " +
                                      std::to_string(h) + " vs resolution " + std::to_string(h0));
        }
    finalize_check(c);
    return c;
}

template <class F>
CheckResult chk_hom_through_torsion(SuiteData<F>& D) {
    const std::string stmt =
        "maps from a vertex-set projective ignore the killed torsion part, and maps into a "
        "vertex-set injective factor through the trace part";
    if (auto s = gate_strong(D, "hom-through-torsion-quotient", stmt)) return *s;
    CheckResult c;
    c.id = "hom-through-torsion-quotient";
    c.statement = stmt;
    std::vector<std::pair<std::string, Module<F>>> Ps, Is;
    for (int v : D.ctx.S) {
        Ps.push_back({"P(" + D.ctx.A->vertex_names[v] + ")", projective_module(D.ctx.A, v)});
        Is.push_back({"I(" + D.ctx.A->vertex_names[v] + ")", injective_module(D.ctx.A, v)});
    }
    int per_side = std::max(1, D.cfg.pair_budget / (2 * std::max(1, (int)Ps.size())));
    auto js = stride_sample(D.n(), per_side);
    for (size_t k = 0; k < Ps.size(); ++k)
        for (int j : js) {
            ++c.qualifying;
            ++c.comparisons;
            int h1 = hom_dim(Ps[k].second, D.mod(j));
            int h2 = hom_dim(Ps[k].second, D.i0(j).quot.mod);
            if (h1 != h2)
                c.witnesses.push_back("Hom(" + Ps[k].first + ", " + D.lab(j) + ") dim " +
                                      std::to_string(h1) + " vs dim " + std::to_string(h2) +
                                      " after dropping the annihilator part");
            ++c.qualifying;
            ++c.comparisons;
            int h3 = hom_dim(D.mod(j), Is[k].second);
            int h4 = hom_dim(D.p0(j).sub.mod, Is[k].second);
            if (h3 != h4)
                c.witnesses.push_back("Hom(" + D.lab(j) + ", " + Is[k].first + ") dim " +
                                      std::to_string(h3) + " vs dim " + std::to_string(h4) +
                                      " restricted to the trace part");
        }
    finalize_check(c);
    return c;
}

template <class F>
CheckResult chk_ext_through_torsion(SuiteData<F>& D) {
    const std::string stmt = "Ext from a fully-covered module is blind to the killed torsion "
                             "part of the second argument";
    if (auto s = gate_strong(D, "ext-through-torsion-on-covered", stmt)) return *s;
    CheckResult c;
    c.id = "ext-through-torsion-on-covered";
    c.statement = stmt;
    std::vector<int> ws;
    for (int i = 0; i < D.n() && (int)ws.size() < 4; ++i) {
        if (D.pinf[i].status == Membership::Status::Unknown) ++c.excluded;
        if (D.pinf[i].yes() && D.mod(i).total() <= 60) ws.push_back(i);
    }
    int per = std::max(1, D.cfg.pair_budget / std::max(1, (int)ws.size() * D.cfg.jmax * 4));
    auto xs = stride_sample(D.n(), per);
    for (int w : ws) {
        auto& R = D.res(w);
        for (int x : xs) {
            Module<F> q = D.i0(x).quot.mod;
            for (int j = 1; j <= D.cfg.jmax; ++j) {
                ++c.qualifying;
                ++c.comparisons;
                int e1 = ext_dim(R, D.mod(x), j);
                int e2 = ext_dim(R, q, j);
                if (e1 != e2)
                    c.witnesses.push_back("Ext^" + std::to_string(j) + "(" + D.lab(w) + ", " +
                                          D.lab(x) + ") dim " + std::to_string(e1) + " vs dim " +
                                          std::to_string(e2) + " after dropping the torsion part");
            }
        }
    }
    finalize_check(c);
    return c;
}

template <class F>
CheckResult chk_ext_through_trace(SuiteData<F>& D) {
    const std::string stmt = "Ext into a fully-co-covered module is blind to passing from a "
                             "module to its trace part";
    if (auto s = gate_strong(D, "ext-through-trace-on-cocovered", stmt)) return *s;
    CheckResult c;
    c.id = "ext-through-trace-on-cocovered";
    c.statement = stmt;
    std::vector<int> zs;
    for (int i = 0; i < D.n() && (int)zs.size() < 4; ++i) {
        if (D.iinf[i].status == Membership::Status::Unknown) ++c.excluded;
        if (D.iinf[i].yes() && D.mod(i).total() <= 60) zs.push_back(i);
    }
    int per = std::max(1, D.cfg.pair_budget / std::max(1, (int)zs.size() * D.cfg.jmax * 4));
    auto xs = stride_sample(D.n(), per);
    for (int x : xs) {
        Module<F> tX = D.p0(x).sub.mod;
        auto& RX = D.res(x);
        Resolution<F> Rt = resolve(tX, D.cfg.jmax + 1);
        for (int z : zs)
            for (int j = 1; j <= D.cfg.jmax; ++j) {
                ++c.qualifying;
                ++c.comparisons;
                int e1 = ext_dim(RX, D.mod(z), j);
                int e2 = ext_dim(Rt, D.mod(z), j);
                if (e1 != e2)
                    c.witnesses.push_back("Ext^" + std::to_string(j) + "(" + D.lab(x) + ", " +
                                          D.lab(z) + ") dim " + std::to_string(e1) +
                                          " vs dim " + std::to_string(e2) +
                                          " from the trace part");
            }
    }
    finalize_check(c);
    return c;
}

template <class F>
CheckResult chk_ext_vanishing_inflated(SuiteData<F>& D) {
    const std::string stmt = "killed modules have no higher Ext into the torsion-free part of "
                             "a member of the Ext-vanishing class";
    if (auto s = gate_strong(D, "ext-vanishing-on-inflated", stmt)) return *s;
    CheckResult c;
    c.id = "ext-vanishing-on-inflated";
    c.statement = stmt;
    std::vector<int> zs;
    for (int i = 0; i < D.n() && (int)zs.size() < 4; ++i)
        if (D.killed[i] && D.mod(i).total() <= 60) zs.push_back(i);
    int per = std::max(1, D.cfg.pair_budget / std::max(1, (int)zs.size() * D.cfg.jmax * 4));
    auto xs = stride_sample(D.n(), per);
    for (int z : zs) {
        auto& RZ = D.res(z);
        for (int x : xs) {
            if (D.mT[x].status == Membership::Status::Unknown) {
                ++c.excluded;
                continue;
            }
            if (!D.mT[x].yes()) continue;
            Module<F> q = D.i0(x).quot.mod;
            for (int j = 1; j <= D.cfg.jmax; ++j) {
                ++c.qualifying;
                ++c.comparisons;
                int e = ext_dim(RZ, q, j);
                if (e != 0)
                    c.witnesses.push_back("Ext^" + std::to_string(j) + "(" + D.lab(z) +
                                          ", torsion-free part of " + D.lab(x) + ") has dim " +
                                          std::to_string(e));
            }
        }
    }
    finalize_check(c);
    return c;
}

template <class F>
CheckResult chk_corner_hom(SuiteData<F>& D) {
    const std::string stmt = "on modules whose first two cover stages lie on the vertex set, "
                             "Hom agrees with Hom of the corner restrictions";
    if (auto s = gate_strong(D, "corner-hom-agreement", stmt)) return *s;
    CheckResult c;
    c.id = "corner-hom-agreement";
    c.statement = stmt;
    std::vector<int> ps;
    for (int i = 0; i < D.n(); ++i)
        if (D.p1[i].yes()) ps.push_back(i);
    int want = std::max(2, (int)std::sqrt((double)D.cfg.pair_budget / 2));
    auto is = stride_sample((int)ps.size(), want);
    for (int a : is)
        for (int b : is) {
            int i = ps[a], j = ps[b];
            ++c.qualifying;
            ++c.comparisons;
            int h = hom_dim(D.mod(i), D.mod(j));
            int hg = hom_dim(D.eR(i), D.eR(j));
            if (h != hg)
                c.witnesses.push_back("Hom(" + D.lab(i) + ", " + D.lab(j) + ") dim " +
                                      std::to_string(h) + " vs corner dim " + std::to_string(hg));
        }
    finalize_check(c);
    return c;
}

template <class F>
CheckResult chk_corner_ext(SuiteData<F>& D) {
    const std::string stmt = "Ext in low degrees transfers to the corner on modules with "
                             "enough cover stages on the vertex set";
    if (auto s = gate_strong(D, "corner-ext-transfer", stmt)) return *s;
    CheckResult c;
    c.id = "corner-ext-transfer";
    c.statement = stmt;
    int k = D.cfg.pk;
    std::vector<int> xs;
    for (int i = 0; i < D.n() && (int)xs.size() < 4; ++i) {
        if (D.mod(i).total() > 60) continue;
        if (membership_P(D.ctx, D.mod(i), k + 1, D.cfg.cap).yes()) xs.push_back(i);
    }
    int per = std::max(1, D.cfg.pair_budget / std::max(1, (int)xs.size() * k * 4));
    auto ys = stride_sample(D.n(), per);
    for (int x : xs) {
        auto& RX = D.res(x);
        Resolution<F> RG = resolve(D.eR(x), k + 1);
        for (int y : ys) {
            const Module<F>& eY = D.eR(y);
            for (int i = 1; i <= k; ++i) {
                ++c.qualifying;
                ++c.comparisons;
                int e1 = ext_dim(RX, D.mod(y), i);
                int e2 = ext_dim(RG, eY, i);
                if (e1 != e2)
                    c.witnesses.push_back("Ext^" + std::to_string(i) + "(" + D.lab(x) + ", " +
                                          D.lab(y) + ") dim " + std::to_string(e1) +
                                          " vs corner dim " + std::to_string(e2));
            }
        }
    }
    finalize_check(c);
    return c;
}

// Numeric bound rows folded into the suite.  Rows whose right side is a
// supremum no finite corpus can compute are reported but never gate.
template <class F>
void chk_bound_rows(SuiteData<F>& D, const StrongIdemResult& strong,
                    std::vector<CheckResult>& out) {
    BoundReportOpts opts;
    opts.cap = D.cfg.cap;
    opts.ext_bound = D.cfg.ext_bound;
    BoundReport<F> rep = bound_report(D.ctx, strong, D.corpus, opts);
    for (auto& row : rep.rows) {
        std::string id = "bound/" + row.id;
        if (!id_selected(id, D.cfg)) continue;
        CheckResult c;
        c.id = id;
        c.statement = row.formula;
        c.probe = row.probe;
        c.qualifying = row.qualifying;
        c.comparisons = row.checked;
        c.witnesses = row.violations;
        c.note = row.note;
        switch (row.status) {
        case BoundRow::Status::Pass:
            c.status = CheckResult::Status::Pass;
            break;
        case BoundRow::Status::Violated:
            c.status = CheckResult::Status::Fail;
            break;
        case BoundRow::Status::NotApplicable:
            c.status = CheckResult::Status::Skipped;
            c.skip_reason = row.note.empty() ? "not applicable" : row.note;
            c.inconclusive = (row.id == "all" &&
                              strong.status == StrongIdemResult::Status::Unknown);
            break;
        case BoundRow::Status::Unknown:
            c.status = CheckResult::Status::Skipped;
            // the dim-level row compares two suprema no corpus can compute;
            // that is a permanent, benign skip
            if (row.id == "phi_r-dim-via-T") {
                c.skip_reason = "right side is a supremum over all modules";
            } else {
                c.skip_reason = "ingredients stayed undecided";
                c.inconclusive = true;
            }
            break;
        }
        out.push_back(std::move(c));
    }
}

} // namespace detail

template <class F>
SuiteReport<F> run_suite(IdealContext<F>& ctx, const Corpus<F>& corpus, SuiteConfig cfg = {}) {
    if (!ctx.mirror) throw Error("suite needs a context built with its mirror");
    SuiteReport<F> rep;
    rep.algebra = ctx.A->name;
    for (int v : ctx.S) rep.S.push_back(ctx.A->vertex_names[v]);
    rep.cfg = cfg;
    rep.corpus_size = (int)corpus.size();
    rep.strong = is_strong_idempotent(ctx, 6);
    rep.ing = compute_ingredients(ctx, cfg.cap);

    detail::SuiteData<F> D(ctx, corpus, cfg, rep.strong, rep.ing);
    D.precompute();

    auto want = [&](const char* id) { return detail::id_selected(id, cfg); };
    auto& cs = rep.checks;
    if (want("hom-orthogonality")) cs.push_back(detail::chk_hom_orthogonality(D));
    if (want("glueing-exactness")) cs.push_back(detail::chk_glueing_exactness(D));
    if (want("torsion-intersection")) cs.push_back(detail::chk_torsion_intersection(D));
    if (want("glueing-into-infinite-classes")) cs.push_back(detail::chk_glueing_into_infinite(D));
    if (want("quotient-phi-comparison")) cs.push_back(detail::chk_quotient_phi(D));
    if (want("corner-phi-transfer")) cs.push_back(detail::chk_corner_phi(D));
    if (want("corner-phi-transfer-dual")) cs.push_back(detail::chk_corner_phi_dual(D));
    if (want("quotient-projectives-transfer"))
        cs.push_back(detail::chk_quotient_projectives_transfer(D));
    if (want("cosyzygy-shift-into-vanishing")) cs.push_back(detail::chk_cosyzygy_shift(D));
    detail::chk_extensions(D, cs);
    if (want("division-cross-check")) cs.push_back(detail::chk_divisions(D));
    if (want("rank-monotonicity")) cs.push_back(detail::chk_rank_monotonicity(D));
    if (want("projective-summand-invariance")) cs.push_back(detail::chk_proj_summand(D));
    if (want("finite-pd-collapse")) cs.push_back(detail::chk_finite_pd_collapse(D));
    if (want("duality-phi-swap")) cs.push_back(detail::chk_duality_swap(D));
    if (want("hom-via-resolution")) cs.push_back(detail::chk_hom_via_resolution(D));
    if (want("hom-through-torsion-quotient")) cs.push_back(detail::chk_hom_through_torsion(D));
    if (want("ext-through-torsion-on-covered")) cs.push_back(detail::chk_ext_through_torsion(D));
    if (want("ext-through-trace-on-cocovered")) cs.push_back(detail::chk_ext_through_trace(D));
    if (want("ext-vanishing-on-inflated")) cs.push_back(detail::chk_ext_vanishing_inflated(D));
    if (want("corner-hom-agreement")) cs.push_back(detail::chk_corner_hom(D));
    if (want("corner-ext-transfer")) cs.push_back(detail::chk_corner_ext(D));
    detail::chk_bound_rows(D, rep.strong, cs);

    for (auto& c : cs) {
        switch (c.status) {
        case CheckResult::Status::Pass:
            ++rep.passes;
            break;
        case CheckResult::Status::Fail:
            if (c.probe)
                ++rep.probe_fails;
            else
                ++rep.fails;
            break;
        case CheckResult::Status::Skipped:
            ++rep.skips;
            if (c.inconclusive) ++rep.inconclusive;
            break;
        }
    }
    return rep;
}

inline json to_json(const CheckResult& c) {
    json j;
    j["id"] = c.id;
    j["statement"] = c.statement;
    j["status"] = c.status == CheckResult::Status::Pass
                      ? "pass"
                      : (c.status == CheckResult::Status::Fail ? "fail" : "skipped");
    if (c.probe) j["probe"] = true;
    j["qualifying"] = c.qualifying;
    j["comparisons"] = c.comparisons;
    if (c.excluded) j["excluded_undecided"] = c.excluded;
    if (!c.witnesses.empty()) j["witnesses"] = c.witnesses;
    if (!c.skip_reason.empty()) j["skip_reason"] = c.skip_reason;
    if (c.inconclusive) j["inconclusive"] = true;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

template <class F>
json to_json(const SuiteReport<F>& r) {
    json j;
    j["schema"] = kSchema;
    j["algebra"] = r.algebra;
    j["vertex_set"] = r.S;
    j["corpus_size"] = r.corpus_size;
    j["seed"] = r.cfg.seed;
    j["strong_idempotent"] = to_json(r.strong);
    j["ingredients"] = to_json(r.ing);
    json cs = json::array();
    for (auto& c : r.checks) cs.push_back(to_json(c));
    j["checks"] = cs;
    j["summary"] = {{"passes", r.passes},
                    {"fails", r.fails},
                    {"probe_fails", r.probe_fails},
                    {"skipped", r.skips},
                    {"inconclusive", r.inconclusive}};
    j["exit"] = r.exit_code();
    return j;
}

// ---------------------------------------------------------------------------
// Fuzz driver: random bound quiver algebras with monomial relations, a random
// vertex subset (always a two-sided ideal for monomial relations), a small
// corpus, and the full suite.  Deterministic per seed; failures come back as
// self-contained bundles.
// ---------------------------------------------------------------------------

inline Presentation random_presentation(std::mt19937_64& rng, const std::string& name,
                                        int extra_kills) {
    Presentation p;
    p.name = name;
    p.max_path_len = 8;
    p.max_paths = 400;
    int nv = 1 + (int)(rng() % 6);
    for (int v = 0; v < nv; ++v) p.q.vertices.push_back(std::to_string(v + 1));
    int na = (int)(rng() % 11);
    std::vector<std::vector<int>> outs(nv);
    for (int a = 0; a < na; ++a) {
        Arrow ar;
        ar.name = "a" + std::to_string(a + 1);
        ar.src = (int)(rng() % nv);
        ar.tgt = (int)(rng() % nv);
        outs[ar.src].push_back(a);
        p.q.arrows.push_back(ar);
    }
    int kills = (int)(rng() % 5) + extra_kills;
    std::set<std::vector<std::string>> seen;
    for (int k = 0; k < kills && na > 0; ++k) {
        int first = (int)(rng() % na);
        std::vector<std::string> path = {p.q.arrows[first].name};
        int cur = p.q.arrows[first].tgt;
        int len = 2 + (int)(rng() % 2);
        for (int step = 1; step < len; ++step) {
            const auto& o = outs[cur];
            if (o.empty()) break;
            int nxt = o[rng() % o.size()];
            path.push_back(p.q.arrows[nxt].name);
            cur = p.q.arrows[nxt].tgt;
        }
        if ((int)path.size() < 2) continue;
        if (!seen.insert(path).second) continue;
        Relation r;
        RelTerm t;
        t.path = path;
        r.terms.push_back(t);
        p.relations.push_back(r);
    }
    p.q.finalize();
    return p;
}

struct FuzzOutcome {
    json report;
    std::vector<json> failure_bundles;
    int exit_code = 0;
};

inline FuzzOutcome run_fuzz(std::uint64_t seed, int iterations) {
    FieldSpec spec;
    PrimeField f(spec.prime);
    FuzzOutcome out;
    json its = json::array();
    int fails = 0, inconclusive = 0, built = 0, skipped = 0;
    for (int it = 0; it < iterations; ++it) {
        std::uint64_t si =
            seed * 0x9E3779B97F4A7C15ULL + (std::uint64_t)(it + 1) * 0xBF58476D1CE4E5B9ULL;
        std::mt19937_64 rng(si);
        json entry;
        entry["iteration"] = it;
        AlgPtr<PrimeField> A;
        Presentation pres;
        for (int attempt = 0; attempt < 6 && !A; ++attempt) {
            pres = random_presentation(rng, "fuzz-" + std::to_string(it), attempt * 3);
            try {
                A = build_algebra(f, spec, pres);
            } catch (const DimensionOverflow&) {
            } catch (const InvalidRelation&) {
            }
        }
        if (!A) {
            entry["outcome"] = "build-skipped";
            ++skipped;
            its.push_back(entry);
            continue;
        }
        if (A->dim() > 120) {
            entry["outcome"] = "size-skipped";
            entry["dim"] = A->dim();
            ++skipped;
            its.push_back(entry);
            continue;
        }
        ++built;
        std::uint64_t mask = 1 + rng() % ((1ULL << A->nv()) - 1);
        std::vector<int> S;
        std::vector<std::string> snames;
        for (int v = 0; v < A->nv(); ++v)
            if ((mask >> v) & 1) {
                S.push_back(v);
                snames.push_back(A->vertex_names[v]);
            }
        entry["algebra"] = {{"vertices", A->nv()},
                            {"arrows", (int)pres.q.arrows.size()},
                            {"relations", (int)pres.relations.size()},
                            {"dim", A->dim()}};
        entry["vertex_set"] = snames;
        CtxPtr<PrimeField> ctx;
        try {
            ctx = build_context(A, S, true);
        } catch (const Error& e) {
            entry["outcome"] = std::string("context-refused: ") + e.what();
            its.push_back(entry);
            continue;
        }
        SuiteConfig scfg;
        scfg.seed = si;
        scfg.count = 3;
        scfg.depth = 2;
        scfg.cap = 16;
        scfg.max_steps = 60;
        scfg.ext_bound = 4;
        scfg.jmax = 2;
        scfg.pair_budget = 60;
        auto corpus = gen_corpus(*ctx, si, scfg.count, scfg.depth);
        auto rep = run_suite(*ctx, corpus, scfg);
        int ec = rep.exit_code();
        entry["exit"] = ec;
        entry["corpus"] = rep.corpus_size;
        json bad = json::array();
        for (auto& c : rep.checks) {
            if (c.status == CheckResult::Status::Pass) continue;
            if (c.status == CheckResult::Status::Skipped && !c.inconclusive) continue;
            json b;
            b["id"] = c.id;
            b["status"] = c.status == CheckResult::Status::Fail ? "fail" : "skipped";
            if (c.probe) b["probe"] = true;
            if (c.inconclusive) b["inconclusive"] = true;
            if (!c.witnesses.empty()) b["witnesses"] = c.witnesses;
            if (!c.skip_reason.empty()) b["skip_reason"] = c.skip_reason;
            bad.push_back(b);
        }
        if (!bad.empty()) entry["findings"] = bad;
        if (ec == 1) {
            ++fails;
            entry["outcome"] = "fail";
            json bundle;
            bundle["schema"] = kSchema;
            bundle["seed"] = seed;
            bundle["iteration"] = it;
            bundle["presentation"] = presentation_to_json(pres, spec);
            bundle["vertex_set"] = snames;
            bundle["report"] = to_json(rep);
            out.failure_bundles.push_back(std::move(bundle));
        } else if (ec == 2) {
            ++inconclusive;
            entry["outcome"] = "inconclusive";
        } else
            entry["outcome"] = "pass";
        its.push_back(entry);
    }
    out.report = json{{"schema", kSchema},
                      {"mode", "fuzz"},
                      {"seed", seed},
                      {"iterations", iterations},
                      {"built", built},
                      {"skipped", skipped},
                      {"fails", fails},
                      {"inconclusive", inconclusive},
                      {"runs", its}};
    out.exit_code = fails ? 1 : (inconclusive ? 2 : 0);
    return out;
}

} // namespace itlab
