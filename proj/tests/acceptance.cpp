// Acceptance gate: one line of output per criterion, exit code = number of
// failed criteria.  Each criterion is self-contained and catches its own
// exceptions, so a crash in one shows up as a single FAIL line rather than
// taking the whole gate down.

#include "fixtures.hpp"
#include "itlab/io.hpp"
#include "itlab/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace itlab;
using namespace fixtures;
using Fp = PrimeField;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome ok(std::string d) { return {true, std::move(d)}; }
Outcome bad(std::string d) { return {false, std::move(d)}; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---------------------------------------------------------------------------
// 1. the 15-dimensional fixture and its trace ideal
// ---------------------------------------------------------------------------
Outcome criterion1() {
    auto A = f2();
    if (A->dim() != 15) return bad("algebra dim " + std::to_string(A->dim()) + ", want 15");
    auto ctx = build_context(A, {2, 3, 4});

    auto cls = ctx->sess->classify(ctx->ideal_sub.mod);
    Module<Fp> P3 = projective_module(A, 2), P4 = projective_module(A, 3),
               P5 = projective_module(A, 4), S5 = simple_module(A, 4);
    auto expect = ctx->sess->classify(direct_sum(A, {P3, P4, P4, P4, P5, S5, S5}));
    if (cls != expect) return bad("ideal decomposition differs from P3 + P4^3 + P5 + S5^2");

    auto pd = pd_module(*ctx->sess, ctx->ideal_sub.mod);
    if (!(pd.finite() && pd.value == 1)) return bad("pd(ideal) = " + pd.str() + ", want 1");
    return ok("dim 15, ideal = P3 + P4^3 + P5 + S5^2, pd(ideal) = 1");
}

// ---------------------------------------------------------------------------
// 2. syzygy of S5, strong idempotency, the selfinjective quotient, the corner
// ---------------------------------------------------------------------------
Outcome criterion2() {
    auto A = f2();
    auto ctx = build_context(A, {2, 3, 4});

    if (!is_isomorphic(syzygy(simple_module(A, 4)), projective_module(A, 3)))
        return bad("omega(S5) is not P(4)");

    auto strong = is_strong_idempotent(*ctx, 6);
    if (!strong.yes()) return bad("strong idempotency not certified");

    auto& Q = ctx->quot.Q;
    if (Q->dim() != 4) return bad("quotient dim " + std::to_string(Q->dim()) + ", want 4");
    if (!is_selfinjective(Q)) return bad("quotient not selfinjective");

    // its four indecomposables: the two simples and the two projectives
    std::vector<std::pair<std::string, Module<Fp>>> indec = {
        {"S(1)", simple_module(Q, 0)},
        {"S(2)", simple_module(Q, 1)},
        {"P(1)", projective_module(Q, 0)},
        {"P(2)", projective_module(Q, 1)},
    };
    for (auto& [n, m] : indec)
        if (!is_indecomposable(m)) return bad(n + " over the quotient not indecomposable");
    for (size_t i = 0; i < indec.size(); ++i)
        for (size_t j = i + 1; j < indec.size(); ++j)
            if (is_isomorphic(indec[i].second, indec[j].second))
                return bad("quotient indecomposables " + indec[i].first + " and " +
                           indec[j].first + " coincide");
    for (auto& [n, m] : indec) {
        auto pl = phi_module(*ctx->sess_quot, m);
        auto pr = phi_right(*ctx->sess_quot_op, m);
        if (!(pl.known() && pl.value == 0)) return bad("phi_l(" + n + ") over quotient != 0");
        if (!(pr.known() && pr.value == 0)) return bad("phi_r(" + n + ") over quotient != 0");
    }

    auto gld = global_dimension(*ctx->sess_corner);
    if (!(gld.finite() && gld.value == 1))
        return bad("corner global dimension " + gld.str() + ", want 1");
    return ok("omega(S5) = P(4); strong yes; quotient dim 4 selfinjective with all phi 0; "
              "corner gld 1");
}

// ---------------------------------------------------------------------------
// 3. the global right-phi bound on a large corpus, with the recorded
//    reference value for comparison
// ---------------------------------------------------------------------------
Outcome criterion3() {
    auto A = f2();
    auto ctx = build_context(A, {2, 3, 4});
    auto strong = is_strong_idempotent(*ctx, 6);
    if (!strong.yes()) return bad("strong idempotency not certified");

    auto corpus = gen_corpus(*ctx, 0, 30, 4);
    if ((int)corpus.size() < 40)
        return bad("corpus only reached " + std::to_string(corpus.size()) + " modules");

    auto rep = bound_report(*ctx, strong, corpus);
    const BoundRow* row = nullptr;
    for (auto& r : rep.rows)
        if (r.id == "phi_r-global") row = &r;
    if (!row) return bad("phi_r-global row missing");
    if (row->status != BoundRow::Status::Pass) {
        std::string w = row->violations.empty() ? "" : (": " + row->violations.front());
        return bad("phi_r-global row did not pass" + w);
    }
    if (row->qualifying < 40)
        return bad("only " + std::to_string(row->qualifying) + " corpus modules decided");
    if (!row->rhs.is_num()) return bad("computed right-hand side is not a number");

    const long long recorded_reference = 5;  // the value recorded alongside this example
    std::string cmp = row->rhs.v == recorded_reference
                          ? "matches the recorded reference 5"
                          : "recorded reference is 5 - documented discrepancy, inequality "
                            "checked against the computed value";
    return ok("phi_r <= " + row->rhs.str() + " holds on " + std::to_string(row->qualifying) +
              " modules (max observed " + std::to_string(rep.max_phi_r) + "); " + cmp);
}

// ---------------------------------------------------------------------------
// 4. the A2 fixture: projective trace ideal, membership of P1/S1/S2
// ---------------------------------------------------------------------------
Outcome criterion4() {
    auto A = f1();
    auto ctx = build_context(A, {1});

    if (!is_projective_module(ctx->ideal_sub.mod)) return bad("ideal not projective");
    auto cls = ctx->sess->classify(ctx->ideal_sub.mod);
    bool two_s2 = cls.size() == 1 && cls.begin()->second == 2 &&
                  ctx->sess->label(cls.begin()->first) == "S(2)";
    if (!two_s2) return bad("ideal is not S(2) + S(2)");

    auto strong = is_strong_idempotent(*ctx, 6);
    if (!(strong.yes() && strong.route == StrongIdemResult::Route::ProjectiveIdeal))
        return bad("strong idempotency not certified via the projective ideal");

    if (!membership(*ctx, projective_module(A, 0), Cat::T).yes()) return bad("P1 not in T");
    if (!membership(*ctx, simple_module(A, 0), Cat::T).yes()) return bad("S1 not in T");
    auto s2 = membership(*ctx, simple_module(A, 1), Cat::T);
    if (!s2.no()) return bad("S2 unexpectedly in T (or undecided)");
    return ok("ideal = S(2)^2 projective, strong yes; P1, S1 in T; S2 out, exactly");
}

// ---------------------------------------------------------------------------
// 5. the stabilization regression on the bounded loop
// ---------------------------------------------------------------------------
Outcome criterion5() {
    auto B = f3();
    ItSession<Fp> S(B);
    auto M = direct_sum(B, {simple_module(B, 0), simple_module(B, 3)});
    auto phi = phi_module(S, M);
    if (!(phi.known() && phi.value == 2)) return bad("phi = " + phi.str() + ", want 2");
    if (phi.cert != PhiResult::Cert::Periodic) return bad("certificate is not periodic");
    json j = to_json(phi);
    auto ranks = j["ranks"].get<std::vector<int>>();
    if (ranks != std::vector<int>{2, 2, 1}) {
        std::string s;
        for (int r : ranks) s += (s.empty() ? "" : ",") + std::to_string(r);
        return bad("emitted ranks [" + s + "], want [2,2,1]");
    }
    return ok("phi(S1 + S_loop) = 2, ranks [2,2,1], periodic certificate");
}

// ---------------------------------------------------------------------------
// 6. divisions cross-check: the division construction equals phi everywhere
//    we can compute both
// ---------------------------------------------------------------------------
Outcome criterion6() {
    int compared = 0, excluded = 0;
    std::vector<std::string> mism;

    auto run_one = [&](const AlgPtr<Fp>& A, ItSession<Fp>& S, const std::string& tag,
                       const Module<Fp>& M) {
        auto phi = phi_module(S, M);
        if (!phi.known()) {
            ++excluded;
            return;
        }
        int d;
        try {
            d = phi_via_divisions(S, M);
        } catch (const SearchCapExceeded&) {
            ++excluded;
            return;
        }
        ++compared;
        if (d != phi.value)
            mism.push_back(tag + ": divisions " + std::to_string(d) + " vs phi " +
                           std::to_string(phi.value));
    };

    auto standard_family = [&](const AlgPtr<Fp>& A, ItSession<Fp>& S, const std::string& name) {
        for (int v = 0; v < A->nv(); ++v) {
            run_one(A, S, name + " S(" + A->vertex_names[v] + ")", simple_module(A, v));
            run_one(A, S, name + " P(" + A->vertex_names[v] + ")", projective_module(A, v));
            run_one(A, S, name + " I(" + A->vertex_names[v] + ")", injective_module(A, v));
        }
        run_one(A, S, name + " regular", regular_module(A, nullptr));
    };

    auto A1 = f1();
    ItSession<Fp> S1(A1);
    standard_family(A1, S1, "A2");
    auto A2 = f2();
    ItSession<Fp> S2(A2);
    standard_family(A2, S2, "15dim");
    auto A3 = f3();
    ItSession<Fp> S3(A3);
    standard_family(A3, S3, "loop");

    int random_compared = 0;
    std::mt19937_64 rng(0x6a09e667f3bcc908ULL);
    for (int t = 0; t < 100; ++t) {
        auto M = random_module(A2, rng, 2);
        if (M.total() == 0) {
            ++excluded;
            continue;
        }
        int before = compared;
        run_one(A2, S2, "random#" + std::to_string(t), M);
        random_compared += compared - before;
    }

    if (!mism.empty()) return bad(std::to_string(mism.size()) + " mismatches; first: " + mism[0]);
    if (random_compared < 80)
        return bad("only " + std::to_string(random_compared) +
                   " of 100 random modules were decided on both routes");
    return ok("divisions = phi on " + std::to_string(compared) + " modules (" +
              std::to_string(random_compared) + " random), " + std::to_string(excluded) +
              " excluded as undecided");
}

// ---------------------------------------------------------------------------
// 7. quotient comparison: phi over the quotient algebra never exceeds phi of
//    the inflated module over the big algebra
// ---------------------------------------------------------------------------
Outcome criterion7() {
    auto A = f2();
    auto ctx = build_context(A, {2, 3, 4});
    auto& Q = ctx->quot.Q;

    std::vector<std::pair<std::string, Module<Fp>>> xs;
    for (int v = 0; v < Q->nv(); ++v) {
        xs.push_back({"S(" + Q->vertex_names[v] + ")", simple_module(Q, v)});
        xs.push_back({"P(" + Q->vertex_names[v] + ")", projective_module(Q, v)});
        xs.push_back({"I(" + Q->vertex_names[v] + ")", injective_module(Q, v)});
        xs.push_back({"Rad(P(" + Q->vertex_names[v] + "))",
                      submodule(projective_module(Q, v), radical_sub(projective_module(Q, v))).mod});
    }
    xs.push_back({"regular", regular_module(Q, nullptr)});
    std::mt19937_64 rng(41);
    for (int t = 0; t < 12; ++t) {
        auto M = random_module(Q, rng, 2);
        if (M.total()) xs.push_back({"random#" + std::to_string(t), M});
    }

    int qualifying = 0;
    for (auto& [n, X] : xs) {
        if (X.total() == 0) continue;
        auto pq = phi_module(*ctx->sess_quot, X);
        auto pl = phi_module(*ctx->sess, inflate_quotient(ctx->quot, A, X));
        if (!(pq.known() && pl.known())) continue;
        ++qualifying;
        if (pq.value > pl.value)
            return bad(n + ": phi over quotient " + std::to_string(pq.value) +
                       " exceeds phi of the inflation " + std::to_string(pl.value));
    }
    if (qualifying < 20)
        return bad("only " + std::to_string(qualifying) + " qualifying modules, want >= 20");
    return ok("phi_quotient <= phi_inflation on " + std::to_string(qualifying) + " modules");
}

// ---------------------------------------------------------------------------
// 8. corner transfer: phi and psi equal their corner values on certified
//    members, on both sides
// ---------------------------------------------------------------------------
Outcome criterion8() {
    auto A = f2();
    auto ctx = build_context(A, {2, 3, 4});
    auto corpus = gen_corpus(*ctx, 0, 20, 3);

    int qualifying = 0;
    bool saw_s5 = false, saw_ideal = false;
    for (auto& [name, M] : corpus) {
        auto mp = membership(*ctx, M, Cat::P_inf);
        if (mp.yes()) {
            ++qualifying;
            if (name == "S(5)") saw_s5 = true;
            if (name == "TraceIdeal") saw_ideal = true;
            auto eM = restrict_corner(ctx->corner, M);
            auto pl = phi_module(*ctx->sess, M);
            auto pg = phi_module(*ctx->sess_corner, eM);
            if (pl.known() && pg.known() && pl.value != pg.value)
                return bad(name + ": phi " + std::to_string(pl.value) + " vs corner phi " +
                           std::to_string(pg.value));
            auto ql = psi_module(*ctx->sess, M);
            auto qg = psi_module(*ctx->sess_corner, eM);
            if (ql.known && qg.known && ql.value != qg.value)
                return bad(name + ": psi " + std::to_string(ql.value) + " vs corner psi " +
                           std::to_string(qg.value));
        }
        auto mi = membership(*ctx, M, Cat::I_inf);
        if (mi.yes()) {
            ++qualifying;
            auto& mir = *ctx->mirror;
            Module<Fp> dm = dual_module(M);
            Module<Fp> edm = restrict_corner(mir.corner, dm);
            auto pr = phi_module(*mir.sess, dm);
            auto pg = phi_module(*mir.sess_corner, edm);
            if (pr.known() && pg.known() && pr.value != pg.value)
                return bad(name + ": right phi " + std::to_string(pr.value) +
                           " vs dual corner phi " + std::to_string(pg.value));
            auto qr = psi_module(*mir.sess, dm);
            auto qg = psi_module(*mir.sess_corner, edm);
            if (qr.known && qg.known && qr.value != qg.value)
                return bad(name + ": right psi " + std::to_string(qr.value) +
                           " vs dual corner psi " + std::to_string(qg.value));
        }
    }
    if (!saw_s5) return bad("S(5) did not qualify");
    if (!saw_ideal) return bad("the trace ideal did not qualify");
    if (qualifying < 5)
        return bad("only " + std::to_string(qualifying) + " qualifying members, want >= 5");
    return ok("phi/psi transfer to the corner on " + std::to_string(qualifying) +
              " certified members, including S(5) and the trace ideal");
}

// ---------------------------------------------------------------------------
// 9. property sweep over 1000 seeded random modules + paired dimension
//    identities
// ---------------------------------------------------------------------------
Outcome criterion9() {
    struct Lane {
        AlgPtr<Fp> A;
        std::string name;
        int count;
    };
    std::vector<Lane> lanes = {{f1(), "A2", 350}, {f2(), "15dim", 350}, {f3(), "loop", 300}};

    long long total = 0, hom_pairs = 0;
    for (auto& lane : lanes) {
        ItSession<Fp> S(lane.A);
        ItSession<Fp> Sop(opposite(lane.A));
        ItSession<Fp> Sop_fresh(opposite(lane.A), 0x5eedd00dULL);
        auto P0 = projective_module(lane.A, 0);
        std::mt19937_64 rng(1000 + lane.A->dim());
        Module<Fp> prev;
        for (int t = 0; t < lane.count; ++t) {
            auto M = random_module(lane.A, rng, 2);
            if (M.total() == 0) continue;
            ++total;

            auto phi = phi_module(S, M);
            if (!phi.known()) return bad(lane.name + ": phi undecided on a random module");
            for (size_t i = 0; i + 1 < phi.ranks.size(); ++i)
                if (phi.ranks[i + 1] > phi.ranks[i])
                    return bad(lane.name + ": rank sequence increases at stage " +
                               std::to_string(i + 1));

            auto phiP = phi_module(S, direct_sum(lane.A, {M, P0}));
            if (!(phiP.known() && phiP.value == phi.value))
                return bad(lane.name + ": phi changed after adding a projective summand");

            auto pd = pd_module(S, M);
            if (pd.finite()) {
                auto psi = psi_module(S, M);
                if (!(psi.known && phi.value == pd.value && psi.value == pd.value))
                    return bad(lane.name + ": finite pd " + std::to_string(pd.value) +
                               " but phi " + std::to_string(phi.value) + ", psi " +
                               std::to_string(psi.value));
            }

            auto pr = phi_right(Sop, M);
            auto pl_dual = phi_module(Sop_fresh, dual_module(M));
            if (!(pr.known() && pl_dual.known() && pr.value == pl_dual.value))
                return bad(lane.name + ": phi_r(M) != phi_l(DM) on a random module");

            // paired check: solver Hom dimension vs the resolution route
            if (prev.total() && (t % 3) == 0) {
                ++hom_pairs;
                int h = hom_dim(M, prev);
                auto R = resolve(M, 1);
                int h0 = 0;
                for (auto& [v, g] : R.gens[0]) {
                    (void)g;
                    h0 += prev.dims[v];
                }
                h0 -= rank(detail::induced_hom_matrix(R, 1, prev));
                if (h != h0)
                    return bad(lane.name + ": Hom solver " + std::to_string(h) +
                               " vs resolution value " + std::to_string(h0));
            }
            prev = M;
        }
    }

    // dimension identities through the torsion part, across the three contexts
    long long identity_pairs = 0;
    struct Ctx {
        AlgPtr<Fp> A;
        std::vector<int> S;
    };
    std::vector<Ctx> ctxs = {{f1(), {1}}, {f2(), {2, 3, 4}}, {f3(), {2, 3}}};
    for (auto& c : ctxs) {
        auto ctx = build_context(c.A, c.S);
        SuiteConfig cfg;
        cfg.count = 16;
        cfg.depth = 3;
        cfg.pair_budget = 700;
        cfg.jmax = 2;
        cfg.only = {"hom-through-torsion-quotient", "ext-through-torsion-on-covered",
                    "ext-through-trace-on-cocovered"};
        auto corpus = gen_corpus(*ctx, 0, cfg.count, cfg.depth);
        auto rep = run_suite(*ctx, corpus, cfg);
        for (auto& ch : rep.checks) {
            if (ch.status == CheckResult::Status::Fail)
                return bad("dimension identity " + ch.id + " violated: " +
                           (ch.witnesses.empty() ? "" : ch.witnesses.front()));
            identity_pairs += ch.qualifying;
        }
    }
    if (identity_pairs < 200)
        return bad("only " + std::to_string(identity_pairs) + " identity pairs, want >= 200");

    return ok(std::to_string(total) + " random modules checked, " + std::to_string(hom_pairs) +
              " Hom pairs, " + std::to_string(identity_pairs) + " dimension-identity pairs");
}

// ---------------------------------------------------------------------------
// 10. CLI fuzz determinism
// ---------------------------------------------------------------------------
Outcome criterion10() {
    const char* bin = std::getenv("ITLAB_BIN");
    if (!bin) return bad("ITLAB_BIN not set");

    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "itlab-acceptance";
    std::error_code ec;
    fs::create_directories(dir, ec);
    fs::path o1 = dir / "fuzz-a.json", o2 = dir / "fuzz-b.json";

    auto run = [&](const fs::path& out) -> int {
        std::string cmd = std::string("\"") + bin + "\" fuzz --seed 7 --iterations 25 " +
                          "--bundle-dir \"" + dir.string() + "\" --format json -o \"" +
                          out.string() + "\"";
        int rc = std::system(cmd.c_str());
        if (rc == -1) return -1;
        return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    };

    int e1 = run(o1);
    int e2 = run(o2);
    if (e1 < 0 || e2 < 0) return bad("could not spawn the fuzz command");
    if (e1 != e2) return bad("exit codes differ between runs");

    std::string a = read_file(o1.string()), b = read_file(o2.string());
    if (a.empty()) return bad("fuzz run produced no output");
    if (a != b) return bad("fuzz output differs between identical runs");

    json rep = json::parse(a);
    if (e1 == 0)
        return ok("two runs byte-identical, exit 0 over " +
                  std::to_string((int)rep["iterations"]) + " iterations");
    if (e1 == 1) {
        // a refutation must persist its counterexample bundles
        if (!rep.contains("failure_bundles") || rep["failure_bundles"].empty())
            return bad("exit 1 without persisted counterexample bundles");
        for (auto& f : rep["failure_bundles"])
            if (!fs::exists(f.get<std::string>()))
                return bad("bundle file " + f.get<std::string>() + " missing");
        return ok("two runs byte-identical, exit 1 with persisted counterexample bundles");
    }
    if (e1 == 2) {
        // inconclusive runs must name their undecided findings
        bool named = false;
        for (auto& r : rep["runs"])
            if (r.contains("findings") && !r["findings"].empty()) named = true;
        if (!named) return bad("exit 2 but no run lists its undecided findings");
        return ok("two runs byte-identical, exit 2 with undecided findings listed");
    }
    return bad("unexpected exit code " + std::to_string(e1));
}

}  // namespace

int main() {
    struct Row {
        int num;
        const char* text;
        Outcome (*fn)();
    };
    const Row rows[] = {
        {1, "trace ideal decomposition and pd on the 15-dim fixture", criterion1},
        {2, "syzygy, strong idempotency, selfinjective quotient, hereditary corner", criterion2},
        {3, "global right-phi bound on a 40+ module corpus", criterion3},
        {4, "projective trace ideal and exact membership on A2", criterion4},
        {5, "rank-sequence stabilization regression on the bounded loop", criterion5},
        {6, "division construction equals phi everywhere computable", criterion6},
        {7, "phi over the quotient vs phi of the inflation", criterion7},
        {8, "phi/psi transfer to the corner on certified members", criterion8},
        {9, "property sweep over 1000 random modules and paired identities", criterion9},
        {10, "fuzz command determinism and counterexample persistence", criterion10},
    };

    int fails = 0;
    for (const Row& r : rows) {
        Outcome o;
        try {
            o = r.fn();
        } catch (const std::exception& e) {
            o = bad(std::string("exception: ") + e.what());
        }
        if (!o.pass) ++fails;
        std::printf("[%s] criterion %d: %s (%s)\n", o.pass ? "PASS" : "FAIL", r.num, r.text,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    if (fails) std::printf("%d criteria failed\n", fails);
    return fails;
}
