// itlab — exact homological computations for bound quiver algebras.
//
// Subcommands: inspect, phi, ideal, verify, fuzz.  Every command emits one
// report, as an indented key/value text tree or as JSON; both carry the same
// numbers.  Exit codes: 0 all checks passed / value computed, 1 a check
// failed (a witness is in the report), 2 something stayed undecided with no
// failure, 3 bad input.

#include "itlab/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace itlab;

namespace {

struct Output {
    std::string format = "text";
    std::string path;
};

void emit(const Output& out, const json& j) {
    std::string body = out.format == "json" ? j.dump(2) + "\n" : render_text(j);
    if (out.path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(out.path);
    if (!f) throw InputError("cannot write output file: " + out.path);
    f << body;
}

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("-o,--output", out.path, "write the report to a file instead of stdout");
}

template <class F>
std::vector<int> vertex_indices(const AlgebraTable<F>& A, const std::vector<std::string>& names) {
    if (names.empty()) throw InputError("--vertices needs at least one vertex name");
    std::vector<int> out;
    for (const auto& n : names) {
        auto it = std::find(A.vertex_names.begin(), A.vertex_names.end(), n);
        if (it == A.vertex_names.end()) throw InputError("unknown vertex: " + n);
        out.push_back((int)(it - A.vertex_names.begin()));
    }
    return out;
}

int path_len(const AlgebraTable<PrimeField>& A, int b) { return (int)A.path_vertices(b).size() - 1; }

template <class F>
int cmd_inspect(const LoadedPresentation& lp, const F& f, int bound, const Output& out) {
    AlgPtr<F> A = build_algebra(f, lp.field, lp.pres);
    json j;
    j["schema"] = kSchema;
    j["algebra"] = A->name;
    j["field"] = lp.field.describe();
    j["dim"] = A->dim();
    j["vertices"] = A->vertex_names;
    json basis = json::array();
    for (int b = 0; b < A->dim(); ++b) {
        const auto& e = A->basis[b];
        basis.push_back(json{{"label", e.label},
                             {"from", A->vertex_names[e.src]},
                             {"to", A->vertex_names[e.tgt]}});
    }
    j["basis"] = basis;
    json pd = json::object();
    for (int v = 0; v < A->nv(); ++v)
        pd["P(" + A->vertex_names[v] + ")"] = projective_module(A, v).total();
    j["projective_dims"] = pd;
    // dim of rad^k = number of basis paths of length >= k
    std::vector<int> series;
    for (int k = 1;; ++k) {
        int d = 0;
        for (int b = 0; b < A->dim(); ++b)
            if ((int)A->path_vertices(b).size() - 1 >= k) ++d;
        if (d == 0) break;
        series.push_back(d);
    }
    j["radical_power_dims"] = series;
    Session<F> sess(A);
    j["global_dimension"] = global_dimension(sess, bound).str();
    j["selfinjective"] = is_selfinjective(A);
    emit(out, j);
    return 0;
}

template <class F>
int cmd_phi(const LoadedPresentation& lp, const F& f, const std::string& expr,
            const std::string& side, int max_steps, const Output& out) {
    AlgPtr<F> A = build_algebra(f, lp.field, lp.pres);
    Module<F> M = eval_module_expr(A, expr);
    json j;
    j["schema"] = kSchema;
    j["algebra"] = A->name;
    j["module"] = expr;
    j["side"] = side;
    j["module_dims"] = M.dims;

    AlgPtr<F> B = side == "l" ? A : opposite(A);
    Module<F> N = side == "l" ? M : dual_module(M);
    ItSession<F> sess(B);
    PhiResult phi = phi_module(sess, N, max_steps);
    PsiResult psi = psi_module(sess, N, max_steps);
    j["phi"] = to_json(phi);
    j["psi"] = to_json(psi);
    int rc = phi.known() && psi.known ? 0 : 2;
    if (phi.known()) {
        try {
            DivisionWitness w;
            int d = phi_via_divisions(sess, N, max_steps, &w);
            j["divisions"] = to_json(w);
            if (d != phi.value) {
                j["divisions_disagree"] = {{"divisions", d}, {"phi", phi.value}};
                rc = 1;
            }
        } catch (const SearchCapExceeded& e) {
            j["divisions"] = json{{"skipped", e.what()}};
        }
    }
    emit(out, j);
    return rc;
}

template <class F>
json algebra_summary(const AlgPtr<F>& G, int bound) {
    json j;
    j["dim"] = G->dim();
    j["vertices"] = G->vertex_names;
    Session<F> s(G);
    j["global_dimension"] = global_dimension(s, bound).str();
    j["selfinjective"] = is_selfinjective(G);
    return j;
}

template <class F>
int cmd_ideal(const LoadedPresentation& lp, const F& f, const std::vector<std::string>& verts,
              int bound, int corpus_size, std::uint64_t seed, const Output& out) {
    AlgPtr<F> A = build_algebra(f, lp.field, lp.pres);
    auto S = vertex_indices(*A, verts);
    auto ctx = build_context(A, S);
    json j;
    j["schema"] = kSchema;
    j["algebra"] = A->name;
    j["field"] = lp.field.describe();
    j["vertex_set"] = verts;
    j["dims"] = {{"algebra", A->dim()},
                 {"ideal", ctx->ideal_sub.mod.total()},
                 {"quotient", ctx->quot_zero ? 0 : ctx->quot.Q->dim()},
                 {"corner", ctx->corner.G->dim()}};

    json dec = json::array();
    for (auto& [cls, mult] : ctx->sess->classify(ctx->ideal_sub.mod))
        dec.push_back(json{{"class", ctx->sess->label(cls)}, {"multiplicity", mult}});
    j["ideal"] = {{"decomposition", dec},
                  {"projective", is_projective_module(ctx->ideal_sub.mod)},
                  {"pd", to_json(pd_module(*ctx->sess, ctx->ideal_sub.mod, bound))}};

    StrongIdemResult strong = is_strong_idempotent(*ctx, 6);
    j["strong_idempotent"] = to_json(strong);
    if (!ctx->quot_zero) j["quotient_algebra"] = algebra_summary(ctx->quot.Q, bound);
    j["corner_algebra"] = algebra_summary(ctx->corner.G, bound);

    auto corpus = gen_corpus(*ctx, seed, corpus_size, 4);
    BoundReportOpts opts;
    opts.cap = bound;
    BoundReport<F> rep = bound_report(*ctx, strong, corpus, opts);
    j["ingredients"] = to_json(rep.ing);
    j["bounds"] = to_json(rep);

    int rc = 0;
    bool undecided = strong.status == StrongIdemResult::Status::Unknown;
    for (auto& row : rep.rows) {
        if (row.status == BoundRow::Status::Violated && !row.probe) rc = 1;
        if (row.status == BoundRow::Status::Unknown && row.id != "phi_r-dim-via-T")
            undecided = true;
    }
    emit(out, j);
    return rc == 1 ? 1 : (undecided ? 2 : 0);
}

template <class F>
int cmd_verify(const LoadedPresentation& lp, const F& f, const std::vector<std::string>& verts,
               int corpus_size, std::uint64_t seed, int bound, int max_steps, const Output& out) {
    AlgPtr<F> A = build_algebra(f, lp.field, lp.pres);
    auto S = vertex_indices(*A, verts);
    auto ctx = build_context(A, S);
    SuiteConfig cfg;
    cfg.count = corpus_size;
    cfg.seed = seed;
    cfg.cap = bound;
    cfg.max_steps = max_steps;
    auto corpus = gen_corpus(*ctx, seed, cfg.count, cfg.depth);
    SuiteReport<F> rep = run_suite(*ctx, corpus, cfg);
    emit(out, to_json(rep));
    return rep.exit_code();
}

int cmd_fuzz(std::uint64_t seed, int iterations, const std::string& bundle_dir,
             const Output& out) {
    FuzzOutcome fo = run_fuzz(seed, iterations);
    json written = json::array();
    for (auto& b : fo.failure_bundles) {
        std::string path = bundle_dir + "/fuzz-fail-" + std::to_string(seed) + "-" +
                           std::to_string(b["iteration"].get<int>()) + ".json";
        std::ofstream f(path);
        if (!f) throw InputError("cannot write failure bundle: " + path);
        f << b.dump(2) << "\n";
        written.push_back(path);
    }
    json j = fo.report;
    if (!written.empty()) j["failure_bundles"] = written;
    emit(out, j);
    return fo.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Igusa-Todorov functions and idempotent-ideal analysis for bound "
                 "quiver algebras"};
    app.require_subcommand(1);

    std::string alg_path, module_expr, side = "l", bundle_dir = ".";
    std::vector<std::string> verts;
    int bound = 50, max_steps = 200, corpus_size = 30, iterations = 50;
    std::uint64_t seed = 0;
    Output out;

    auto* c_inspect = app.add_subcommand("inspect", "algebra table, radical series, "
                                                    "global dimension");
    c_inspect->add_option("algebra", alg_path, "algebra JSON file")->required();
    c_inspect->add_option("--bound", bound, "resolution stage cap")->capture_default_str();
    add_output_flags(c_inspect, out);

    auto* c_phi = app.add_subcommand("phi", "Igusa-Todorov functions of one module");
    c_phi->add_option("algebra", alg_path, "algebra JSON file")->required();
    c_phi->add_option("--module", module_expr, "module expression, e.g. Sum(S(1),Omega(1,P(2)))")
        ->required();
    c_phi->add_option("--side", side, "l: as given; r: of the dual over the opposite algebra")
        ->check(CLI::IsMember({"l", "r"}))
        ->capture_default_str();
    c_phi->add_option("--max-steps", max_steps, "iteration cap")->capture_default_str();
    add_output_flags(c_phi, out);

    auto* c_ideal = app.add_subcommand("ideal", "idempotent-ideal analysis for a vertex set");
    c_ideal->add_option("algebra", alg_path, "algebra JSON file")->required();
    c_ideal->add_option("--vertices", verts, "vertex names spanning the idempotent")
        ->required()
        ->delimiter(',');
    c_ideal->add_option("--bound", bound, "resolution stage cap")->capture_default_str();
    c_ideal->add_option("--corpus-size", corpus_size, "random modules behind the bound rows")
        ->capture_default_str();
    c_ideal->add_option("--seed", seed, "corpus seed")->capture_default_str();
    add_output_flags(c_ideal, out);

    auto* c_verify = app.add_subcommand("verify", "run the full property suite");
    c_verify->add_option("algebra", alg_path, "algebra JSON file")->required();
    c_verify->add_option("--vertices", verts, "vertex names spanning the idempotent")
        ->required()
        ->delimiter(',');
    c_verify->add_option("--corpus-size", corpus_size, "random corpus members")
        ->capture_default_str();
    c_verify->add_option("--seed", seed, "corpus seed")->capture_default_str();
    c_verify->add_option("--bound", bound, "resolution stage cap")->capture_default_str();
    c_verify->add_option("--max-steps", max_steps, "phi iteration cap")->capture_default_str();
    add_output_flags(c_verify, out);

    auto* c_fuzz = app.add_subcommand("fuzz", "property suite over random algebras");
    c_fuzz->add_option("--seed", seed, "master seed")->capture_default_str();
    c_fuzz->add_option("--iterations", iterations, "algebras to try")->capture_default_str();
    c_fuzz->add_option("--bundle-dir", bundle_dir, "where failure bundles are written")
        ->capture_default_str();
    add_output_flags(c_fuzz, out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_fuzz->parsed()) return cmd_fuzz(seed, iterations, bundle_dir, out);
        LoadedPresentation lp = load_presentation(alg_path);
        return with_field(lp.field, [&](const auto& f) -> int {
            if (c_inspect->parsed()) return cmd_inspect(lp, f, bound, out);
            if (c_phi->parsed()) return cmd_phi(lp, f, module_expr, side, max_steps, out);
            if (c_ideal->parsed())
                return cmd_ideal(lp, f, verts, bound, corpus_size, seed, out);
            return cmd_verify(lp, f, verts, corpus_size, seed, bound, max_steps, out);
        });
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
