// Idempotent-ideal analysis end to end: pick a vertex subset S, build the
// trace ideal, the quotient and the corner algebra, certify strong
// idempotency, and score every comparison bound on a generated corpus.
//
//   build && ./demo_bounds

#include "itlab/verify.hpp"
#include "itlab/io.hpp"

#include <cstdio>

using namespace itlab;
using Fp = PrimeField;

int main() {
    Presentation p;
    p.name = "demo";
    p.q.vertices = {"1", "2", "3", "4", "5"};
    p.q.arrows = {{"alpha", 0, 1}, {"beta", 1, 0},  {"gamma", 2, 0}, {"delta", 0, 3},
                  {"mu", 0, 4},    {"theta", 2, 3}, {"epsilon", 4, 3}};
    p.q.finalize();
    for (auto tr : std::vector<std::vector<std::string>>{
             {"beta", "alpha"}, {"alpha", "beta"}, {"gamma", "delta"},
             {"gamma", "mu"},   {"mu", "epsilon"}}) {
        Relation r;
        r.terms.push_back({"1", std::move(tr)});
        p.relations.push_back(r);
    }
    auto A = build_algebra(Fp(101), FieldSpec{}, p);

    // S = {3,4,5}: the ideal generated by the idempotents at these vertices
    auto ctx = build_context(A, {2, 3, 4});
    std::printf("algebra dim %d; ideal dim %zu; quotient dim %d; corner dim %d\n", A->dim(),
                ctx->ideal.size(), ctx->quot.Q->dim(), ctx->corner.G->dim());

    auto strong = is_strong_idempotent(*ctx, 6);
    std::printf("strong idempotent: %s\n\n", to_json(strong)["status"].dump().c_str());

    auto corpus = gen_corpus(*ctx, 0, 20, 3);
    auto rep = bound_report(*ctx, strong, corpus);

    std::printf("ingredients:\n");
    json ing = to_json(rep.ing);
    for (auto& [k, v] : ing.items()) std::printf("  %-18s %s\n", k.c_str(), v.dump().c_str());

    std::printf("\nbounds on a %zu-module corpus:\n", corpus.size());
    for (auto& row : rep.rows) {
        const char* st = row.status == BoundRow::Status::Pass          ? "pass"
                         : row.status == BoundRow::Status::Violated    ? "VIOLATED"
                         : row.status == BoundRow::Status::Unknown     ? "unknown"
                                                                       : "n/a";
        std::printf("  %-28s %-9s %s  (checked %d)\n", row.id.c_str(), st,
                    row.formula.c_str(), row.checked);
        for (auto& v : row.violations) std::printf("      %s\n", v.c_str());
    }
    std::printf("\nmax phi_l seen %d, max phi_r seen %d\n", rep.max_phi_l, rep.max_phi_r);
    return 0;
}
