// A guided tour: build a bound quiver algebra, look at a few modules, and
// compute the phi/psi invariants along with their division witnesses.
//
//   build && ./demo_walkthrough

#include "itlab/igusa_todorov.hpp"
#include "itlab/expr.hpp"

#include <cstdio>

using namespace itlab;
using Fp = PrimeField;

int main() {
    // quiver: 1 <-> 2 (both composites zero), arms 3 -> 1, 1 -> 4, 1 -> 5,
    // 3 -> 4, 5 -> 4, with delta gamma = mu gamma = epsilon mu = 0
    Presentation p;
    p.name = "walkthrough";
    p.q.vertices = {"1", "2", "3", "4", "5"};
    p.q.arrows = {{"alpha", 0, 1}, {"beta", 1, 0},  {"gamma", 2, 0}, {"delta", 0, 3},
                  {"mu", 0, 4},    {"theta", 2, 3}, {"epsilon", 4, 3}};
    p.q.finalize();
    auto kill = [&](std::vector<std::string> traversal) {
        Relation r;
        r.terms.push_back({"1", std::move(traversal)});
        p.relations.push_back(r);
    };
    kill({"beta", "alpha"});
    kill({"alpha", "beta"});
    kill({"gamma", "delta"});
    kill({"gamma", "mu"});
    kill({"mu", "epsilon"});

    auto A = build_algebra(Fp(101), FieldSpec{}, p);
    std::printf("algebra: dim %d over %s\n", A->dim(), A->spec.describe().c_str());
    std::printf("basis paths:");
    for (auto& b : A->basis) std::printf(" %s", b.label.c_str());
    std::printf("\n\n");

    // modules can be spelled out as expressions
    ItSession<Fp> S(A);
    for (const char* expr : {"S(1)", "S(2)", "Sum(S(1),S(2))", "Omega(1, S(2))", "Rad(P(1))"}) {
        auto M = eval_module_expr(A, expr);
        auto phi = phi_module(S, M);
        auto psi = psi_module(S, M);
        std::printf("%-18s phi = %-12s psi = %s\n", expr, phi.str().c_str(), psi.str().c_str());
    }

    // phi through the division construction, with the witness chain
    auto M = eval_module_expr(A, "Sum(S(1),S(2),S(5))");
    DivisionWitness w;
    int d = phi_via_divisions(S, M, 64, &w);
    auto phi = phi_module(S, M);
    std::printf("\nSum(S(1),S(2),S(5)): phi = %s, divisions give %d at depth %d\n",
                phi.str().c_str(), d, w.depth);
    for (auto& s : w.plus) std::printf("  + %s\n", s.c_str());
    for (auto& s : w.minus) std::printf("  - %s\n", s.c_str());

    // a module of infinite projective dimension still has finite phi
    auto pd = pd_module(S, eval_module_expr(A, "S(2)"));
    std::printf("\npd S(2) = %s, phi S(2) = %s\n", pd.str().c_str(),
                phi_module(S, eval_module_expr(A, "S(2)")).str().c_str());
    return 0;
}
