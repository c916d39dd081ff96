#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

#include <set>

using namespace itlab;
using namespace fixtures;
using Fp = PrimeField;

TEST_CASE("path algebra of A2", "[algebra]") {
    auto A = f1();
    validate_table(*A);
    REQUIRE(A->dim() == 2 + 1);  // e_1, e_2, alpha
    REQUIRE(A->nv() == 2);
    REQUIRE(A->vertex_names == std::vector<std::string>{"1", "2"});
    // alpha runs 1 -> 2 and squares to zero
    int al = -1;
    for (int b = 0; b < A->dim(); ++b)
        if (A->basis[b].label == "alpha") al = b;
    REQUIRE(al >= 0);
    REQUIRE(A->basis[al].src == 0);
    REQUIRE(A->basis[al].tgt == 1);
    auto is_basis = [&](const auto& sv, int k) {
        return sv.size() == 1 && sv[0].first == k && A->field.eq(sv[0].second, A->field.one());
    };
    REQUIRE(A->mul(al, al).empty());
    // idempotents multiply as expected
    REQUIRE(is_basis(A->mul(A->idem[0], A->idem[0]), A->idem[0]));
    REQUIRE(A->mul(A->idem[0], A->idem[1]).empty());
    REQUIRE(is_basis(A->mul(al, A->idem[0]), al));   // alpha * e_1 picks up the source
    REQUIRE(is_basis(A->mul(A->idem[1], al), al));   // e_2 * alpha picks up the target
}

TEST_CASE("15-dimensional fixture", "[algebra]") {
    auto A = f2();
    validate_table(*A);
    REQUIRE(A->dim() == 15);
    REQUIRE(A->gens.size() == 7);
    // the basis consists of the 5 trivial paths, 7 arrows, and 3 composites
    std::multiset<int> lens;
    for (auto& b : A->basis) lens.insert(b.len);
    REQUIRE(lens.count(0) == 5);
    REQUIRE(lens.count(1) == 7);
    REQUIRE(lens.count(2) == 3);
    std::set<std::string> labels;
    for (auto& b : A->basis) labels.insert(b.label);
    REQUIRE(labels.count("alpha*gamma") == 1);   // gamma then alpha: 3 -> 2
    REQUIRE(labels.count("delta*beta") == 1);
    REQUIRE(labels.count("mu*beta") == 1);
    REQUIRE(labels.count("delta*gamma") == 0);   // killed by a relation
    REQUIRE(labels.count("epsilon*mu") == 0);    // killed by a relation
    REQUIRE(labels.count("e_1") == 1);
    // path_vertices traces the chain
    for (int b = 0; b < A->dim(); ++b) {
        auto ch = A->path_vertices(b);
        REQUIRE((int)ch.size() == A->basis[b].len + 1);
        REQUIRE(ch.front() == A->basis[b].src);
        REQUIRE(ch.back() == A->basis[b].tgt);
    }
}

TEST_CASE("bounded loop", "[algebra]") {
    auto A = f3();
    validate_table(*A);
    REQUIRE(A->dim() == 7);  // 4 trivial + a, b, x  (ab and x^2 die)
    REQUIRE(A->vertex_names[3] == "loop");
}

TEST_CASE("opposite algebra", "[algebra]") {
    auto A = f2();
    auto O = opposite(A);
    validate_table(*O);
    REQUIRE(O->dim() == A->dim());
    // applying the construction twice yields the original object, not a copy
    REQUIRE(opposite(O).get() == A.get());
    // arrows reverse
    std::set<std::pair<int, int>> fwd, bwd;
    for (auto& g : A->gens) fwd.insert({g.src, g.tgt});
    for (auto& g : O->gens) bwd.insert({g.tgt, g.src});
    REQUIRE(fwd == bwd);
}

TEST_CASE("corner algebra", "[algebra]") {
    auto A = f2();
    auto C = corner_algebra(A, {2, 3, 4});
    validate_table(*C.G);
    REQUIRE(C.G->dim() == 5);
    REQUIRE(C.G->nv() == 3);
    REQUIRE(C.corner_vertices == std::vector<int>{2, 3, 4});
    // corners keep the original vertex names
    REQUIRE(C.G->vertex_names == std::vector<std::string>{"3", "4", "5"});
}

TEST_CASE("quotient algebra", "[algebra]") {
    auto A = f2();
    // span of all basis paths visiting vertex index 2 is a two-sided ideal
    std::vector<int> ideal;
    for (int b = 0; b < A->dim(); ++b)
        for (int v : A->path_vertices(b))
            if (v == 2) {
                ideal.push_back(b);
                break;
            }
    REQUIRE(ideal.size() == 4);  // e_3, gamma, theta, delta*gamma
    auto Q = quotient_algebra(A, ideal);
    validate_table(*Q.Q);
    REQUIRE(Q.Q->dim() == 11);
    REQUIRE(Q.Q->nv() == 4);

    // a single idempotent is not an ideal
    REQUIRE_THROWS_AS(quotient_algebra(A, std::vector<int>{A->idem[0]}), NotAnIdeal);
}

TEST_CASE("two-term relation", "[algebra]") {
    // commutative square: d c = b a identified, so one length-2 path survives
    Presentation sq;
    sq.name = "square";
    sq.q.vertices = {"1", "2", "3", "4"};
    sq.q.arrows = {{"a", 0, 1}, {"b", 1, 3}, {"c", 0, 2}, {"d", 2, 3}};
    sq.q.finalize();
    Relation r;
    r.terms.push_back({"1", {"a", "b"}});
    r.terms.push_back({"-1", {"c", "d"}});
    sq.relations = {r};
    auto A = build_algebra(Fp(101), FieldSpec{}, sq);
    validate_table(*A);
    REQUIRE(A->dim() == 9);  // 4 + 4 + one diagonal
}

TEST_CASE("rational coefficients", "[algebra]") {
    RationalField q;
    FieldSpec spq;
    spq.rationals = true;
    auto A = build_algebra(q, spq, f2_pres());
    validate_table(*A);
    REQUIRE(A->dim() == 15);
}

TEST_CASE("bad input is rejected", "[algebra]") {
    Presentation p;
    p.q.vertices = {"1"};
    p.q.arrows = {{"a", 0, 0}};
    p.q.finalize();
    Relation r;
    r.terms.push_back({"1", {"zzz"}});  // unknown arrow name
    p.relations = {r};
    REQUIRE_THROWS_AS(build_algebra(Fp(101), FieldSpec{}, p), InputError);

    // an unbounded loop overflows the path cap
    Presentation loop;
    loop.q.vertices = {"1"};
    loop.q.arrows = {{"a", 0, 0}};
    loop.q.finalize();
    loop.max_paths = 50;
    REQUIRE_THROWS_AS(build_algebra(Fp(101), FieldSpec{}, loop), DimensionOverflow);
}
