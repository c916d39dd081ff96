#pragma once

// Quiver presentations used across the test suites.
//
//   f1:  1 --alpha--> 2                          (hereditary A2)
//   f2:  the 15-dimensional algebra on 5 vertices with a 2-cycle at {1,2},
//        arms into 4 and 5, and five monomial relations
//   f3:  1 -a-> 2 -b-> 3 with ab = 0, plus a loop x at "loop" with x^2 = 0
//   two_cycle:  1 <--> 2 with both composites zero (selfinjective Nakayama)
//
// Relation paths are written in traversal order: {"a","b"} kills "a then b".

#include "itlab/algebra.hpp"

namespace fixtures {

using namespace itlab;

inline void add_rel(Presentation& p, std::vector<std::string> tr) {
    Relation r;
    r.terms.push_back({"1", std::move(tr)});
    p.relations.push_back(r);
}

inline Presentation f1_pres() {
    Presentation p;
    p.name = "f1";
    p.q.vertices = {"1", "2"};
    p.q.arrows = {{"alpha", 0, 1}};
    p.q.finalize();
    return p;
}

inline Presentation f2_pres() {
    Presentation p;
    p.name = "f2";
    p.q.vertices = {"1", "2", "3", "4", "5"};
    p.q.arrows = {{"alpha", 0, 1}, {"beta", 1, 0},  {"gamma", 2, 0}, {"delta", 0, 3},
                  {"mu", 0, 4},    {"theta", 2, 3}, {"epsilon", 4, 3}};
    p.q.finalize();
    add_rel(p, {"beta", "alpha"});
    add_rel(p, {"alpha", "beta"});
    add_rel(p, {"gamma", "delta"});
    add_rel(p, {"gamma", "mu"});
    add_rel(p, {"mu", "epsilon"});
    return p;
}

inline Presentation f3_pres() {
    Presentation p;
    p.name = "f3";
    p.q.vertices = {"1", "2", "3", "loop"};
    p.q.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"x", 3, 3}};
    p.q.finalize();
    add_rel(p, {"a", "b"});
    add_rel(p, {"x", "x"});
    return p;
}

inline Presentation two_cycle_pres() {
    Presentation p;
    p.name = "cyc2";
    p.q.vertices = {"1", "2"};
    p.q.arrows = {{"alpha", 0, 1}, {"beta", 1, 0}};
    p.q.finalize();
    add_rel(p, {"beta", "alpha"});
    add_rel(p, {"alpha", "beta"});
    return p;
}

inline AlgPtr<PrimeField> f1() { return build_algebra(PrimeField(101), FieldSpec{}, f1_pres()); }
inline AlgPtr<PrimeField> f2() { return build_algebra(PrimeField(101), FieldSpec{}, f2_pres()); }
inline AlgPtr<PrimeField> f3() { return build_algebra(PrimeField(101), FieldSpec{}, f3_pres()); }
inline AlgPtr<PrimeField> two_cycle() {
    return build_algebra(PrimeField(101), FieldSpec{}, two_cycle_pres());
}

}  // namespace fixtures
