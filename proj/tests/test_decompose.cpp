#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "itlab/decompose.hpp"

#include <map>
#include <random>

using namespace itlab;
using namespace fixtures;
using Fp = PrimeField;

namespace {

// classification as a name -> multiplicity map, for order-free comparison
template <class F>
std::map<std::string, int> class_names(IsoClassRegistry<F>& reg, const Module<F>& M) {
    std::map<std::string, int> out;
    for (auto& [id, mult] : reg.classify(M)) out[reg.label(id)] += mult;
    return out;
}

// the ideal of paths through S, as a left submodule of the regular module
Sub<Fp> ideal_sub_of(const Module<Fp>& REG, const AlgPtr<Fp>& A, const std::vector<int>& pos,
                     int first_vertex) {
    auto s = sub_zero(REG);
    std::vector<std::vector<int>> picks(A->nv());
    for (int b = 0; b < A->dim(); ++b) {
        bool through = false;
        for (int v : A->path_vertices(b))
            if (v >= first_vertex) through = true;
        if (through) picks[A->basis[b].tgt].push_back(pos[b]);
    }
    for (int v = 0; v < A->nv(); ++v) {
        Matrix<Fp> m(A->field, REG.dims[v], (int)picks[v].size());
        for (int j = 0; j < (int)picks[v].size(); ++j) m.at(picks[v][j], j) = A->field.one();
        s[v] = std::move(m);
    }
    return s;
}

}  // namespace

TEST_CASE("regular module decomposes into projectives", "[decompose]") {
    auto A = f2();
    std::vector<int> pos;
    auto REG = regular_module(A, &pos);
    validate_module(REG, true);
    IsoClassRegistry<Fp> reg(A);
    auto cls = reg.classify(REG);
    // five distinct classes, one per projective, each with multiplicity 1
    REQUIRE(cls.size() == 5);
    std::vector<Module<Fp>> ps;
    for (int w = 0; w < 5; ++w) ps.push_back(projective_module(A, w));
    REQUIRE(class_names(reg, REG) == class_names(reg, direct_sum(A, ps)));
}

TEST_CASE("trace ideal decomposition", "[decompose]") {
    auto A = f2();
    PrimeField f(101);
    std::vector<int> pos;
    auto REG = regular_module(A, &pos);
    auto s = ideal_sub_of(REG, A, pos, 2);
    REQUIRE(sub_is_closed(REG, s));
    auto ideal_mod = submodule(REG, s).mod;
    REQUIRE(ideal_mod.total() == 11);
    // P(3) + P(4)^3 + P(5) + S(5)^2; note P(4) is simple (vertex 4 is a sink)
    IsoClassRegistry<Fp> reg(A);
    auto expect = class_names(
        reg, direct_sum(A, {projective_module(A, 2), projective_module(A, 3),
                            projective_module(A, 3), projective_module(A, 3),
                            projective_module(A, 4), simple_module(A, 4), simple_module(A, 4)}));
    REQUIRE(class_names(reg, ideal_mod) == expect);
}

TEST_CASE("isomorphism tests", "[decompose]") {
    auto A = f2();
    auto P1 = projective_module(A, 0), P3 = projective_module(A, 2);
    REQUIRE(is_isomorphic(P1, P1));
    REQUIRE(!is_isomorphic(P1, P3));
    REQUIRE(is_indecomposable(P1));
    REQUIRE(!is_indecomposable(direct_sum(A, {P1, P3})));
    // iso is blind to the basis: shuffle P1 by a random change of coordinates
    PrimeField f(101);
    std::mt19937_64 rng(99);
    Module<Fp> twisted = P1;
    std::vector<Matrix<Fp>> g(A->nv()), gi(A->nv());
    for (int v = 0; v < A->nv(); ++v) {
        int n = P1.dims[v];
        for (;;) {
            Matrix<Fp> m(f, n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m.at(i, j) = f.random(rng);
            auto inv = inverse(m);
            if (inv) {
                g[v] = m;
                gi[v] = *inv;
                break;
            }
        }
    }
    for (size_t k = 0; k < A->gens.size(); ++k) {
        auto& gen = A->gens[k];
        twisted.act[k] = g[gen.tgt].mul(P1.act[k]).mul(gi[gen.src]);
    }
    validate_module(twisted, true);
    REQUIRE(is_isomorphic(P1, twisted));
}

TEST_CASE("random decompositions add up", "[decompose]") {
    auto A = f2();
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        auto M = random_module(A, rng, 2);
        auto d = decompose(M);
        int tot = 0;
        for (auto& sm : d.summands) {
            tot += sm.total();
            REQUIRE(is_indecomposable(sm));
        }
        REQUIRE(tot == M.total());
    }
}

TEST_CASE("registry labels are stable", "[decompose]") {
    auto A = f2();
    IsoClassRegistry<Fp> reg(A);
    auto c1 = class_names(reg, simple_module(A, 4));
    REQUIRE(c1.size() == 1);
    REQUIRE(c1.begin()->first == "S(5)");
    auto c2 = class_names(reg, projective_module(A, 2));
    REQUIRE(c2.begin()->first == "P(3)");
    // P(4) is simple, and the simple label wins
    auto c3 = class_names(reg, projective_module(A, 3));
    REQUIRE(c3.begin()->first == "S(4)");
}

TEST_CASE("decomposition over the rationals", "[decompose]") {
    RationalField q;
    FieldSpec spq;
    spq.rationals = true;
    auto A = build_algebra(q, spq, f2_pres());
    std::vector<int> pos;
    auto REG = regular_module(A, &pos);
    IsoClassRegistry<RationalField> reg(A);
    auto cls = reg.classify(REG);
    REQUIRE(cls.size() == 5);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 5; ++i) {
        auto M = random_module(A, rng, 1);
        auto d = decompose(M);
        int tot = 0;
        for (auto& sm : d.summands) tot += sm.total();
        REQUIRE(tot == M.total());
    }
}
