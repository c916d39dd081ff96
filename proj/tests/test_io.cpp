#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "itlab/expr.hpp"
#include "itlab/io.hpp"

using namespace itlab;
using namespace fixtures;
using Fp = PrimeField;

#ifndef FIXTURE_DIR
#define FIXTURE_DIR "fixtures"
#endif

TEST_CASE("presentation from json", "[io]") {
    const char* f2json = R"({
      "schema": "itlab/1", "name": "f2", "field": {"prime": 101},
      "quiver": {"vertices": ["1","2","3","4","5"],
        "arrows": [{"name":"alpha","from":"1","to":"2"},
                   {"name":"beta","from":"2","to":"1"},
                   {"name":"gamma","from":"3","to":"1"},
                   {"name":"delta","from":"1","to":"4"},
                   {"name":"mu","from":"1","to":"5"},
                   {"name":"theta","from":"3","to":"4"},
                   {"name":"epsilon","from":"5","to":"4"}]},
      "relations": [[{"coeff":"1","path":["beta","alpha"]}],
                    [{"coeff":"1","path":["alpha","beta"]}],
                    [{"coeff":"1","path":["gamma","delta"]}],
                    [{"coeff":"1","path":["gamma","mu"]}],
                    [{"coeff":"1","path":["mu","epsilon"]}]]
    })";
    auto lp = presentation_from_json(json::parse(f2json));
    REQUIRE(!lp.field.rationals);
    REQUIRE(lp.field.prime == 101);
    auto A = build_algebra(Fp(101), lp.field, lp.pres);
    REQUIRE(A->dim() == 15);

    // round trip through the writer
    auto j2 = presentation_to_json(lp.pres, lp.field);
    REQUIRE(j2["schema"] == "itlab/1");
    auto lp2 = presentation_from_json(j2);
    auto A2 = build_algebra(Fp(101), lp2.field, lp2.pres);
    REQUIRE(A2->dim() == 15);
    REQUIRE(A2->vertex_names == A->vertex_names);
}

TEST_CASE("fixture files load", "[io]") {
    auto l1 = load_presentation(std::string(FIXTURE_DIR) + "/f1.json");
    auto l2 = load_presentation(std::string(FIXTURE_DIR) + "/f2.json");
    auto l3 = load_presentation(std::string(FIXTURE_DIR) + "/f3.json");
    auto A1 = build_algebra(Fp(101), l1.field, l1.pres);
    auto A2 = build_algebra(Fp(101), l2.field, l2.pres);
    auto A3 = build_algebra(Fp(101), l3.field, l3.pres);
    REQUIRE(A1->dim() == 3);
    REQUIRE(A2->dim() == 15);
    REQUIRE(A3->dim() == 7);
    REQUIRE(A3->vertex_names == std::vector<std::string>{"1", "2", "3", "loop"});
    // fixture relations match the in-memory presentations
    REQUIRE(build_algebra(Fp(101), FieldSpec{}, f2_pres())->dim() == A2->dim());
    REQUIRE_THROWS_AS(load_presentation(std::string(FIXTURE_DIR) + "/nope.json"), Error);
}

TEST_CASE("relation paths accept bare arrays", "[io]") {
    // shorthand: a relation may be a plain traversal array
    const char* j = R"({
      "schema": "itlab/1", "name": "tiny", "field": {"prime": 101},
      "quiver": {"vertices": ["1","2","3"],
        "arrows": [{"name":"a","from":"1","to":"2"},
                   {"name":"b","from":"2","to":"3"}]},
      "relations": [["a","b"]]
    })";
    auto lp = presentation_from_json(json::parse(j));
    auto A = build_algebra(Fp(101), lp.field, lp.pres);
    REQUIRE(A->dim() == 5);  // ab dies
}

TEST_CASE("result serialization", "[io]") {
    auto A = f2();
    ItSession<Fp> S(A);
    auto phi = phi_module(S, eval_module_expr(A, "Sum(S(1),S(2))"));
    json pj = to_json(phi);
    REQUIRE(pj.contains("ranks"));
    REQUIRE(pj.contains("certificate"));
    std::string txt = render_text(pj);
    REQUIRE(txt.find("ranks:") != std::string::npos);

    // pd values
    Session<Fp>& base = S;
    auto pd = pd_module(base, simple_module(A, 1));
    json dj = to_json(pd);
    REQUIRE(dj["kind"] == "infinite");

    auto psi = psi_module(S, simple_module(A, 0));
    json sj = to_json(psi);
    REQUIRE(sj.contains("value"));
}

TEST_CASE("emitted rank sequences stop at phi", "[io]") {
    // the observed sequence can run past the stabilization point; the emitted
    // one is trimmed to r_0..r_phi
    auto B = f3();
    ItSession<Fp> S(B);
    auto M = direct_sum(B, {simple_module(B, 0), simple_module(B, 3)});
    auto phi = phi_module(S, M);
    REQUIRE((phi.known() && phi.value == 2));
    json j = to_json(phi);
    auto ranks = j["ranks"].get<std::vector<int>>();
    REQUIRE(ranks == std::vector<int>{2, 2, 1});
}

TEST_CASE("text rendering is stable", "[io]") {
    json j;
    j["schema"] = "itlab/1";
    j["b"] = 2;
    j["a"] = json::array({1, 2, 3});
    j["nested"] = json::object({{"x", "y"}});
    std::string txt = render_text(j);
    REQUIRE(txt.find("itlab/1") != std::string::npos);
    REQUIRE(render_text(j) == txt);
}

TEST_CASE("bad input files are rejected", "[io]") {
    REQUIRE_THROWS_AS(presentation_from_json(json::parse(R"({"schema":"bogus/9"})")),
                      InputError);
    // unknown arrow in a relation
    const char* j = R"({
      "schema": "itlab/1", "name": "bad", "field": {"prime": 101},
      "quiver": {"vertices": ["1"], "arrows": []},
      "relations": [["zzz"]]
    })";
    auto lp = presentation_from_json(json::parse(j));
    REQUIRE_THROWS_AS(build_algebra(Fp(101), lp.field, lp.pres), InputError);
}
