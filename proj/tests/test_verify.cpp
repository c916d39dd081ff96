#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "itlab/verify.hpp"

using namespace itlab;
using namespace fixtures;
using Fp = PrimeField;

namespace {

const CheckResult* find_check(const SuiteReport<Fp>& r, const std::string& id) {
    for (auto& c : r.checks)
        if (c.id == id) return &c;
    return nullptr;
}

std::string gating_failures(const SuiteReport<Fp>& r) {
    std::string out;
    for (auto& c : r.checks) {
        if (c.status == CheckResult::Status::Fail && !c.probe) {
            out += c.id + ":";
            for (auto& w : c.witnesses) out += " " + w;
            out += "\n";
        }
        if (c.status == CheckResult::Status::Skipped && c.inconclusive)
            out += c.id + " inconclusive: " + c.skip_reason + "\n";
    }
    return out;
}

}  // namespace

TEST_CASE("suite on A2, S = {2}", "[verify]") {
    auto A = f1();
    auto ctx = build_context(A, {1});
    SuiteConfig cfg;
    cfg.count = 12;
    cfg.depth = 3;
    cfg.cap = 40;
    cfg.max_steps = 100;
    cfg.jmax = 2;
    cfg.pair_budget = 200;
    auto corpus = gen_corpus(*ctx, 0, cfg.count, cfg.depth);
    auto rep = run_suite(*ctx, corpus, cfg);

    INFO(gating_failures(rep));
    CHECK(rep.fails == 0);
    CHECK(rep.inconclusive == 0);
    REQUIRE(rep.exit_code() == 0);

    // the unsharpened comparison constant is refuted here, but only as a probe
    auto* probe = find_check(rep, "extension-syzygy-reach/unshifted");
    REQUIRE(probe != nullptr);
    REQUIRE(probe->probe);
    REQUIRE(probe->status == CheckResult::Status::Fail);
    auto* sharp = find_check(rep, "extension-syzygy-reach");
    REQUIRE(sharp != nullptr);
    REQUIRE(sharp->status == CheckResult::Status::Pass);

    auto* qp = find_check(rep, "quotient-phi-comparison");
    REQUIRE(qp != nullptr);
    REQUIRE(qp->status == CheckResult::Status::Pass);
    auto* bt = find_check(rep, "bound/phi_l-Tt/unsharpened");
    REQUIRE(bt != nullptr);
    REQUIRE(bt->probe);
    // the phi_r-dim supremum row can never be certified on a finite corpus;
    // it skips benignly
    auto* bs = find_check(rep, "bound/phi_r-dim-via-T");
    REQUIRE(bs != nullptr);
    REQUIRE(bs->status == CheckResult::Status::Skipped);
    REQUIRE(!bs->inconclusive);
    auto* qt = find_check(rep, "quotient-projectives-transfer");
    REQUIRE(qt != nullptr);
    REQUIRE(qt->status == CheckResult::Status::Pass);
}

TEST_CASE("suite on the 15-dimensional fixture, S = {3,4,5}", "[verify]") {
    auto A = f2();
    auto ctx = build_context(A, {2, 3, 4});
    SuiteConfig cfg;
    cfg.count = 24;
    cfg.depth = 3;
    cfg.cap = 40;
    cfg.max_steps = 100;
    cfg.jmax = 2;
    cfg.pair_budget = 200;
    auto corpus = gen_corpus(*ctx, 0, cfg.count, cfg.depth);
    auto rep = run_suite(*ctx, corpus, cfg);

    INFO(gating_failures(rep));
    CHECK(rep.fails == 0);
    REQUIRE(rep.strong.yes());

    auto* qp = find_check(rep, "quotient-phi-comparison");
    REQUIRE(qp != nullptr);
    REQUIRE(qp->status == CheckResult::Status::Pass);
    REQUIRE(qp->qualifying >= 10);
    auto* cp = find_check(rep, "corner-phi-transfer");
    REQUIRE(cp != nullptr);
    REQUIRE(cp->status == CheckResult::Status::Pass);
    REQUIRE(cp->qualifying >= 4);
    auto* sharp = find_check(rep, "extension-syzygy-reach");
    REQUIRE(sharp != nullptr);
    REQUIRE(sharp->status == CheckResult::Status::Pass);
    auto* pb = find_check(rep, "extension-phi-bound");
    REQUIRE(pb != nullptr);
    REQUIRE(pb->status == CheckResult::Status::Pass);
}

TEST_CASE("suite refuses nothing on a non-strong ideal", "[verify]") {
    auto A = two_cycle();
    auto ctx = build_context(A, {1});
    SuiteConfig cfg;
    cfg.count = 8;
    cfg.depth = 2;
    cfg.cap = 30;
    cfg.max_steps = 80;
    cfg.pair_budget = 120;
    auto corpus = gen_corpus(*ctx, 0, cfg.count, cfg.depth);
    auto rep = run_suite(*ctx, corpus, cfg);

    INFO(gating_failures(rep));
    REQUIRE(!rep.strong.yes());
    CHECK(rep.fails == 0);
    CHECK(rep.inconclusive == 0);
    REQUIRE(rep.exit_code() == 0);

    // checks that assume strong idempotency skip and say why
    auto* ti = find_check(rep, "torsion-intersection");
    REQUIRE(ti != nullptr);
    REQUIRE(ti->status == CheckResult::Status::Skipped);
    REQUIRE(ti->skip_reason.find("not strong") != std::string::npos);
    // unconditional checks still run
    auto* ho = find_check(rep, "hom-orthogonality");
    REQUIRE(ho != nullptr);
    REQUIRE(ho->status == CheckResult::Status::Pass);
}

TEST_CASE("suite on the bounded loop, S = {3,loop}", "[verify]") {
    auto A = f3();
    auto ctx = build_context(A, {2, 3});
    SuiteConfig cfg;
    cfg.count = 10;
    cfg.depth = 3;
    cfg.cap = 30;
    cfg.max_steps = 80;
    cfg.pair_budget = 150;
    auto corpus = gen_corpus(*ctx, 0, cfg.count, cfg.depth);
    auto rep = run_suite(*ctx, corpus, cfg);

    INFO(gating_failures(rep));
    REQUIRE(rep.strong.yes());
    REQUIRE(rep.strong.route == StrongIdemResult::Route::ProjectiveIdeal);
    CHECK(rep.fails == 0);

    json j = to_json(rep);
    REQUIRE(j["schema"] == "itlab/1");
    REQUIRE(j["checks"].is_array());
    REQUIRE(j["summary"].contains("fails"));
}

TEST_CASE("fuzz driver is deterministic", "[verify][fuzz]") {
    auto a = run_fuzz(7, 4);
    auto b = run_fuzz(7, 4);
    REQUIRE(a.report.dump() == b.report.dump());
    REQUIRE(a.report["iterations"] == 4);
    REQUIRE(a.exit_code != 1);  // honest inconclusives allowed, violations not
    // every iteration leaves a record
    REQUIRE(a.report["runs"].size() == 4);
}
