#include "doctest.h"

#include "osdrazin/campaign.hpp"
#include "osdrazin/instances.hpp"
#include "osdrazin/transfer.hpp"

using namespace osdrazin;

namespace {

CampaignConfig config(std::string id, std::size_t trials, std::size_t dim)
{
    CampaignConfig c;
    c.theorem = std::move(id);
    c.trials = trials;
    c.dim = dim;
    return c;
}

} // namespace

TEST_CASE("campaign examples")
{
    auto c = config("thm-3.5-left", 1, 1);
    c.family = "classical";
    const auto r = run_campaign(c);
    CHECK(r.exit_status() == exit_pass);
    CHECK(r.reports.size() == 1);

    auto audit = config("thm-2.7-audit", 1, 2);
    audit.scalar = "mod:2";
    const auto a = run_campaign(audit);
    CHECK(a.exit_status() == exit_pass);
    REQUIRE(a.reports.size() == 1);
    CHECK(a.reports[0].indices.at("elements") == 16);

    CHECK_THROWS_AS(run_campaign(config("thm-9.9", 1, 2)), UsageError);
}

TEST_CASE("every registered id runs and passes")
{
    for (const auto& t : registered_theorems()) {
        auto c = config(t.id, 12, 3);
        if (t.id == "thm-2.7-audit") {
            c.scalar = "mod:3";
            c.dim = 1;
        }
        const auto r = run_campaign(c);
        INFO(t.id);
        CHECK(r.exit_status() == exit_pass);
        CHECK(r.aggregate["counterexamples"].empty());
    }
}

TEST_CASE("configuration errors")
{
    auto c = config("thm-3.5-left", 0, 2);
    CHECK_THROWS_AS(run_campaign(c), UsageError);
    c.trials = 1;
    c.family = "idempotent";
    CHECK_THROWS_AS(run_campaign(c), UsageError);
    c.family.clear();
    c.scalar = "mod:6"; // not a field
    CHECK_THROWS_AS(run_campaign(c), UsageError);
    c.scalar = "real";
    CHECK_THROWS_AS(run_campaign(c), UsageError);
    auto s = config("cor-3.11", 1, 2);
    s.scalar = "mod:5";
    CHECK_THROWS_AS(run_campaign(s), UsageError);
    auto e = config("thm-4.2-left", 1, 2);
    e.family = "exhaustive-ring";
    CHECK_THROWS_AS(run_campaign(e), UsageError);
}

TEST_CASE("aggregates do not depend on the worker count")
{
    auto c = config("thm-4.5-right", 60, 3);
    c.seed = 99;
    c.workers = 1;
    const auto one = run_campaign(c);
    c.workers = 4;
    const auto four = run_campaign(c);
    CHECK(one.aggregate.dump() == four.aggregate.dump());
    REQUIRE(one.reports.size() == four.reports.size());
    for (std::size_t i = 0; i < one.reports.size(); ++i)
        CHECK(one.reports[i].to_json().dump() == four.reports[i].to_json().dump());
    c.seed = 100;
    CHECK(run_campaign(c).aggregate.dump() != one.aggregate.dump());
}

TEST_CASE("exhaustive family covers every pair")
{
    auto c = config("thm-4.2-left", 1, 2);
    c.family = "exhaustive-ring";
    c.scalar = "mod:2";
    const auto r = run_campaign(c);
    CHECK(r.exit_status() == exit_pass);
    CHECK(r.reports.size() == 28);
}

TEST_CASE("failed reports keep their inputs")
{
    VerificationReport ok("t#0"), bad("t#1");
    ok.check("x", true);
    bad.check("x", false);
    bad.attach("a", RationalMatrix::identity(2));
    const auto agg = aggregate_reports({ok, bad}, {{"theorem", "t"}});
    CHECK(agg["failed"] == 1);
    REQUIRE(agg["counterexamples"].size() == 1);
    CHECK(agg["counterexamples"][0]["matrices"].contains("a"));
    CHECK(aggregate_text(agg).find("FAIL") != std::string::npos);
}

TEST_CASE("instance generation")
{
    InstanceParams p;
    p.family = "classical-quad";
    p.dim = 2;
    p.seed = 7;
    const auto q = gen_instance(p);
    CHECK(check_instance(nlohmann::json::parse(q.dump())).passed());
    const auto a = matrix_from_json_as<Rational>(q["matrices"]["a"]);
    const auto c = matrix_from_json_as<Rational>(q["matrices"]["c"]);
    CHECK(JacobsonQuad<Rational>::holds(a, c, c, a));

    p.family = "planted-jordan";
    p.jordan = "1:2";
    const auto j = gen_instance(p);
    CHECK(check_instance(j).indices.at("point-index-at-1") == 2);

    p.family = "idempotent-pair";
    p.rank = 0;
    p.dim = 3;
    const auto z = gen_instance(p);
    CHECK(matrix_from_json_as<Rational>(z["matrices"]["a"]).is_zero());
    CHECK(matrix_from_json_as<Rational>(z["matrices"]["b"]).is_zero());

    p.family = "exhaustive-ring";
    p.scalar = "mod:2";
    p.dim = 2;
    CHECK(gen_instance(p)["count"] == 28);

    for (const char* fam : {"solved-quad", "case-II-quad", "planted-pair"}) {
        p.family = fam;
        p.scalar = "gaussian";
        p.index = 2;
        CHECK(check_instance(gen_instance(p)).passed());
    }

    // a tampered instance no longer checks out
    auto bad = q;
    bad["matrices"]["b"]["entries"][0][0] = "17";
    CHECK_FALSE(check_instance(bad).passed());

    p.family = "unknown";
    CHECK_THROWS_AS(gen_instance(p), UsageError);
    CHECK_THROWS_AS(parse_jordan_spec("1:0"), ParseError);
    CHECK_THROWS_AS(parse_jordan_spec("1"), ParseError);
    CHECK(parse_jordan_spec("1+i:2,0:1").dim() == 3);
}
