#include <doctest.h>

#include "kalliance/audit.hpp"
#include "kalliance/error.hpp"
#include "kalliance/phi.hpp"
#include "kalliance/serialize.hpp"

using namespace kalliance;

TEST_CASE("theorem ids round trip")
{
    CHECK(all_theorems().size() == 19);
    for (TheoremId id : all_theorems())
        CHECK(parse_theorem_id(to_string(id)) == id);
    CHECK(to_string(TheoremId::cor_CoroTh1def_ii) == "cor_CoroTh1def_ii");
    CHECK_THROWS_AS(parse_theorem_id("th2"), InvalidInput);
}

TEST_CASE("config validation")
{
    AuditConfig config;
    CHECK_NOTHROW(config.validate());
    config.max_factor_order = 5;
    CHECK_THROWS_AS(config.validate(), InvalidInput);
    config = {};
    config.max_product_order = 30;
    CHECK_THROWS_AS(config.validate(), InvalidInput);
    config = {};
    config.trials_per_theorem = -1;
    CHECK_THROWS_AS(audit(TheoremId::remark1, config), InvalidInput);
}

TEST_CASE("zero trials give empty inconclusive reports")
{
    AuditConfig config;
    config.trials_per_theorem = 0;
    std::vector<AuditReport> reports = audit_all(config);
    REQUIRE(reports.size() == 19);
    for (const AuditReport& r : reports) {
        CHECK(r.trials == 0);
        CHECK(r.failures.empty());
        CHECK(r.inconclusive());
        CHECK_FALSE(r.passed());
    }
}

TEST_CASE("audits pass and count only hypothesis-satisfying trials")
{
    AuditConfig config;
    config.trials_per_theorem = 8;
    config.seed = 7;
    for (TheoremId id : all_theorems()) {
        CAPTURE(to_string(id));
        AuditReport r = audit(id, config);
        CHECK(r.trials == 8);
        CHECK(r.passes + static_cast<int>(r.failures.size()) == r.trials);
        CHECK(r.failures.empty());
        CHECK(r.checks >= r.trials);
        CHECK(r.passed());
    }
}

TEST_CASE("remark1 with defaults")
{
    AuditReport r = audit(TheoremId::remark1, AuditConfig{});
    CHECK(r.trials == 50);
    CHECK(r.failures.empty());
}

TEST_CASE("audits are deterministic")
{
    AuditConfig config;
    config.trials_per_theorem = 5;
    config.seed = 99;
    for (TheoremId id : {TheoremId::th_union, TheoremId::prop_remarktree, TheoremId::th1p_ii}) {
        CHECK(to_record_lines(audit(id, config)) == to_record_lines(audit(id, config)));
        CHECK(to_json(audit(id, config)).dump() == to_json(audit(id, config)).dump());
    }
    config.seed = 100;
    AuditReport other = audit(TheoremId::th1_ii, config);
    config.seed = 99;
    CHECK(audit(TheoremId::th1_ii, config).checks != other.checks);
}

TEST_CASE("report serialisation echoes the config")
{
    AuditConfig config;
    config.trials_per_theorem = 3;
    config.seed = 5;
    AuditReport r = audit(TheoremId::vizing_alpha, config);
    const std::string lines = to_record_lines(r);
    CHECK(lines.rfind("audit theorem=vizing_alpha status=passed trials=3 passes=3 failures=0", 0) == 0);
    CHECK(lines.find("seed=5") != std::string::npos);
    CHECK(lines.find("max_factor_order=4") != std::string::npos);

    nlohmann::json doc = to_json(r);
    CHECK(doc["theorem"] == "vizing_alpha");
    CHECK(doc["config"]["seed"] == 5);
    CHECK(doc["config"]["max_product_order"] == 16);
    CHECK(doc["trials"] == 3);
    CHECK(doc["status"] == "passed");
}

TEST_CASE("failures serialise with their instance")
{
    AuditReport r;
    r.theorem = TheoremId::th1_i;
    r.trials = 1;
    AuditFailure f;
    f.claim = "demo";
    f.g1 = Graph(2);
    f.g2 = Graph(1);
    f.sets.emplace_back("S", VertexSet::of(2, {1}));
    f.ks.emplace_back("k", 3);
    f.observed = 0;
    f.expected = 1;
    r.failures.push_back(f);
    CHECK(r.passes + static_cast<int>(r.failures.size()) == r.trials);
    CHECK_FALSE(r.passed());

    const std::string lines = to_record_lines(r);
    CHECK(lines.find("status=failed") != std::string::npos);
    CHECK(lines.find("failure theorem=th1_i g1=2: g2=1: set.S=1 k.k=3 observed=0 relation=>= expected=1")
          != std::string::npos);
    nlohmann::json doc = to_json(r);
    CHECK(doc["failures"][0]["sets"]["S"] == nlohmann::json::array({1}));
    CHECK(doc["failures"][0]["k"]["k"] == 3);
}

TEST_CASE("strict gap search")
{
    auto found = search_strict_gap(1, 9);
    REQUIRE(found.has_value());
    CHECK(found->graph.order() <= 9);
    CHECK(found->phi_powerful > std::max(found->phi_defensive, found->phi_offensive));
    CHECK(found->phi_powerful == phi_value(found->graph, 2, AllianceKind::powerful));
    CHECK_FALSE(search_strict_gap(1, 4).has_value());
}
