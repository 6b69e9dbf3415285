#include <doctest.h>

#include "ncqm/error.hpp"
#include "ncqm/lab.hpp"

using namespace ncqm;
using namespace ncqm::lab;

namespace {

RunConfig small_config() {
    RunConfig cfg;
    cfg.sizes.group_trials = 50;
    cfg.sizes.orbit_trajectories = 5;
    cfg.sizes.trajectory_steps = 3;
    cfg.sizes.homomorphism_trials = 10;
    cfg.sizes.gauge_members = 2;
    cfg.sizes.torus_packets = 2;
    cfg.sizes.weyl_trials = 5;
    cfg.sizes.generator_points = 3;
    return cfg;
}

}  // namespace

TEST_CASE("config parsing and overrides") {
    const json j = json::parse(R"({"constants": {"alpha": 2.0}, "seed": 7,
                                   "tolerances": {"weyl_phase": 1e-8}, "sizes": {"weyl_trials": 3},
                                   "gauge": {"l": 1.5}})");
    const auto cfg = config_from_json(j);
    CHECK(cfg.constants.alpha == 2.0);
    CHECK(cfg.constants.beta == 0.5);
    CHECK(cfg.constants_explicit);
    CHECK(cfg.seed == 7u);
    CHECK(cfg.tol.weyl_phase == 1e-8);
    CHECK(cfg.tol.homomorphism == 1e-9);
    CHECK(cfg.sizes.weyl_trials == 3);
    CHECK(cfg.gauge_l == 1.5);
    CHECK_FALSE(cfg.gauge_m.has_value());

    const auto round = config_from_json(to_json(cfg));
    CHECK(to_json(round) == to_json(cfg));

    CHECK_THROWS_AS(config_from_json(json::parse(R"({"tolerances": {"unitarity": 0}})")), ParseError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"seed": "x"})")), ParseError);
    CHECK_THROWS_AS(config_from_json(json::parse("[1, 2]")), ParseError);
    CHECK_THROWS_AS(config_from_json(json::parse(R"({"sizes": {"group_trials": -1}})")), ParseError);
}

TEST_CASE("default torus constants") {
    RunConfig cfg;
    CHECK(cfg.torus_constants() == ExtensionConstants::unit());
    cfg.constants_explicit = true;
    CHECK(cfg.torus_constants() == ExtensionConstants::general());
}

TEST_CASE("dual vector parsing") {
    const auto f = parse_dual_vector("0,0,0,0,1,1,2");
    CHECK(f.x[6] == 2.0);
    CHECK(parse_dual_vector("[5, 6, 7, 8, 0, 0, 0]").x[0] == 5.0);
    CHECK(parse_dual_vector("1 2 3 4 5 6 7").x[3] == 4.0);
    CHECK_THROWS_AS(parse_dual_vector("1,2,3,4,5,6"), ParseError);
    CHECK_THROWS_AS(parse_dual_vector("1,2,3,4,5,6,x"), ParseError);
    CHECK_THROWS_AS(parse_dual_vector("1,2,3,4,5,6,inf"), ParseError);
}

TEST_CASE("suite names") {
    for (Suite s : {Suite::group, Suite::reps, Suite::gauge, Suite::torus, Suite::all})
        CHECK(suite_from_string(to_string(s)) == s);
    CHECK_THROWS_AS(suite_from_string("everything"), ParseError);
}

TEST_CASE("sub seeds are distinct and stable") {
    CHECK(sub_seed(42, 1) == sub_seed(42, 1));
    CHECK(sub_seed(42, 1) != sub_seed(42, 2));
    CHECK(sub_seed(42, 1) != sub_seed(43, 1));
}

TEST_CASE("classify command output") {
    RunConfig cfg;
    cfg.constants = ExtensionConstants::unit();
    const auto r = run_classify(parse_dual_vector("0,0,0,0,1,1,2"), cfg);
    CHECK(r.exit_code == kExitPass);
    CHECK(r.report["schema"] == kSchema);
    CHECK(r.report["class"] == "Generic4D");
    CHECK(r.report["dim"] == 4);

    const auto p = run_classify(parse_dual_vector("5,6,7,8,0,0,0"), cfg);
    CHECK(p.report["class"] == "Point0D");
    CHECK(p.report["dim"] == 0);
    CHECK(p.report["labels"] == json::array({5.0, 6.0, 7.0, 8.0}));
}

TEST_CASE("verify runs every suite and is deterministic") {
    const auto cfg = small_config();
    const auto a = run_verify(Suite::all, cfg);
    const auto b = run_verify(Suite::all, cfg);
    CHECK(a.exit_code == kExitPass);
    CHECK(a.report.dump() == b.report.dump());
    REQUIRE(a.report["suites"].size() == 4);
    CHECK(a.report["suites"][0]["suite"] == "group");
    CHECK(a.report["suites"][3]["suite"] == "torus");
    for (const auto& s : a.report["suites"])
        for (const auto& c : s["checks"]) {
            CHECK(c.contains("sub_seed"));
            CHECK(c["count"].get<int>() > 0);
        }

    auto other = cfg;
    other.seed = 43;
    CHECK(run_verify(Suite::all, other).report.dump() != a.report.dump());
}

TEST_CASE("verify surfaces failures and preconditions") {
    auto cfg = small_config();
    cfg.constants_explicit = true;  // general constants: torus needs alpha^2 = gamma beta
    const auto torus = run_verify(Suite::torus, cfg);
    CHECK(torus.exit_code == kExitPrecondition);
    CHECK(torus.report["suites"][0]["error"]["kind"] == "inconsistent-constants");

    auto unit = small_config();
    unit.constants = ExtensionConstants::unit();
    unit.gauge_l = 1.0;
    CHECK(run_verify(Suite::gauge, unit).exit_code == kExitPrecondition);
    unit.gauge_l = 2.0;
    CHECK(run_verify(Suite::gauge, unit).exit_code == kExitPass);

    // a tolerance below rounding makes the associativity check fail with a replay record
    auto tight = small_config();
    tight.tol.associativity = 1e-300;
    const auto failed = run_verify(Suite::group, tight);
    CHECK(failed.exit_code == kExitPropertyFailure);
    const auto& check = failed.report["suites"][0]["checks"][0];
    CHECK(check["name"] == "group.associativity");
    CHECK_FALSE(check["pass"].get<bool>());
    CHECK(check["failure"].contains("g"));
}

TEST_CASE("report summarises a verify report") {
    const auto verified = run_verify(Suite::group, small_config());
    const auto r = run_report(verified.report);
    CHECK(r.exit_code == kExitPass);
    CHECK(r.report["suites"][0]["failed_checks"].empty());
    CHECK_THROWS_AS(run_report(json::object()), ParseError);
}

TEST_CASE("gauge scan table") {
    RunConfig cfg;
    const auto r = run_gauge_scan({-1.0, 0.0, 0.5, 1.0}, 2.0, cfg);
    CHECK(r.exit_code == kExitPass);
    REQUIRE(r.report["rows"].size() == 4);
    for (const auto& row : r.report["rows"]) {
        CHECK(row["curl"].get<double>() == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(row["commutators"]["P1P2"][1].get<double>() == doctest::Approx(-0.5).epsilon(1e-12));
    }
}

TEST_CASE("torus command reports") {
    RunConfig cfg;
    cfg.sizes.torus_packets = 2;
    const auto all = run_torus(std::nullopt, cfg);
    CHECK(all.exit_code == kExitPass);
    CHECK(all.report["results"].size() == 9);
    const auto one = run_torus(RepCase{rep::WeylHeisenberg4D{0.3}}, cfg);
    const auto& res = one.report["results"][0];
    CHECK(res["case"] == "WeylHeisenberg4D");
    CHECK(res["theta"][0][2] == 0.3);
    CHECK(res["measured_phases"].size() == 6);
    CHECK(res["pass"] == true);

    cfg.constants_explicit = true;
    CHECK_THROWS_AS(run_torus(std::nullopt, cfg), Error);
}

TEST_CASE("presets are valid for their constants") {
    for (const auto& p : rep_presets()) CHECK_NOTHROW(RepSpec(ExtensionConstants::general(), p));
    for (const auto& p : torus_presets()) CHECK_NOTHROW(RepSpec(ExtensionConstants::unit(), p));
    CHECK(rep_presets().size() == 9);
    CHECK(torus_presets().size() == 9);
}
