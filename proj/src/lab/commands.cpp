#include <cmath>
#include <future>
#include <utility>
#include <vector>

#include "check.hpp"
#include "ncqm/algebra.hpp"
#include "ncqm/error.hpp"
#include "ncqm/gauge.hpp"
#include "ncqm/lab.hpp"
#include "ncqm/torus.hpp"
#include "suites.hpp"

namespace ncqm::lab {

namespace {

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json error_json(const Error& e) {
    return {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}, {"precondition", e.is_precondition()}};
}

json run_suite(Suite s, const RunConfig& cfg) {
    const std::string name(to_string(s));
    try {
        switch (s) {
            case Suite::group: return detail::suite_group(cfg);
            case Suite::reps: return detail::suite_reps(cfg);
            case Suite::gauge: return detail::suite_gauge(cfg);
            case Suite::torus: return detail::suite_torus(cfg);
            case Suite::all: break;
        }
    } catch (const Error& e) {
        return {{"suite", name}, {"pass", false}, {"checks", json::array()}, {"error", error_json(e)}};
    }
    throw ParseError("run_suite: 'all' is not a single suite");
}

int exit_code_for(const json& suites) {
    bool precondition = false, failure = false;
    for (const auto& s : suites) {
        if (s.contains("error") && s["error"].value("precondition", false)) precondition = true;
        if (!s.value("pass", false)) failure = true;
    }
    return precondition ? kExitPrecondition : failure ? kExitPropertyFailure : kExitPass;
}

json header(const char* command, const RunConfig& cfg) {
    return {{"schema", kSchema}, {"command", command}, {"config", to_json(cfg)}};
}

json theta_json(const ThetaMatrix& t) {
    json rows = json::array();
    for (int j = 1; j <= 4; ++j) {
        json row = json::array();
        for (int k = 1; k <= 4; ++k) row.push_back(t(j, k));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

CommandResult run_classify(const DualVector& f, const RunConfig& cfg) {
    cfg.constants.validate();
    const OrbitClass c = classify_orbit(f, cfg.constants);
    json r{{"schema", kSchema}, {"command", "classify"}};
    r["class"] = std::string(to_string(tag_of(c)));
    r["dim"] = orbit_dimension(c);
    const json params = describe(c);
    if (params.contains("labels"))
        r["labels"] = params["labels"];
    else
        r["parameters"] = params;
    return {r, kExitPass};
}

CommandResult run_verify(Suite suite, const RunConfig& cfg) {
    cfg.validate();
    std::vector<Suite> order;
    if (suite == Suite::all)
        order = {Suite::group, Suite::reps, Suite::gauge, Suite::torus};
    else
        order = {suite};

    std::vector<std::future<json>> running;
    running.reserve(order.size());
    for (Suite s : order) running.push_back(std::async(std::launch::async, run_suite, s, std::cref(cfg)));

    json suites = json::array();
    for (auto& fut : running) suites.push_back(fut.get());

    json r = header("verify", cfg);
    r["suite"] = std::string(to_string(suite));
    r["suites"] = suites;
    const int code = exit_code_for(suites);
    r["pass"] = code == kExitPass;
    r["exit_code"] = code;
    return {r, code};
}

CommandResult run_gauge_scan(const std::vector<double>& m_values, double B, const RunConfig& cfg) {
    const auto& k = cfg.constants;
    k.validate();
    if (m_values.empty()) throw ParseError("gauge-scan needs at least one m value");
    const double l = cfg.gauge_l.value_or(0.6);
    json rows = json::array();
    bool pass = true;
    const double a2 = k.alpha * k.alpha;
    for (double m : m_values) {
        const GaugeRep rep(k, l, m);
        const auto gs = build_generators(rep);
        const double curl = formal_curl(vector_potential(m, B, gs));
        json row{{"m", m}, {"curl", curl}, {"curl_error", std::abs(curl - B)}};
        row["commutators"] = {
            {"Q1P1", complex_json(commutator(gs.Q1, gs.P1).const_term)},
            {"Q2P2", complex_json(commutator(gs.Q2, gs.P2).const_term)},
            {"Q1Q2", complex_json(commutator(gs.Q1, gs.Q2).const_term)},
            {"P1P2", complex_json(commutator(gs.P1, gs.P2).const_term)},
        };
        const double field_dev = std::abs(commutator(gs.P1, gs.P2).const_term - cplx{0.0, -k.gamma / a2});
        const bool ok = std::abs(curl - B) <= cfg.tol.commutator * std::max(1.0, std::abs(B)) &&
                        field_dev <= cfg.tol.commutator;
        row["pass"] = ok;
        pass = pass && ok;
        rows.push_back(row);
    }
    json r = header("gauge-scan", cfg);
    r["l"] = l;
    r["B"] = B;
    r["rows"] = rows;
    r["pass"] = pass;
    const int code = pass ? kExitPass : kExitPropertyFailure;
    r["exit_code"] = code;
    return {r, code};
}

CommandResult run_torus(const std::optional<RepCase>& params, const RunConfig& cfg) {
    const auto k = cfg.torus_constants();
    (void)standard_parameters(k);
    const std::vector<RepCase> cases = params ? std::vector<RepCase>{*params} : torus_presets();

    std::mt19937_64 rng(sub_seed(cfg.seed, 900));
    json results = json::array();
    bool pass = true;
    for (const auto& p : cases) {
        const std::size_t d = RepSpec(k, p).carrier_dim();
        std::vector<GaussianPacket> packets;
        for (int n = 0; n < cfg.sizes.torus_packets; ++n)
            packets.push_back(detail::random_packet(rng, d == 0 ? 2 : d));
        const auto rep = verify_torus(p, k, packets, cfg.tol.weyl_phase);
        json measured = json::object();
        for (const auto& [key, z] : rep.measured_phases) measured[key] = complex_json(z);
        results.push_back({{"case", std::string(to_string(rep.tag))},
                           {"parameters", describe(p)},
                           {"theta", theta_json(rep.theta)},
                           {"measured_phases", measured},
                           {"max_deviation", rep.max_deviation},
                           {"pass", rep.pass}});
        pass = pass && rep.pass;
    }
    json r = header("torus", cfg);
    r["constants"] = {{"alpha", k.alpha}, {"beta", k.beta}, {"gamma", k.gamma}};
    r["results"] = results;
    r["pass"] = pass;
    const int code = pass ? kExitPass : kExitPropertyFailure;
    r["exit_code"] = code;
    return {r, code};
}

CommandResult run_report(const json& saved) {
    if (!saved.is_object() || saved.value("schema", "") != kSchema)
        throw ParseError(std::string("report input is not a ") + kSchema + " document");
    if (!saved.contains("suites") || !saved["suites"].is_array())
        throw ParseError("report input has no 'suites' array (expected a verify report)");

    json summary = json::array();
    bool pass = true;
    for (const auto& s : saved["suites"]) {
        json failed = json::array();
        double worst = 0.0;
        std::size_t count = 0;
        if (s.contains("checks")) {
            for (const auto& c : s["checks"]) {
                if (!c.value("pass", false)) failed.push_back(c.value("name", "?"));
                const double tol = c.value("tolerance", 0.0);
                const double res = c.value("max_residual", 0.0);
                if (tol > 0.0) worst = std::max(worst, res / tol);
                count += c.value("count", std::size_t{0});
            }
        }
        json row{{"suite", s.value("suite", "?")},
                 {"pass", s.value("pass", false)},
                 {"checks", s.contains("checks") ? s["checks"].size() : 0},
                 {"samples", count},
                 {"worst_residual_over_tolerance", worst},
                 {"failed_checks", failed}};
        if (s.contains("error")) row["error"] = s["error"];
        pass = pass && row["pass"].get<bool>();
        summary.push_back(row);
    }
    json r{{"schema", kSchema}, {"command", "report"}, {"source_command", saved.value("command", "?")}};
    r["suites"] = summary;
    r["pass"] = pass;
    const int code = pass ? kExitPass : kExitPropertyFailure;
    r["exit_code"] = code;
    return {r, code};
}

}  // namespace ncqm::lab
