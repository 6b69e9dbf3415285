#include <cmath>
#include <sstream>
#include <string>

#include "ncqm/detail/overloaded.hpp"
#include "ncqm/lab.hpp"

namespace ncqm::lab {

using detail::overloaded;

namespace {

template <class T>
void read(const json& j, const char* key, T& out) {
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("config field '") + key + "': " + e.what());
    }
}

}  // namespace

void RunConfig::validate() const {
    const double tols[] = {tol.associativity, tol.homomorphism, tol.unitarity,
                           tol.commutator,    tol.weyl_phase,   tol.finite_diff};
    for (double t : tols)
        if (!(t > 0.0) || !std::isfinite(t)) throw ParseError("tolerances must be finite and positive");
    const int sizes_[] = {sizes.group_trials,     sizes.orbit_trajectories, sizes.trajectory_steps,
                          sizes.homomorphism_trials, sizes.gauge_members,   sizes.torus_packets,
                          sizes.weyl_trials,      sizes.generator_points};
    for (int n : sizes_)
        if (n <= 0) throw ParseError("sweep sizes must be positive");
}

RunConfig config_from_json(const json& j, RunConfig base) {
    if (!j.is_object()) throw ParseError("config must be a JSON object");
    RunConfig cfg = std::move(base);
    if (j.contains("constants")) {
        const auto& c = j.at("constants");
        if (!c.is_object()) throw ParseError("config field 'constants' must be an object");
        read(c, "alpha", cfg.constants.alpha);
        read(c, "beta", cfg.constants.beta);
        read(c, "gamma", cfg.constants.gamma);
        cfg.constants_explicit = true;
    }
    read(j, "seed", cfg.seed);
    if (j.contains("tolerances")) {
        const auto& t = j.at("tolerances");
        read(t, "associativity", cfg.tol.associativity);
        read(t, "homomorphism", cfg.tol.homomorphism);
        read(t, "unitarity", cfg.tol.unitarity);
        read(t, "commutator", cfg.tol.commutator);
        read(t, "weyl_phase", cfg.tol.weyl_phase);
        read(t, "finite_diff", cfg.tol.finite_diff);
    }
    if (j.contains("sizes")) {
        const auto& s = j.at("sizes");
        read(s, "group_trials", cfg.sizes.group_trials);
        read(s, "orbit_trajectories", cfg.sizes.orbit_trajectories);
        read(s, "trajectory_steps", cfg.sizes.trajectory_steps);
        read(s, "homomorphism_trials", cfg.sizes.homomorphism_trials);
        read(s, "gauge_members", cfg.sizes.gauge_members);
        read(s, "torus_packets", cfg.sizes.torus_packets);
        read(s, "weyl_trials", cfg.sizes.weyl_trials);
        read(s, "generator_points", cfg.sizes.generator_points);
    }
    if (j.contains("gauge")) {
        const auto& g = j.at("gauge");
        double v = 0.0;
        if (g.contains("l")) { read(g, "l", v); cfg.gauge_l = v; }
        if (g.contains("m")) { read(g, "m", v); cfg.gauge_m = v; }
    }
    read(j, "out", cfg.out);
    cfg.validate();
    return cfg;
}

json to_json(const RunConfig& cfg) {
    json j;
    j["constants"] = {{"alpha", cfg.constants.alpha}, {"beta", cfg.constants.beta}, {"gamma", cfg.constants.gamma}};
    j["constants_explicit"] = cfg.constants_explicit;
    j["seed"] = cfg.seed;
    j["tolerances"] = {{"associativity", cfg.tol.associativity}, {"homomorphism", cfg.tol.homomorphism},
                       {"unitarity", cfg.tol.unitarity},         {"commutator", cfg.tol.commutator},
                       {"weyl_phase", cfg.tol.weyl_phase},       {"finite_diff", cfg.tol.finite_diff}};
    j["sizes"] = {{"group_trials", cfg.sizes.group_trials},
                  {"orbit_trajectories", cfg.sizes.orbit_trajectories},
                  {"trajectory_steps", cfg.sizes.trajectory_steps},
                  {"homomorphism_trials", cfg.sizes.homomorphism_trials},
                  {"gauge_members", cfg.sizes.gauge_members},
                  {"torus_packets", cfg.sizes.torus_packets},
                  {"weyl_trials", cfg.sizes.weyl_trials},
                  {"generator_points", cfg.sizes.generator_points}};
    if (cfg.gauge_l) j["gauge"]["l"] = *cfg.gauge_l;
    if (cfg.gauge_m) j["gauge"]["m"] = *cfg.gauge_m;
    return j;
}

Suite suite_from_string(std::string_view name) {
    if (name == "group") return Suite::group;
    if (name == "reps") return Suite::reps;
    if (name == "gauge") return Suite::gauge;
    if (name == "torus") return Suite::torus;
    if (name == "all") return Suite::all;
    throw ParseError("unknown suite '" + std::string(name) + "' (group|reps|gauge|torus|all)");
}

std::string_view to_string(Suite s) {
    switch (s) {
        case Suite::group: return "group";
        case Suite::reps: return "reps";
        case Suite::gauge: return "gauge";
        case Suite::torus: return "torus";
        case Suite::all: return "all";
    }
    return "?";
}

DualVector parse_dual_vector(std::string_view text) {
    std::string cleaned(text);
    for (char& ch : cleaned)
        if (ch == ',' || ch == '[' || ch == ']') ch = ' ';
    std::istringstream in(cleaned);
    std::vector<double> values;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(token, &used);
        } catch (const std::exception&) {
            throw ParseError("dual vector: '" + token + "' is not a number");
        }
        if (used != token.size() || !std::isfinite(v))
            throw ParseError("dual vector: '" + token + "' is not a finite number");
        values.push_back(v);
    }
    if (values.size() != 7)
        throw ParseError("dual vector needs 7 coordinates, got " + std::to_string(values.size()));
    DualVector f;
    for (std::size_t i = 0; i < 7; ++i) f.x[i] = values[i];
    return f;
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finaliser over (seed, stream)
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

json describe(const RepCase& params) {
    json j = std::visit(
        overloaded{
            [](const rep::Generic4D& p) { return json{{"rho", p.rho}, {"sigma", p.sigma}, {"tau", p.tau}}; },
            [](const rep::Cone2D& p) {
                return json{{"rho", p.rho}, {"zeta", p.zeta}, {"kappa", p.kappa}, {"delta", p.delta}};
            },
            [](const rep::TauZero4D& p) { return json{{"rho", p.rho}, {"sigma", p.sigma}}; },
            [](const rep::SigmaZero4D& p) { return json{{"rho", p.rho}, {"tau", p.tau}}; },
            [](const rep::RhoZero4D& p) { return json{{"sigma", p.sigma}, {"tau", p.tau}}; },
            [](const rep::WeylHeisenberg4D& p) { return json{{"rho", p.rho}}; },
            [](const rep::QPlane2D& p) { return json{{"sigma", p.sigma}, {"c3", p.c3}, {"c4", p.c4}}; },
            [](const rep::PPlane2D& p) { return json{{"tau", p.tau}, {"c1", p.c1}, {"c2", p.c2}}; },
            [](const rep::Point0D& p) { return json{{"c1", p.c1}, {"c2", p.c2}, {"c3", p.c3}, {"c4", p.c4}}; },
        },
        params);
    j["case"] = std::string(to_string(kAllCases[params.index()]));
    return j;
}

json describe(const OrbitClass& c) {
    json j = std::visit(
        overloaded{
            [](const orbit::Generic4D& o) { return json{{"rho", o.rho}, {"sigma", o.sigma}, {"tau", o.tau}}; },
            [](const orbit::Cone2D& o) { return json{{"rho", o.rho}, {"zeta", o.zeta}}; },
            [](const orbit::TauZero4D& o) { return json{{"rho", o.rho}, {"sigma", o.sigma}}; },
            [](const orbit::SigmaZero4D& o) { return json{{"rho", o.rho}, {"tau", o.tau}}; },
            [](const orbit::RhoZero4D& o) { return json{{"sigma", o.sigma}, {"tau", o.tau}}; },
            [](const orbit::WeylHeisenberg4D& o) { return json{{"rho", o.rho}}; },
            [](const orbit::QPlane2D& o) { return json{{"sigma", o.sigma}}; },
            [](const orbit::PPlane2D& o) { return json{{"tau", o.tau}}; },
            [](const orbit::Point0D& o) { return json{{"labels", {o.c1, o.c2, o.c3, o.c4}}}; },
        },
        c);
    return j;
}

}  // namespace ncqm::lab
