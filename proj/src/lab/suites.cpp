#include "suites.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "check.hpp"
#include "ncqm/algebra.hpp"
#include "ncqm/coadjoint.hpp"
#include "ncqm/detail/overloaded.hpp"
#include "ncqm/error.hpp"
#include "ncqm/gauge.hpp"
#include "ncqm/representation.hpp"
#include "ncqm/torus.hpp"

namespace ncqm::lab {

std::vector<RepCase> rep_presets() {
    return {
        rep::Generic4D{1.0, 0.7, 1.3},
        rep::Cone2D{0.8, 1.5, 0.3, -0.4},
        rep::TauZero4D{0.9, 0.6},
        rep::SigmaZero4D{1.1, 0.8},
        rep::RhoZero4D{0.7, 1.2},
        rep::WeylHeisenberg4D{1.2},
        rep::QPlane2D{0.9, 0.5, -0.7},
        rep::PPlane2D{1.1, -0.3, 0.6},
        rep::Point0D{1.0, -0.5, 0.25, 2.0},
    };
}

std::vector<RepCase> torus_presets() {
    return {
        rep::Generic4D{1.0 / 3.0, 0.5, 0.2},
        rep::Cone2D{0.3, 2.0},
        rep::TauZero4D{0.25, 0.4},
        rep::SigmaZero4D{0.25, 0.7},
        rep::RhoZero4D{0.4, 0.7},
        rep::WeylHeisenberg4D{0.3},
        rep::QPlane2D{0.45, 1.0, -0.5},
        rep::PPlane2D{0.35, 0.5, -1.0},
        rep::Point0D{1.0, 0.0, 0.5, -2.0},
    };
}

namespace detail {

namespace {

constexpr cplx I{0.0, 1.0};

std::size_t packet_dim(const AnyRep& r) {
    const std::size_t d = carrier_dim(r);
    return d == 0 ? 2 : d;
}

json finish(const char* name, const std::vector<Check>& checks) {
    json j{{"suite", name}, {"checks", json::array()}};
    bool pass = true;
    for (const auto& c : checks) {
        j["checks"].push_back(c.to_json());
        pass = pass && c.pass();
    }
    j["pass"] = pass;
    return j;
}

json rep_context(const AnyRep& r) {
    return std::visit(ncqm::detail::overloaded{
                          [](const RepSpec& s) { return describe(s.params()); },
                          [](const GaugeRep& g) { return json{{"case", "Gauge"}, {"l", g.l()}, {"m", g.m()}}; }},
                      r);
}

std::string rep_name(const AnyRep& r) { return rep_context(r).at("case").get<std::string>(); }

void homomorphism_check(Check& check, const AnyRep& r, int trials, std::mt19937_64& rng) {
    const auto& k = constants_of(r);
    const std::size_t dim = packet_dim(r);
    for (int t = 0; t < trials; ++t) {
        const auto g = random_element(rng);
        const auto h = random_element(rng);
        const auto f = random_packet(rng, dim);
        const auto lhs = apply_rep(r, g, apply_rep(r, h, f));
        const auto rhs = apply_rep(r, compose(g, h, k), f);
        const double res = packet_residual(lhs, rhs, check.seed() + static_cast<std::uint64_t>(t));
        check.record(res, [&] {
            return json{{"rep", rep_context(r)}, {"g", to_json(g)}, {"h", to_json(h)}, {"f", to_json(f)}, {"trial", t}};
        });
    }
}

void unitarity_check(Check& check, const AnyRep& r, int trials, std::mt19937_64& rng) {
    const std::size_t dim = packet_dim(r);
    for (int t = 0; t < trials; ++t) {
        const auto g = random_element(rng);
        const auto f = random_packet(rng, dim);
        const auto uf = apply_rep(r, g, f);
        const double n0 = norm(f);
        const double by_norm = std::abs(norm(uf) - n0) / n0;
        const double by_pairing = std::abs(std::sqrt(std::abs(inner_product(uf, uf))) - n0) / n0;
        check.record(std::max(by_norm, by_pairing), [&] {
            return json{{"rep", rep_context(r)}, {"g", to_json(g)}, {"f", to_json(f)}, {"trial", t}};
        });
    }
}

}  // namespace

json suite_group(const RunConfig& cfg) {
    const auto k = cfg.constants;
    k.validate();
    std::vector<Check> checks;

    {
        Check c("group.associativity", cfg.tol.associativity, sub_seed(cfg.seed, 100));
        std::mt19937_64 rng(c.seed());
        for (int t = 0; t < cfg.sizes.group_trials; ++t) {
            const auto a = random_element(rng), b = random_element(rng), d = random_element(rng);
            const double res = max_abs_difference(compose(compose(a, b, k), d, k), compose(a, compose(b, d, k), k));
            c.record(res, [&] { return json{{"g", to_json(a)}, {"h", to_json(b)}, {"k", to_json(d)}}; });
        }
        checks.push_back(c);
    }
    {
        // identity and inverse laws, bitwise
        Check c("group.identity_inverse", 0.0, sub_seed(cfg.seed, 101));
        std::mt19937_64 rng(c.seed());
        for (int t = 0; t < cfg.sizes.group_trials; ++t) {
            const auto g = random_element(rng);
            const double res = std::max({max_abs_difference(compose(identity(), g, k), g),
                                         max_abs_difference(compose(g, identity(), k), g),
                                         max_abs_difference(compose(g, inverse(g), k), identity()),
                                         max_abs_difference(compose(inverse(g), g, k), identity()),
                                         max_abs_difference(inverse(inverse(g)), g)});
            c.record(res, [&] { return json{{"g", to_json(g)}}; });
        }
        checks.push_back(c);
    }
    {
        Check c("group.central_and_nilpotent", 0.0, sub_seed(cfg.seed, 102));
        std::mt19937_64 rng(c.seed());
        for (int t = 0; t < cfg.sizes.group_trials; ++t) {
            const auto g = random_element(rng);
            auto z = random_element(rng);
            z.q1 = z.q2 = z.p1 = z.p2 = 0.0;
            const auto gz = compose(g, z, k);
            const auto h = random_element(rng);
            const auto a = compose(g, h, k), b = compose(h, g, k);
            double res = std::abs(gz.q1 - g.q1) + std::abs(gz.q2 - g.q2) + std::abs(gz.p1 - g.p1) +
                         std::abs(gz.p2 - g.p2);
            res += std::abs(a.q1 - b.q1) + std::abs(a.q2 - b.q2) + std::abs(a.p1 - b.p1) + std::abs(a.p2 - b.p2);
            c.record(res, [&] { return json{{"g", to_json(g)}, {"z", to_json(z)}, {"h", to_json(h)}}; });
        }
        checks.push_back(c);
    }
    {
        Check casimir("coadjoint.casimir_invariance", 0.0, sub_seed(cfg.seed, 103));
        Check law("coadjoint.action_law", cfg.tol.associativity, sub_seed(cfg.seed, 104));
        std::mt19937_64 rng(casimir.seed());
        for (int t = 0; t < cfg.sizes.group_trials; ++t) {
            const auto g = random_element(rng), h = random_element(rng);
            DualVector f;
            for (double& x : f.x) x = uniform(rng, -2.0, 2.0);
            const auto gf = coadjoint_act(g, f, k);
            const double drift = (gf.x[4] != f.x[4]) + (gf.x[5] != f.x[5]) + (gf.x[6] != f.x[6]);
            casimir.record(drift, [&] { return json{{"g", to_json(g)}, {"F", f.x}}; });

            const auto lhs = coadjoint_act(compose(g, h, k), f, k);
            const auto rhs = coadjoint_act(g, coadjoint_act(h, f, k), k);
            double res = 0.0;
            for (std::size_t i = 0; i < 7; ++i) res = std::max(res, std::abs(lhs.x[i] - rhs.x[i]));
            law.record(res, [&] { return json{{"g", to_json(g)}, {"h", to_json(h)}, {"F", f.x}}; });
        }
        checks.push_back(casimir);
        checks.push_back(law);
    }
    {
        Check c("coadjoint.orbit_stability", 0.0, sub_seed(cfg.seed, 105));
        std::mt19937_64 rng(c.seed());
        for (int t = 0; t < cfg.sizes.orbit_trajectories; ++t) {
            // Cycle through the nine families by zeroing casimirs.
            DualVector f;
            for (double& x : f.x) x = uniform(rng, -2.0, 2.0);
            const int pattern = t % 8;
            if (pattern & 1) f.x[4] = 0.0;
            if (pattern & 2) f.x[5] = 0.0;
            if (pattern & 4) f.x[6] = 0.0;
            const auto start = classify_orbit(f, k);
            DualVector cur = f;
            for (int s = 0; s < cfg.sizes.trajectory_steps; ++s) {
                cur = coadjoint_act(random_element(rng), cur, k);
                const auto now = classify_orbit(cur, k);
                const bool same = tag_of(now) == tag_of(start) && casimirs(now, k) == casimirs(start, k);
                c.record(same ? 0.0 : 1.0, [&] { return json{{"F", f.x}, {"step", s}}; });
            }
        }
        checks.push_back(c);
    }
    return finish("group", checks);
}

json suite_reps(const RunConfig& cfg) {
    const auto k = cfg.constants;
    k.validate();
    std::vector<AnyRep> reps;
    for (const auto& p : rep_presets()) reps.emplace_back(RepSpec(k, p));
    {
        std::mt19937_64 rng(sub_seed(cfg.seed, 200));
        int added = 0;
        while (added < cfg.sizes.gauge_members) {
            const double l = uniform(rng, 0.2, 1.8), m = uniform(rng, 0.0, 1.0);
            if (std::abs(k.gamma * k.beta * l - k.alpha * k.alpha) < 1e-3) continue;
            reps.emplace_back(GaugeRep(k, l, m));
            ++added;
        }
    }

    std::vector<Check> checks;
    for (std::size_t n = 0; n < reps.size(); ++n) {
        const auto& r = reps[n];
        std::string name = rep_name(r);
        if (std::holds_alternative<GaugeRep>(r)) name += "." + std::to_string(n - rep_presets().size());
        Check hom("reps.homomorphism." + name, cfg.tol.homomorphism, sub_seed(cfg.seed, 300 + n));
        std::mt19937_64 rng(hom.seed());
        homomorphism_check(hom, r, cfg.sizes.homomorphism_trials, rng);
        checks.push_back(hom);

        Check uni("reps.unitarity." + name, cfg.tol.unitarity, sub_seed(cfg.seed, 400 + n));
        std::mt19937_64 rng2(uni.seed());
        unitarity_check(uni, r, cfg.sizes.homomorphism_trials, rng2);
        checks.push_back(uni);

        Check gen("reps.generator." + name, cfg.tol.finite_diff, sub_seed(cfg.seed, 500 + n));
        std::mt19937_64 rng3(gen.seed());
        const auto f = random_packet(rng3, packet_dim(r));
        const auto pts = sample_points(f, 0, 0);
        for (Direction d : kAllDirections) {
            for (int p = 0; p < cfg.sizes.generator_points; ++p) {
                const auto& pt = pts[static_cast<std::size_t>(p) % pts.size()];
                const double res = generator_check(r, d, f, pt, 1e-5);
                gen.record(res, [&] {
                    return json{{"rep", rep_context(r)}, {"direction", to_string(d)}, {"f", to_json(f)}, {"r", pt}};
                });
            }
        }
        checks.push_back(gen);
    }

    {
        Check c("reps.central_character", cfg.tol.homomorphism, sub_seed(cfg.seed, 600));
        std::mt19937_64 rng(c.seed());
        for (const auto& r : reps) {
            std::array<double, 3> cas{1.0, 1.0, 1.0};
            if (const auto* s = std::get_if<RepSpec>(&r)) cas = s->casimirs();
            for (int axis = 0; axis < 3; ++axis) {
                const double t = uniform(rng, -3.0, 3.0);
                GroupElement g;
                (axis == 0 ? g.theta : axis == 1 ? g.phi : g.psi) = t;
                const auto f = random_packet(rng, packet_dim(r));
                auto expected = f;
                expected.amplitude *= std::polar(1.0, cas[static_cast<std::size_t>(axis)] * t);
                c.record(packet_residual(apply_rep(r, g, f), expected, c.seed()),
                         [&] { return json{{"rep", rep_context(r)}, {"axis", axis}, {"t", t}}; });
            }
        }
        checks.push_back(c);
    }
    {
        Check c("reps.gauge_adjoint", cfg.tol.unitarity, sub_seed(cfg.seed, 601));
        std::mt19937_64 rng(c.seed());
        for (const auto& r : reps) {
            const auto* g = std::get_if<GaugeRep>(&r);
            if (!g) continue;
            for (int t = 0; t < cfg.sizes.homomorphism_trials; ++t) {
                const auto x = random_element(rng);
                const auto f = random_packet(rng, 2);
                const auto a = apply_action(adjoint_action_of(*g, x), apply_action(action_of(*g, x), f));
                const auto b = apply_action(action_of(*g, x), apply_action(adjoint_action_of(*g, x), f));
                const double res = std::max(packet_residual(a, f, c.seed()), packet_residual(b, f, c.seed()));
                c.record(res, [&] { return json{{"rep", rep_context(r)}, {"g", to_json(x)}, {"f", to_json(f)}}; });
            }
        }
        checks.push_back(c);
    }
    {
        Check c("algebra.generic_nccr", cfg.tol.commutator, sub_seed(cfg.seed, 602));
        const RepSpec spec(k, rep_presets().front());
        const auto cas = spec.casimirs();
        const auto pp = physical_params(cas[0], cas[1], cas[2], k);
        const auto gs = build_generators(spec);
        auto dev = [](const AffineDiffOp& o, cplx expected) {
            return o.is_scalar() ? std::abs(o.const_term - expected) : 1.0;
        };
        const double res = std::max({dev(commutator(gs.Q1, gs.P1), I * pp.hbar()),
                                     dev(commutator(gs.Q2, gs.P2), I * pp.hbar()),
                                     dev(commutator(gs.Q1, gs.Q2), I * pp.vartheta()),
                                     dev(commutator(gs.P1, gs.P2), I * pp.calB()),
                                     dev(commutator(gs.Q1, gs.P2), 0.0), dev(commutator(gs.Q2, gs.P1), 0.0)});
        c.record(res, [&] { return describe(spec.params()); });
        checks.push_back(c);
    }
    {
        Check c("algebra.gauge_grid_commutators", cfg.tol.commutator, sub_seed(cfg.seed, 603));
        const double a2 = k.alpha * k.alpha;
        for (double l : {0.2, 0.6, 1.0, 1.4, 1.8}) {
            if (std::abs(k.gamma * k.beta * l - a2) < kSingularTol) continue;
            for (double m : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                const auto gs = build_generators(GaugeRep(k, l, m));
                const double res = std::max({
                    std::abs(commutator(gs.Q1, gs.P1).const_term - I / k.alpha),
                    std::abs(commutator(gs.Q2, gs.P2).const_term - I / k.alpha),
                    std::abs(commutator(gs.Q1, gs.Q2).const_term + I * k.beta / a2),
                    std::abs(commutator(gs.P1, gs.P2).const_term + I * k.gamma / a2),
                    std::abs(commutator(gs.Q1, gs.P2).const_term),
                    std::abs(commutator(gs.Q2, gs.P1).const_term),
                });
                c.record(res, [&] { return json{{"l", l}, {"m", m}}; });
            }
        }
        checks.push_back(c);
    }
    return finish("reps", checks);
}

json suite_gauge(const RunConfig& cfg) {
    const auto k = cfg.constants;
    k.validate();
    std::vector<Check> checks;
    const double a2 = k.alpha * k.alpha;

    double base_l = cfg.gauge_l.value_or(0.6);
    if (!cfg.gauge_l && std::abs(k.gamma * k.beta * base_l - a2) < 1e-3) base_l = 1.4;
    const double base_m = cfg.gauge_m.value_or(0.5);
    // Throws SingularParameter for a user-supplied singular l.
    const GaugeRep member(k, base_l, base_m);

    {
        Check c("gauge.curl_equals_field", cfg.tol.commutator, sub_seed(cfg.seed, 700));
        std::mt19937_64 rng(c.seed());
        for (double m : {-1.0, 0.0, 0.25, 0.5, 1.0, 2.0}) {
            const auto gs = build_generators(GaugeRep(k, base_l, m));
            for (int t = 0; t < cfg.sizes.gauge_members; ++t) {
                const double B = uniform(rng, -5.0, 5.0);
                const double curl = formal_curl(vector_potential(m, B, gs));
                c.record(std::abs(curl - B) / std::max(1.0, std::abs(B)), [&] { return json{{"m", m}, {"B", B}}; });
            }
        }
        checks.push_back(c);
    }
    {
        Check c("gauge.presets", 0.0, sub_seed(cfg.seed, 701));
        const auto gs = build_generators(member);
        for (double B : {-2.0, 0.5, 3.0}) {
            const auto landau = landau_gauge(B, gs), direct_one = vector_potential(1.0, B, gs);
            const auto sym = symmetric_gauge(B, gs), direct_half = vector_potential(0.5, B, gs);
            const bool same = landau.A1 == direct_one.A1 && landau.A2 == direct_one.A2 && sym.A1 == direct_half.A1 &&
                              sym.A2 == direct_half.A2 && landau.A2.is_scalar() &&
                              landau.A2.const_term == cplx{};
            c.record(same ? 0.0 : 1.0, [&] { return json{{"B", B}}; });
        }
        checks.push_back(c);
    }
    {
        Check c("gauge.field_commutator_independent_of_m", cfg.tol.commutator, sub_seed(cfg.seed, 702));
        for (double m : {-1.0, 0.0, 0.25, 0.5, 1.0, 2.0}) {
            const auto gs = build_generators(GaugeRep(k, base_l, m));
            const auto pp = commutator(gs.P1, gs.P2);
            c.record(pp.is_scalar() ? std::abs(pp.const_term + I * k.gamma / a2) : 1.0,
                     [&] { return json{{"m", m}, {"l", base_l}}; });
        }
        checks.push_back(c);
    }
    {
        Check c("gauge.symmetric_rep_params", cfg.tol.commutator, sub_seed(cfg.seed, 703));
        const double gb = k.gamma * k.beta;
        if (a2 > gb * (1.0 + 1e-9)) {
            const auto pr = symmetric_rep_params(k);
            // l solves gamma beta l^2 - 2 alpha^2 l + alpha^2 = 0 (smaller root).
            const double quad = gb * pr.l * pr.l - 2.0 * a2 * pr.l + a2;
            c.record(std::abs(quad) / a2 + std::abs(pr.m - 0.5), [&] { return json{{"l", pr.l}, {"m", pr.m}}; });
        } else {
            bool threw = false;
            try {
                (void)symmetric_rep_params(k);
            } catch (const Error& e) {
                threw = e.kind() == ErrorKind::ComplexRoot || e.kind() == ErrorKind::SingularParameter;
            }
            c.record(threw ? 0.0 : 1.0, [&] { return json{{"expected", "error for alpha^2 <= gamma beta"}}; });
        }
        checks.push_back(c);
    }
    {
        const AnyRep r{member};
        Check hom("gauge.member.homomorphism", cfg.tol.homomorphism, sub_seed(cfg.seed, 704));
        std::mt19937_64 rng(hom.seed());
        homomorphism_check(hom, r, cfg.sizes.homomorphism_trials, rng);
        checks.push_back(hom);

        Check uni("gauge.member.unitarity", cfg.tol.unitarity, sub_seed(cfg.seed, 705));
        std::mt19937_64 rng2(uni.seed());
        unitarity_check(uni, r, cfg.sizes.homomorphism_trials, rng2);
        checks.push_back(uni);

        Check adj("gauge.member.adjoint", cfg.tol.unitarity, sub_seed(cfg.seed, 706));
        std::mt19937_64 rng3(adj.seed());
        for (int t = 0; t < cfg.sizes.homomorphism_trials; ++t) {
            const auto x = random_element(rng3);
            const auto f = random_packet(rng3, 2);
            const auto a = apply_gauge_rep_adjoint(base_l, base_m, k, x, apply_gauge_rep(base_l, base_m, k, x, f));
            const auto b = apply_gauge_rep(base_l, base_m, k, x, apply_gauge_rep_adjoint(base_l, base_m, k, x, f));
            adj.record(std::max(packet_residual(a, f, adj.seed()), packet_residual(b, f, adj.seed())),
                       [&] { return json{{"g", to_json(x)}, {"f", to_json(f)}}; });
        }
        checks.push_back(adj);
    }
    {
        // l = m = 1 reproduces the rho = sigma = tau = 1 member of the generic family.
        Check c("gauge.l1m1_matches_generic", cfg.tol.homomorphism, sub_seed(cfg.seed, 707));
        if (std::abs(k.gamma * k.beta - a2) > kSingularTol * std::max(1.0, a2)) {
            const RepSpec generic(k, rep::Generic4D{1.0, 1.0, 1.0});
            std::mt19937_64 rng(c.seed());
            for (int t = 0; t < cfg.sizes.homomorphism_trials; ++t) {
                const auto x = random_element(rng);
                const auto f = random_packet(rng, 2);
                c.record(packet_residual(apply_gauge_rep(1.0, 1.0, k, x, f), apply_rep(generic, x, f), c.seed()),
                         [&] { return json{{"g", to_json(x)}, {"f", to_json(f)}}; });
            }
        }
        checks.push_back(c);
    }
    auto out = finish("gauge", checks);
    out["member"] = {{"l", base_l}, {"m", base_m}};
    return out;
}

json suite_torus(const RunConfig& cfg) {
    const auto k = cfg.torus_constants();
    // Throws InconsistentConstants unless alpha^2 = gamma beta.
    (void)standard_parameters(k);
    std::vector<Check> checks;

    std::mt19937_64 packet_rng(sub_seed(cfg.seed, 800));
    auto packets_for = [&](const RepCase& p) {
        const std::size_t d = RepSpec(k, p).carrier_dim();
        std::vector<GaussianPacket> ps;
        for (int n = 0; n < cfg.sizes.torus_packets; ++n) ps.push_back(random_packet(packet_rng, d == 0 ? 2 : d));
        return ps;
    };

    json cases = json::array();
    for (const auto& p : torus_presets()) {
        const auto packets = packets_for(p);
        const auto rep = verify_torus(p, k, packets, cfg.tol.weyl_phase);
        Check c("torus.weyl_phases." + std::string(to_string(rep.tag)), cfg.tol.weyl_phase,
                sub_seed(cfg.seed, 800));
        c.record(rep.max_deviation, [&] { return describe(p); });
        Check skew("torus.skew_symmetric." + std::string(to_string(rep.tag)), 0.0, sub_seed(cfg.seed, 801));
        skew.record(rep.theta.is_skew_symmetric() ? 0.0 : 1.0, [&] { return describe(p); });
        checks.push_back(c);
        checks.push_back(skew);
    }
    {
        Check c("torus.integer_degeneration", 1e-10, sub_seed(cfg.seed, 802));
        const std::vector<RepCase> integral = {
            rep::Generic4D{1.0, 2.0, 3.0}, rep::Cone2D{1.0, 1.0},     rep::TauZero4D{1.0, -1.0},
            rep::SigmaZero4D{2.0, 1.0},    rep::RhoZero4D{2.0, 1.0},  rep::WeylHeisenberg4D{1.0},
            rep::QPlane2D{-2.0, 0.3, 0.1}, rep::PPlane2D{3.0, -1.0, 0.2}, rep::Point0D{0.1, 0.2, 0.3, 0.4},
        };
        for (const auto& p : integral) {
            const auto ws = build_weyl_system(p, k);
            for (const auto& f : packets_for(p)) {
                for (int i = 1; i <= 4; ++i)
                    for (int j = i + 1; j <= 4; ++j)
                        c.record(std::abs(measure_weyl_phase(ws, i, j, f) - 1.0),
                                 [&] { return json{{"params", describe(p)}, {"pair", {i, j}}}; });
            }
        }
        checks.push_back(c);
    }
    {
        // Translations by arbitrary amounts (s, t) on the general constants.
        Check c("torus.general_weyl_relations", cfg.tol.weyl_phase, sub_seed(cfg.seed, 803));
        const auto kg = cfg.constants;
        const rep::Generic4D p{1.0, 0.7, 1.3};
        const AnyRep r{RepSpec(kg, p)};
        std::mt19937_64 rng(c.seed());
        for (int t = 0; t < cfg.sizes.weyl_trials; ++t) {
            const double s = uniform(rng, -2.0, 2.0), u = uniform(rng, -2.0, 2.0);
            const auto f = random_packet(rng, 2);
            auto m = [&](Direction a, Direction b) {
                return measure_commutation_phase(r, translation(a, s), translation(b, u), f);
            };
            using D = Direction;
            const double res = std::max({
                std::abs(m(D::q1, D::p1) - std::polar(1.0, p.rho * kg.alpha * s * u)),
                std::abs(m(D::q2, D::p2) - std::polar(1.0, p.rho * kg.alpha * s * u)),
                std::abs(m(D::q1, D::q2) - std::polar(1.0, p.tau * kg.gamma * s * u)),
                std::abs(m(D::p1, D::p2) - std::polar(1.0, p.sigma * kg.beta * s * u)),
                std::abs(m(D::q1, D::p2) - 1.0),
                std::abs(m(D::q2, D::p1) - 1.0),
            });
            c.record(res, [&] { return json{{"s", s}, {"t", u}, {"f", to_json(f)}}; });
        }
        checks.push_back(c);
    }
    auto out = finish("torus", checks);
    out["constants"] = {{"alpha", k.alpha}, {"beta", k.beta}, {"gamma", k.gamma}};
    return out;
}

}  // namespace detail
}  // namespace ncqm::lab
