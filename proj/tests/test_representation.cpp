#include <doctest.h>

#include <variant>

#include "ncqm/error.hpp"
#include "ncqm/representation.hpp"
#include "support.hpp"

using namespace ncqm;
using testing::for_all;
using testing::Gen;

namespace {

using Fn = std::function<cplx(const std::vector<double>&)>;
const cplx I{0.0, 1.0};

// Generic family, written directly as a function of r.
Fn generic_oracle(double rho, double sigma, double tau, const ExtensionConstants& k, const GroupElement& g,
                  const GaussianPacket& f) {
    return [=](const std::vector<double>& r) {
        const double a = k.alpha, b = k.beta, c = k.gamma;
        const double phase = rho * (g.theta + a * g.p1 * r[0] + a * g.p2 * r[1] + a / 2 * g.q1 * g.p1 +
                                    a / 2 * g.q2 * g.p2) +
                             sigma * (g.phi + b / 2 * g.p1 * g.p2) +
                             tau * (g.psi + c * g.q2 * r[0] + c / 2 * g.q1 * g.q2);
        const double arg[2] = {r[0] + g.q1, r[1] + g.q2 + sigma * b / (rho * a) * g.p1};
        return std::exp(I * phase) * eval_packet(f, arg);
    };
}

// Gauge family U_{l,m}, written directly as a function of r.
Fn gauge_oracle(double l, double m, const ExtensionConstants& k, const GroupElement& g, const GaussianPacket& f,
                bool adjoint = false) {
    return [=](const std::vector<double>& r) {
        const double a = k.alpha, b = k.beta, c = k.gamma;
        const double D = c * b * l - a * a;
        const double s = adjoint ? -1.0 : 1.0;
        const double central = g.theta + g.phi + g.psi;
        const double linear = a * g.p1 * r[0] + a * g.p2 * r[1] + a * a * c * (1 - l) / D * g.q1 * r[1] +
                              l * c * g.q2 * r[0];
        const double quad = (a / 2 + a * c * b * m * (1 - l) / D) * g.p1 * g.q1 +
                            (a / 2 - l * c * b * (1 - m) / a) * g.p2 * g.q2 + (m - 0.5) * b * g.p1 * g.p2 +
                            (c / 2 - c * (1 - l) * (c * b * l - c * b * l * m - a * a) / D) * g.q1 * g.q2;
        const double shift1 = -(1 - m) * b / a * g.p2 + (c * b * (l + m - l * m) - a * a) / D * g.q1;
        const double shift2 = m * b / a * g.p1 - (c * b * l * (1 - m) - a * a) / (a * a) * g.q2;
        const double arg[2] = {r[0] + s * shift1, r[1] + s * shift2};
        return std::exp(I * (s * central + s * linear + quad)) * eval_packet(f, arg);
    };
}

std::vector<std::vector<double>> points_around(const GaussianPacket& f, std::uint64_t seed) {
    const auto pts = sample_points(f, 20, seed);
    return {pts.begin(), pts.end()};
}

Fn of(const GaussianPacket& f) {
    return [f](const std::vector<double>& r) { return eval_packet(f, r); };
}

std::vector<RepCase> sample_cases() {
    return {rep::Generic4D{1.0, 0.7, 1.3},  rep::Cone2D{0.8, 1.5, 0.3, -0.4}, rep::TauZero4D{0.9, 0.6},
            rep::SigmaZero4D{1.1, 0.8},     rep::RhoZero4D{0.7, 1.2},        rep::WeylHeisenberg4D{1.2},
            rep::QPlane2D{0.9, 0.5, -0.7},  rep::PPlane2D{1.1, -0.3, 0.6},   rep::Point0D{1.0, -0.5, 0.25, 2.0}};
}

std::size_t packet_dim(const RepSpec& s) { return s.carrier_dim() == 0 ? 2 : s.carrier_dim(); }

}  // namespace

TEST_CASE("generic family matches its pointwise formula") {
    const auto k = ExtensionConstants::general();
    for_all(100, 41, [&](Gen& gen, int i) {
        const double rho = gen.nonzero(0.3, 2.0), sigma = gen.nonzero(0.3, 2.0), tau = gen.nonzero(0.3, 2.0);
        if (std::abs(rho * rho * k.alpha * k.alpha - k.gamma * k.beta * sigma * tau) < 1e-3) return;
        const RepSpec spec(k, rep::Generic4D{rho, sigma, tau});
        const auto g = gen.element();
        const auto f = gen.packet(2);
        const auto out = apply_rep(spec, g, f);
        CHECK(testing::pointwise_residual(of(out), generic_oracle(rho, sigma, tau, k, g, f),
                                          points_around(out, i)) <= 1e-12);
    });
}

TEST_CASE("gauge family and its adjoint match their pointwise formulas") {
    for_all(100, 42, [](Gen& gen, int i) {
        const ExtensionConstants k{gen.real(0.5, 2.0), gen.real(0.3, 1.5), gen.real(0.3, 1.5)};
        const double l = gen.real(-2.0, 2.0), m = gen.real(-1.0, 2.0);
        if (std::abs(k.gamma * k.beta * l - k.alpha * k.alpha) < 1e-2) return;
        const auto g = gen.element();
        const auto f = gen.packet(2);
        const auto out = apply_gauge_rep(l, m, k, g, f);
        CHECK(testing::pointwise_residual(of(out), gauge_oracle(l, m, k, g, f), points_around(out, i)) <= 1e-12);
        const auto back = apply_gauge_rep_adjoint(l, m, k, g, f);
        CHECK(testing::pointwise_residual(of(back), gauge_oracle(l, m, k, g, f, true), points_around(back, i)) <=
              1e-12);
    });
}

TEST_CASE("worked actions on packets") {
    const auto k = ExtensionConstants::general();
    const RepSpec spec(k, rep::Generic4D{1.0, 1.0, 1.0});
    Gen gen(43);
    const auto f = gen.packet(2);

    for (const auto& p : sample_cases()) {
        const RepSpec s(k, p);
        const auto h = gen.packet(packet_dim(s));
        CHECK(testing::packet_residual(apply_rep(s, identity(), h), h) == 0.0);
    }

    // only p2 = s: k2 grows by rho alpha s, nothing else moves
    const auto a = apply_rep(spec, translation(Direction::p2, 0.75), f);
    CHECK(a.k[1] == doctest::Approx(f.k[1] + 0.75).epsilon(1e-15));
    CHECK(a.k[0] == f.k[0]);
    CHECK(a.c == f.c);
    CHECK(a.w == f.w);
    CHECK(std::abs(a.amplitude - f.amplitude) <= 1e-15);

    // only q1 = a: centre moves back by a, phase picks up only the wave term
    const auto b = apply_rep(spec, translation(Direction::q1, 0.5), f);
    CHECK(b.c[0] == doctest::Approx(f.c[0] - 0.5).epsilon(1e-15));
    CHECK(b.c[1] == f.c[1]);
    CHECK(b.k == f.k);
    CHECK(b.w == f.w);

    const RepSpec point(k, rep::Point0D{1.0, 0.0, 0.0, 0.0});
    const auto c = apply_rep(point, translation(Direction::p1, 0.9), f);
    CHECK(std::abs(c.amplitude - f.amplitude * std::polar(1.0, 0.9)) <= 1e-15);
    CHECK(c.c == f.c);
    CHECK(c.k == f.k);
}

TEST_CASE("l = m = 1 reproduces the generic member with rho = sigma = tau = 1") {
    const auto k = ExtensionConstants::general();
    const RepSpec generic(k, rep::Generic4D{1.0, 1.0, 1.0});
    for_all(200, 44, [&](Gen& gen, int) {
        const auto g = gen.element();
        const auto f = gen.packet(2);
        CHECK(testing::packet_residual(apply_gauge_rep(1.0, 1.0, k, g, f), apply_rep(generic, g, f)) <= 1e-12);
    });
}

TEST_CASE("homomorphism and unitarity for every family") {
    const auto k = ExtensionConstants::general();
    std::vector<AnyRep> reps;
    for (const auto& p : sample_cases()) reps.emplace_back(RepSpec(k, p));
    for (double l : {0.3, 1.4}) reps.emplace_back(GaugeRep(k, l, 0.25));
    for (std::size_t n = 0; n < reps.size(); ++n) {
        const auto& r = reps[n];
        const std::size_t dim = carrier_dim(r) == 0 ? 2 : carrier_dim(r);
        for_all(200, 45 + n, [&](Gen& gen, int) {
            const auto g = gen.element(), h = gen.element();
            const auto f = gen.packet(dim);
            const auto lhs = apply_rep(r, g, apply_rep(r, h, f));
            const auto rhs = apply_rep(r, compose(g, h, k), f);
            CHECK(testing::packet_residual(lhs, rhs) <= 1e-9);
            CHECK(std::abs(norm(apply_rep(r, g, f)) - norm(f)) <= 1e-10 * norm(f));
        });
    }
}

TEST_CASE("unitarity against the quadrature oracle") {
    const auto k = ExtensionConstants::general();
    Gen gen(46);
    const RepSpec cone(k, rep::Cone2D{0.8, 1.5, 0.3, -0.4});
    const auto f = gen.packet(1), h = gen.packet(1);
    const auto g = gen.element();
    const cplx before = testing::quadrature_inner(f, h);
    const cplx after = testing::quadrature_inner(apply_rep(cone, g, f), apply_rep(cone, g, h));
    CHECK(std::abs(before - after) <= 1e-10 * norm(f) * norm(h));
}

TEST_CASE("gauge adjoint inverts the action in both orders") {
    const auto k = ExtensionConstants::general();
    for_all(200, 47, [&](Gen& gen, int) {
        const double l = gen.real(0.2, 1.8), m = gen.real(0.0, 1.0);
        if (std::abs(k.gamma * k.beta * l - k.alpha * k.alpha) < 1e-3) return;
        const auto g = gen.element();
        const auto f = gen.packet(2);
        CHECK(testing::packet_residual(apply_gauge_rep_adjoint(l, m, k, g, apply_gauge_rep(l, m, k, g, f)), f) <=
              1e-10);
        CHECK(testing::packet_residual(apply_gauge_rep(l, m, k, g, apply_gauge_rep_adjoint(l, m, k, g, f)), f) <=
              1e-10);
        CHECK(testing::packet_residual(apply_gauge_rep(l, m, k, identity(), f), f) == 0.0);
        CHECK(testing::packet_residual(apply_gauge_rep_adjoint(l, m, k, identity(), f), f) == 0.0);
    });
}

TEST_CASE("central elements act by the central character") {
    const auto k = ExtensionConstants::general();
    Gen gen(48);
    for (const auto& p : sample_cases()) {
        const RepSpec s(k, p);
        const auto cas = s.casimirs();
        const auto f = gen.packet(packet_dim(s));
        GroupElement z;
        z.theta = 0.4;
        z.phi = -1.1;
        z.psi = 0.8;
        const auto out = apply_rep(s, z, f);
        const double expected = cas[0] * 0.4 - cas[1] * 1.1 + cas[2] * 0.8;
        CHECK(std::abs(out.amplitude - f.amplitude * std::polar(1.0, expected)) <= 1e-14);
    }
}

TEST_CASE("spec construction rejects degenerate parameters") {
    const auto k = ExtensionConstants::general();
    CHECK_THROWS_AS(RepSpec(k, rep::Cone2D{1.0, 0.0}), Error);
    CHECK_THROWS_AS(RepSpec(k, rep::Generic4D{0.0, 1.0, 1.0}), Error);
    // 0.25 = 0.25 * 0.5 * 2: on the cone
    CHECK_THROWS_AS(RepSpec(k, rep::Generic4D{0.5, 0.5, 2.0}), Error);
    CHECK_THROWS_AS(RepSpec(k, rep::WeylHeisenberg4D{0.0}), Error);
    CHECK_THROWS_AS(GaugeRep(ExtensionConstants::unit(), 1.0, 0.5), Error);
    try {
        GaugeRep(ExtensionConstants::unit(), 1.0, 0.5);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingularParameter);
        CHECK(e.is_precondition());
    }
}

TEST_CASE("carrier dimension mismatches are reported") {
    const auto k = ExtensionConstants::general();
    const RepSpec cone(k, rep::Cone2D{1.0, 2.0});
    CHECK(cone.carrier_dim() == 1);
    CHECK(RepSpec(k, rep::Point0D{0, 0, 0, 0}).carrier_dim() == 0);
    CHECK_THROWS_AS(apply_rep(cone, identity(), GaussianPacket::unit(2)), Error);
    CHECK_NOTHROW(apply_rep(RepSpec(k, rep::Point0D{0, 0, 0, 0}), identity(), GaussianPacket::unit(1)));
}

TEST_CASE("spec orbit agrees with the classifier") {
    const auto k = ExtensionConstants::general();
    for (const auto& p : sample_cases()) {
        const RepSpec s(k, p);
        const auto o = orbit_of(s);
        CHECK(tag_of(o) == s.tag());
        CHECK(casimirs(o, k) == s.casimirs());
    }
}
