#include "ncqm/representation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ncqm/detail/overloaded.hpp"
#include "ncqm/error.hpp"

namespace ncqm {

using detail::overloaded;

namespace {

void require(bool ok, CaseTag tag, const char* what) {
    if (!ok)
        throw Error(ErrorKind::InvalidSpec, std::string(to_string(tag)) + ": " + what);
}

bool nonzero(double v) { return std::isfinite(v) && std::abs(v) >= kDefaultZeroTol; }
bool finite(double v) { return std::isfinite(v); }

}  // namespace

RepSpec::RepSpec(const ExtensionConstants& k, const RepCase& params) : k_(k), params_(params) {
    k_.validate();
    const CaseTag t = tag();
    std::visit(
        overloaded{
            [&](const rep::Generic4D& p) {
                require(nonzero(p.rho) && nonzero(p.sigma) && nonzero(p.tau), t,
                        "rho, sigma and tau must all be nonzero");
                const double ra2 = p.rho * p.rho * k_.alpha * k_.alpha;
                const double det = ra2 - k_.gamma * k_.beta * p.sigma * p.tau;
                require(std::abs(det) > kDefaultZeroTol * std::max(1.0, ra2), t,
                        "rho^2 alpha^2 - gamma beta sigma tau must be nonzero (use Cone2D)");
            },
            [&](const rep::Cone2D& p) {
                require(nonzero(p.rho) && nonzero(p.zeta), t, "rho and zeta must be nonzero");
                require(finite(p.kappa) && finite(p.delta), t, "kappa and delta must be finite");
            },
            [&](const rep::TauZero4D& p) {
                require(nonzero(p.rho) && nonzero(p.sigma), t, "rho and sigma must be nonzero");
            },
            [&](const rep::SigmaZero4D& p) {
                require(nonzero(p.rho) && nonzero(p.tau), t, "rho and tau must be nonzero");
            },
            [&](const rep::RhoZero4D& p) {
                require(nonzero(p.sigma) && nonzero(p.tau), t, "sigma and tau must be nonzero");
            },
            [&](const rep::WeylHeisenberg4D& p) { require(nonzero(p.rho), t, "rho must be nonzero"); },
            [&](const rep::QPlane2D& p) {
                require(nonzero(p.sigma), t, "sigma must be nonzero");
                require(finite(p.c3) && finite(p.c4), t, "labels must be finite");
            },
            [&](const rep::PPlane2D& p) {
                require(nonzero(p.tau), t, "tau must be nonzero");
                require(finite(p.c1) && finite(p.c2), t, "labels must be finite");
            },
            [&](const rep::Point0D& p) {
                require(finite(p.c1) && finite(p.c2) && finite(p.c3) && finite(p.c4), t,
                        "labels must be finite");
            },
        },
        params_);
}

std::size_t RepSpec::carrier_dim() const {
    switch (tag()) {
        case CaseTag::Cone2D:
        case CaseTag::QPlane2D:
        case CaseTag::PPlane2D: return 1;
        case CaseTag::Point0D: return 0;
        default: return 2;
    }
}

std::array<double, 3> RepSpec::casimirs() const { return ncqm::casimirs(orbit_of(*this), k_); }

OrbitClass orbit_of(const RepSpec& spec) {
    return std::visit(
        overloaded{
            [](const rep::Generic4D& p) -> OrbitClass { return orbit::Generic4D{p.rho, p.sigma, p.tau}; },
            [](const rep::Cone2D& p) -> OrbitClass { return orbit::Cone2D{p.rho, p.zeta}; },
            [](const rep::TauZero4D& p) -> OrbitClass { return orbit::TauZero4D{p.rho, p.sigma}; },
            [](const rep::SigmaZero4D& p) -> OrbitClass { return orbit::SigmaZero4D{p.rho, p.tau}; },
            [](const rep::RhoZero4D& p) -> OrbitClass { return orbit::RhoZero4D{p.sigma, p.tau}; },
            [](const rep::WeylHeisenberg4D& p) -> OrbitClass { return orbit::WeylHeisenberg4D{p.rho}; },
            [](const rep::QPlane2D& p) -> OrbitClass { return orbit::QPlane2D{p.sigma}; },
            [](const rep::PPlane2D& p) -> OrbitClass { return orbit::PPlane2D{p.tau}; },
            [](const rep::Point0D& p) -> OrbitClass { return orbit::Point0D{p.c1, p.c2, p.c3, p.c4}; },
        },
        spec.params());
}

GaugeRep::GaugeRep(const ExtensionConstants& k, double l, double m) : k_(k), l_(l), m_(m) {
    k_.validate();
    if (!std::isfinite(l) || !std::isfinite(m))
        throw Error(ErrorKind::InvalidSpec, "gauge parameters (l, m) must be finite");
    denom_ = k.gamma * k.beta * l - k.alpha * k.alpha;
    if (std::abs(denom_) < kSingularTol)
        throw Error(ErrorKind::SingularParameter,
                    "gamma beta l - alpha^2 vanishes at l = " + std::to_string(l));
}

std::size_t carrier_dim(const AnyRep& r) {
    return std::visit(overloaded{[](const RepSpec& s) { return s.carrier_dim(); },
                                 [](const GaugeRep&) { return std::size_t{2}; }},
                      r);
}

const ExtensionConstants& constants_of(const AnyRep& r) {
    return std::visit([](const auto& s) -> const ExtensionConstants& { return s.constants(); }, r);
}

namespace {

using G = GroupElement;
using K = ExtensionConstants;

AffineAction act(const rep::Generic4D& p, const K& k, const G& g) {
    const double ra = p.rho * k.alpha;
    AffineAction a;
    a.phase = p.rho * (g.theta + 0.5 * k.alpha * (g.q1 * g.p1 + g.q2 * g.p2)) +
              p.sigma * (g.phi + 0.5 * k.beta * g.p1 * g.p2) +
              p.tau * (g.psi + 0.5 * k.gamma * g.q1 * g.q2);
    a.wave = {ra * g.p1 + p.tau * k.gamma * g.q2, ra * g.p2};
    a.shift = {g.q1, g.q2 + p.sigma * k.beta / ra * g.p1};
    return a;
}

AffineAction act(const rep::Cone2D& p, const K& k, const G& g) {
    const double a2 = k.alpha * k.alpha;
    AffineAction a;
    a.dim = 1;
    a.phase = p.rho * (g.theta + g.phi / p.zeta + p.zeta * a2 / (k.gamma * k.beta) * g.psi) +
              p.kappa * g.q1 + p.delta * g.q2 + 0.5 * p.rho * k.alpha * (g.q1 * g.p1 - g.q2 * g.p2) +
              p.rho * (0.5 * a2 * p.zeta / k.beta * g.q1 * g.q2 - 0.5 * k.beta / p.zeta * g.p1 * g.p2);
    a.wave = {-p.rho * k.alpha * g.p1 - p.rho * a2 * p.zeta / k.beta * g.q2, 0.0};
    a.shift = {-g.q1 + k.beta / (k.alpha * p.zeta) * g.p2, 0.0};
    return a;
}

AffineAction act(const rep::TauZero4D& p, const K& k, const G& g) {
    const double ra = p.rho * k.alpha;
    AffineAction a;
    a.phase = p.rho * (g.theta + 0.5 * k.alpha * (g.q1 * g.p1 + g.q2 * g.p2)) +
              p.sigma * (g.phi + 0.5 * k.beta * g.p1 * g.p2);
    a.wave = {ra * g.p1, ra * g.p2};
    a.shift = {g.q1, g.q2 + p.sigma * k.beta / ra * g.p1};
    return a;
}

AffineAction act(const rep::SigmaZero4D& p, const K& k, const G& g) {
    const double ra = p.rho * k.alpha;
    AffineAction a;
    a.phase = p.rho * (g.theta + 0.5 * k.alpha * (g.q1 * g.p1 + g.q2 * g.p2)) +
              p.tau * (g.psi + 0.5 * k.gamma * g.q1 * g.q2);
    a.wave = {ra * g.p1 + p.tau * k.gamma * g.q2, ra * g.p2};
    a.shift = {g.q1, g.q2};
    return a;
}

AffineAction act(const rep::WeylHeisenberg4D& p, const K& k, const G& g) {
    const double ra = p.rho * k.alpha;
    AffineAction a;
    a.phase = p.rho * (g.theta + 0.5 * k.alpha * (g.q1 * g.p1 + g.q2 * g.p2));
    a.wave = {ra * g.p1, ra * g.p2};
    a.shift = {g.q1, g.q2};
    return a;
}

// The r2 p2 phase carries no alpha: q and p are dimensionless in this family.
AffineAction act(const rep::RhoZero4D& p, const K& k, const G& g) {
    AffineAction a;
    a.phase = p.sigma * (g.phi + 0.5 * k.beta * g.p1 * g.p2) +
              p.tau * (g.psi + 0.5 * k.gamma * g.q1 * g.q2);
    a.wave = {p.tau * k.gamma * g.q2, g.p2};
    a.shift = {g.q1, p.sigma * k.beta * g.p1};
    return a;
}

AffineAction act(const rep::QPlane2D& p, const K& k, const G& g) {
    AffineAction a;
    a.dim = 1;
    a.phase = p.c3 * g.q1 + p.c4 * g.q2 + p.sigma * g.phi + 0.5 * p.sigma * k.beta * g.p1 * g.p2;
    a.wave = {g.p2, 0.0};
    a.shift = {p.sigma * k.beta * g.p1, 0.0};
    return a;
}

AffineAction act(const rep::PPlane2D& p, const K& k, const G& g) {
    AffineAction a;
    a.dim = 1;
    a.phase = p.c1 * g.p1 + p.c2 * g.p2 + p.tau * (g.psi - 0.5 * k.gamma * g.q1 * g.q2);
    a.wave = {-p.tau * k.gamma * g.q1, 0.0};
    a.shift = {g.q2, 0.0};
    return a;
}

AffineAction act(const rep::Point0D& p, const K&, const G& g) {
    AffineAction a;
    a.dim = 0;
    a.phase = p.c1 * g.p1 + p.c2 * g.p2 + p.c3 * g.q1 + p.c4 * g.q2;
    return a;
}

// Quadratic part of the (l, m) phase; shared verbatim by the representation
// and its adjoint.
double gauge_quadratic_phase(const GaugeRep& r, const G& g) {
    const auto& k = r.constants();
    const double l = r.l(), m = r.m(), D = r.denominator();
    const double gb = k.gamma * k.beta;
    const double a2 = k.alpha * k.alpha;
    const double c_p1q1 = 0.5 * k.alpha + k.alpha * gb * m * (1.0 - l) / D;
    const double c_p2q2 = 0.5 * k.alpha - l * gb * (1.0 - m) / k.alpha;
    const double c_p1p2 = (m - 0.5) * k.beta;
    const double c_q1q2 = 0.5 * k.gamma - k.gamma * (1.0 - l) * (gb * l - gb * l * m - a2) / D;
    return c_p1q1 * g.p1 * g.q1 + c_p2q2 * g.p2 * g.q2 + c_p1p2 * g.p1 * g.p2 + c_q1q2 * g.q1 * g.q2;
}

std::array<double, 2> gauge_wave(const GaugeRep& r, const G& g) {
    const auto& k = r.constants();
    const double l = r.l(), D = r.denominator();
    return {k.alpha * g.p1 + l * k.gamma * g.q2,
            k.alpha * g.p2 + k.alpha * k.alpha * k.gamma * (1.0 - l) / D * g.q1};
}

std::array<double, 2> gauge_shift(const GaugeRep& r, const G& g) {
    const auto& k = r.constants();
    const double l = r.l(), m = r.m(), D = r.denominator();
    const double gb = k.gamma * k.beta;
    const double a2 = k.alpha * k.alpha;
    return {-(1.0 - m) * k.beta / k.alpha * g.p2 + (gb * (l + m - l * m) - a2) / D * g.q1,
            m * k.beta / k.alpha * g.p1 - (gb * l * (1.0 - m) - a2) / a2 * g.q2};
}

}  // namespace

AffineAction action_of(const RepSpec& spec, const GroupElement& g) {
    return std::visit([&](const auto& p) { return act(p, spec.constants(), g); }, spec.params());
}

AffineAction action_of(const GaugeRep& rep, const GroupElement& g) {
    AffineAction a;
    a.phase = g.theta + g.phi + g.psi + gauge_quadratic_phase(rep, g);
    a.wave = gauge_wave(rep, g);
    a.shift = gauge_shift(rep, g);
    return a;
}

AffineAction adjoint_action_of(const GaugeRep& rep, const GroupElement& g) {
    AffineAction a;
    a.phase = -g.theta - g.phi - g.psi + gauge_quadratic_phase(rep, g);
    const auto wave = gauge_wave(rep, g);
    const auto shift = gauge_shift(rep, g);
    a.wave = {-wave[0], -wave[1]};
    a.shift = {-shift[0], -shift[1]};
    return a;
}

AffineAction action_of(const AnyRep& rep, const GroupElement& g) {
    return std::visit([&](const auto& r) { return action_of(r, g); }, rep);
}

GaussianPacket apply_action(const AffineAction& a, const GaussianPacket& f) {
    if (a.dim != 0 && a.dim != f.dim)
        throw Error(ErrorKind::CaseMismatch, "representation acts on L^2(R^" + std::to_string(a.dim) +
                                                 ") but the packet has dim " + std::to_string(f.dim));
    GaussianPacket out = f;
    double angle = a.phase;
    if (a.dim != 0) {
        for (std::size_t j = 0; j < f.dim; ++j) {
            angle += f.k[j] * a.shift[j];
            out.k[j] = f.k[j] + a.wave[j];
            out.c[j] = f.c[j] - a.shift[j];
        }
    }
    out.amplitude = f.amplitude * std::polar(1.0, angle);
    return out;
}

GaussianPacket apply_rep(const RepSpec& spec, const GroupElement& g, const GaussianPacket& f) {
    return apply_action(action_of(spec, g), f);
}

GaussianPacket apply_rep(const AnyRep& rep, const GroupElement& g, const GaussianPacket& f) {
    return apply_action(action_of(rep, g), f);
}

GaussianPacket apply_gauge_rep(double l, double m, const ExtensionConstants& k, const GroupElement& g,
                               const GaussianPacket& f) {
    return apply_action(action_of(GaugeRep(k, l, m), g), f);
}

GaussianPacket apply_gauge_rep_adjoint(double l, double m, const ExtensionConstants& k,
                                       const GroupElement& g, const GaussianPacket& f) {
    return apply_action(adjoint_action_of(GaugeRep(k, l, m), g), f);
}

}  // namespace ncqm
