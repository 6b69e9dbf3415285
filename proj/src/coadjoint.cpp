#include "ncqm/coadjoint.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ncqm/detail/overloaded.hpp"
#include "ncqm/error.hpp"

namespace ncqm {

using detail::overloaded;

std::string_view to_string(CaseTag tag) noexcept {
    switch (tag) {
        case CaseTag::Generic4D: return "Generic4D";
        case CaseTag::Cone2D: return "Cone2D";
        case CaseTag::TauZero4D: return "TauZero4D";
        case CaseTag::SigmaZero4D: return "SigmaZero4D";
        case CaseTag::RhoZero4D: return "RhoZero4D";
        case CaseTag::WeylHeisenberg4D: return "WeylHeisenberg4D";
        case CaseTag::QPlane2D: return "QPlane2D";
        case CaseTag::PPlane2D: return "PPlane2D";
        case CaseTag::Point0D: return "Point0D";
    }
    return "unknown";
}

CaseTag case_from_string(std::string_view name) {
    for (CaseTag t : kAllCases)
        if (to_string(t) == name) return t;
    throw Error(ErrorKind::InvalidSpec, "unknown case name '" + std::string(name) + "'");
}

CaseTag tag_of(const OrbitClass& c) { return kAllCases[c.index()]; }

std::array<double, 3> casimirs(const OrbitClass& c, const ExtensionConstants& k) {
    return std::visit(
        overloaded{
            [](const orbit::Generic4D& o) { return std::array{o.rho, o.sigma, o.tau}; },
            [&](const orbit::Cone2D& o) {
                return std::array{o.rho, o.rho / o.zeta,
                                  o.zeta * k.alpha * k.alpha * o.rho / (k.gamma * k.beta)};
            },
            [](const orbit::TauZero4D& o) { return std::array{o.rho, o.sigma, 0.0}; },
            [](const orbit::SigmaZero4D& o) { return std::array{o.rho, 0.0, o.tau}; },
            [](const orbit::RhoZero4D& o) { return std::array{0.0, o.sigma, o.tau}; },
            [](const orbit::WeylHeisenberg4D& o) { return std::array{o.rho, 0.0, 0.0}; },
            [](const orbit::QPlane2D& o) { return std::array{0.0, o.sigma, 0.0}; },
            [](const orbit::PPlane2D& o) { return std::array{0.0, 0.0, o.tau}; },
            [](const orbit::Point0D&) { return std::array{0.0, 0.0, 0.0}; },
        },
        c);
}

DualVector coadjoint_act(const GroupElement& g, const DualVector& f, const ExtensionConstants& k) {
    const auto& X = f.x;
    const double ha = 0.5 * k.alpha;
    const double hb = 0.5 * k.beta;
    const double hc = 0.5 * k.gamma;
    DualVector out = f;
    out.x[0] = X[0] - ha * g.q1 * X[4] + hb * g.p2 * X[5];
    out.x[1] = X[1] - ha * g.q2 * X[4] - hb * g.p1 * X[5];
    out.x[2] = X[2] + hc * g.q2 * X[6] + ha * g.p1 * X[4];
    out.x[3] = X[3] - hc * g.q1 * X[6] + ha * g.p2 * X[4];
    return out;
}

OrbitClass classify_orbit(const DualVector& f, const ExtensionConstants& k, double zero_tol) {
    if (!(zero_tol > 0.0))
        throw Error(ErrorKind::InvalidSpec, "classify_orbit: zero_tol must be positive");
    k.validate();

    auto chop = [zero_tol](double v) { return std::abs(v) < zero_tol ? 0.0 : v; };
    const double rho = chop(f.rho());
    const double sigma = chop(f.sigma());
    const double tau = chop(f.tau());
    const bool r = rho != 0.0, s = sigma != 0.0, t = tau != 0.0;

    if (r && s && t) {
        const double ra2 = rho * rho * k.alpha * k.alpha;
        const double det = ra2 - k.gamma * k.beta * sigma * tau;
        if (std::abs(det) > zero_tol * std::max(1.0, ra2)) return orbit::Generic4D{rho, sigma, tau};

        const double zeta = rho / sigma;
        const double line = k.gamma * k.beta * tau / (zeta * k.alpha * k.alpha);
        if (std::abs(rho - line) > zero_tol * std::max(1.0, std::abs(rho))) {
            throw Error(ErrorKind::InconsistentCone,
                        "classify_orbit: determinant test places (" + std::to_string(rho) + ", " +
                            std::to_string(sigma) + ", " + std::to_string(tau) +
                            ") on the cone but rho = gamma beta tau / (zeta alpha^2) fails");
        }
        return orbit::Cone2D{rho, zeta};
    }
    if (r && s) return orbit::TauZero4D{rho, sigma};
    if (r && t) return orbit::SigmaZero4D{rho, tau};
    if (s && t) return orbit::RhoZero4D{sigma, tau};
    if (r) return orbit::WeylHeisenberg4D{rho};
    if (s) return orbit::QPlane2D{sigma};
    if (t) return orbit::PPlane2D{tau};
    return orbit::Point0D{f.x[0], f.x[1], f.x[2], f.x[3]};
}

int orbit_dimension(const OrbitClass& c) {
    switch (tag_of(c)) {
        case CaseTag::Generic4D:
        case CaseTag::TauZero4D:
        case CaseTag::SigmaZero4D:
        case CaseTag::RhoZero4D:
        case CaseTag::WeylHeisenberg4D: return 4;
        case CaseTag::Cone2D:
        case CaseTag::QPlane2D:
        case CaseTag::PPlane2D: return 2;
        case CaseTag::Point0D: return 0;
    }
    return -1;
}

}  // namespace ncqm
