#include "ncqm/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "ncqm/detail/overloaded.hpp"
#include "ncqm/error.hpp"

namespace ncqm {

using detail::overloaded;

ThetaMatrix ThetaMatrix::from_upper(double t12, double t13, double t14, double t23, double t24,
                                    double t34) {
    ThetaMatrix m;
    auto set = [&m](int j, int k, double v) {
        m.entries_[j][k] = v;
        m.entries_[k][j] = -v;
    };
    set(0, 1, t12);
    set(0, 2, t13);
    set(0, 3, t14);
    set(1, 2, t23);
    set(1, 3, t24);
    set(2, 3, t34);
    return m;
}

bool ThetaMatrix::is_skew_symmetric() const {
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k)
            if (entries_[j][k] != -entries_[k][j]) return false;
    return true;
}

ThetaMatrix theta_matrix(const OrbitClass& c) {
    return std::visit(
        overloaded{
            [](const orbit::Generic4D& o) {
                return ThetaMatrix::from_upper(o.tau, o.rho, 0, 0, o.rho, o.sigma);
            },
            [](const orbit::Cone2D& o) {
                return ThetaMatrix::from_upper(o.rho * o.zeta, o.rho, 0, 0, o.rho, o.rho / o.zeta);
            },
            [](const orbit::TauZero4D& o) { return ThetaMatrix::from_upper(0, o.rho, 0, 0, o.rho, o.sigma); },
            [](const orbit::SigmaZero4D& o) { return ThetaMatrix::from_upper(o.tau, o.rho, 0, 0, o.rho, 0); },
            [](const orbit::RhoZero4D& o) { return ThetaMatrix::from_upper(o.tau, 0, 0, 0, 0, o.sigma); },
            [](const orbit::WeylHeisenberg4D& o) { return ThetaMatrix::from_upper(0, o.rho, 0, 0, o.rho, 0); },
            [](const orbit::QPlane2D& o) { return ThetaMatrix::from_upper(0, 0, 0, 0, 0, o.sigma); },
            [](const orbit::PPlane2D& o) { return ThetaMatrix::from_upper(o.tau, 0, 0, 0, 0, 0); },
            [](const orbit::Point0D&) { return ThetaMatrix{}; },
        },
        c);
}

StandardParameters standard_parameters(const ExtensionConstants& k) {
    k.validate();
    const double a2 = k.alpha * k.alpha;
    const double gb = k.gamma * k.beta;
    if (std::abs(a2 - gb) > 1e-12 * std::max(a2, gb))
        throw Error(ErrorKind::InconsistentConstants,
                    "torus parameters need alpha^2 = gamma beta (alpha^2 = " + std::to_string(a2) +
                        ", gamma beta = " + std::to_string(gb) + ")");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    StandardParameters s;
    s.q1 = 1.0;
    s.p1 = two_pi / k.alpha;
    s.q2 = two_pi / k.gamma;
    s.p2 = k.alpha * s.q1 / k.beta;

    const double products[] = {k.alpha * s.q1 * s.p1, k.alpha * s.q2 * s.p2, k.gamma * s.q1 * s.q2,
                               k.beta * s.p1 * s.p2};
    for (double p : products) {
        if (std::abs(p - two_pi) > 1e-12 * two_pi)
            throw Error(ErrorKind::InconsistentConstants,
                        "standard parameters fail a 2 pi product check (" + std::to_string(p) + ")");
    }
    return s;
}

GroupElement WeylSystem::element(int i) const {
    switch (i) {
        case 1: return translation(Direction::q1, params_.q1);
        case 2: return translation(Direction::q2, params_.q2);
        case 3: return translation(Direction::p1, params_.p1);
        case 4: return translation(Direction::p2, params_.p2);
        default: throw Error(ErrorKind::InvalidSpec, "Weyl unitary index must be in 1..4");
    }
}

GaussianPacket WeylSystem::apply(int i, const GaussianPacket& f) const {
    return apply_rep(spec_, element(i), f);
}

WeylSystem build_weyl_system(const RepCase& params, const ExtensionConstants& k) {
    const auto sp = standard_parameters(k);
    return WeylSystem(RepSpec(k, params), sp);
}

cplx measure_commutation_phase(const AnyRep& rep, const GroupElement& a, const GroupElement& b,
                               const GaussianPacket& f) {
    const GaussianPacket ab = apply_rep(rep, a, apply_rep(rep, b, f));
    const GaussianPacket ba = apply_rep(rep, b, apply_rep(rep, a, f));

    // Both orders land on the same centre and wave vector; sample around it.
    constexpr std::uint64_t kSampleSeed = 0x5eed'7075;
    const auto pts = sample_points(ba, 15, kSampleSeed);
    const std::size_t centre_index = ba.dim == 1 ? 2 : 12;

    std::vector<cplx> ratios;
    std::optional<cplx> centre_ratio;
    for (std::size_t n = 0; n < pts.size(); ++n) {
        const cplx den = eval_packet(ba, pts[n]);
        if (std::abs(den) < 1e-14) continue;
        const cplx r = eval_packet(ab, pts[n]) / den;
        if (n == centre_index) centre_ratio = r;
        ratios.push_back(r);
    }
    if (ratios.size() < 5)
        throw Error(ErrorKind::InsufficientSamples,
                    "measure_commutation_phase: fewer than 5 usable sample points");

    cplx mean{};
    for (cplx r : ratios) mean += r;
    mean /= static_cast<double>(ratios.size());
    double var = 0.0;
    for (cplx r : ratios) var += std::norm(r - mean);
    const double stddev = std::sqrt(var / static_cast<double>(ratios.size()));
    if (stddev > 1e-9)
        throw Error(ErrorKind::NonConstantRatio,
                    "commutation ratio varies across sample points (stddev " + std::to_string(stddev) + ")");

    const cplx c = centre_ratio.value_or(mean);
    if (std::abs(std::abs(c) - 1.0) > 1e-10)
        throw Error(ErrorKind::NonConstantRatio, "commutation phase is not unimodular (|c| = " +
                                                     std::to_string(std::abs(c)) + ")");
    return c;
}

cplx measure_weyl_phase(const WeylSystem& ws, int i, int j, const GaussianPacket& f) {
    if (i == j) throw Error(ErrorKind::InvalidSpec, "measure_weyl_phase needs i != j");
    return measure_commutation_phase(AnyRep{ws.spec()}, ws.element(i), ws.element(j), f);
}

namespace {

struct PairDeviation {
    std::map<std::string, cplx> phases;
    double max_deviation = 0.0;
};

PairDeviation compare_pairs(const WeylSystem& ws, const ThetaMatrix& theta, const GaussianPacket& f) {
    PairDeviation out;
    for (int i = 1; i <= 4; ++i) {
        for (int j = i + 1; j <= 4; ++j) {
            const cplx measured = measure_weyl_phase(ws, i, j, f);
            const cplx expected = std::polar(1.0, 2.0 * std::numbers::pi * theta(i, j));
            out.phases[std::to_string(i) + std::to_string(j)] = measured;
            out.max_deviation = std::max(out.max_deviation, std::abs(measured - expected));
        }
    }
    return out;
}

}  // namespace

TorusReport verify_torus(const RepCase& params, const ExtensionConstants& k,
                         std::span<const GaussianPacket> packets, double tol) {
    if (packets.empty()) throw Error(ErrorKind::InvalidSpec, "verify_torus needs at least one packet");
    const WeylSystem ws = build_weyl_system(params, k);

    TorusReport report;
    report.tag = ws.spec().tag();
    report.theta = theta_matrix(orbit_of(ws.spec()));

    for (std::size_t n = 0; n < packets.size(); ++n) {
        const auto pd = compare_pairs(ws, report.theta, packets[n]);
        if (n == 0) report.measured_phases = pd.phases;
        report.max_deviation = std::max(report.max_deviation, pd.max_deviation);
    }

    if (const auto* cone = std::get_if<rep::Cone2D>(&params)) {
        for (double kappa : {-1.0, 0.0, 2.0}) {
            for (double delta : {-1.0, 0.0, 2.0}) {
                rep::Cone2D labelled = *cone;
                labelled.kappa = kappa;
                labelled.delta = delta;
                const WeylSystem relabelled = build_weyl_system(labelled, k);
                for (const auto& f : packets) {
                    const auto pd = compare_pairs(relabelled, report.theta, f);
                    report.max_deviation = std::max(report.max_deviation, pd.max_deviation);
                }
            }
        }
    }
    report.pass = report.max_deviation <= tol;
    return report;
}

}  // namespace ncqm
