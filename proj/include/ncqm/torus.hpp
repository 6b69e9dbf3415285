#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ncqm/coadjoint.hpp"
#include "ncqm/group.hpp"
#include "ncqm/packet.hpp"
#include "ncqm/representation.hpp"

namespace ncqm {

// 4x4 real skew-symmetric matrix of torus commutation phases, read as
// U_j U_k = exp(2 pi i theta_jk) U_k U_j.
class ThetaMatrix {
public:
    ThetaMatrix() = default;
    // Fills the upper triangle and mirrors it with opposite sign.
    static ThetaMatrix from_upper(double t12, double t13, double t14, double t23, double t24, double t34);

    // 1-based indices, j, k in 1..4.
    double operator()(int j, int k) const { return entries_.at(j - 1).at(k - 1); }
    const std::array<std::array<double, 4>, 4>& entries() const { return entries_; }

    bool is_skew_symmetric() const;

private:
    std::array<std::array<double, 4>, 4> entries_{};
};

ThetaMatrix theta_matrix(const OrbitClass& c);

// (q1, q2, p1, p2) with alpha q1 p1 = alpha q2 p2 = gamma q1 q2 = beta p1 p2 = 2 pi.
struct StandardParameters {
    double q1, q2, p1, p2;
};

// Requires alpha^2 = gamma beta to 1e-12 relative, else
// Error(InconsistentConstants). The scale freedom is fixed by q1 = 1.
StandardParameters standard_parameters(const ExtensionConstants& k);

// The four one-parameter unitary groups of a family, evaluated at the
// standard parameters: U1 = U(q1), U2 = U(q2), U3 = U(p1), U4 = U(p2).
class WeylSystem {
public:
    WeylSystem(RepSpec spec, StandardParameters params) : spec_(std::move(spec)), params_(params) {}

    const RepSpec& spec() const { return spec_; }
    const StandardParameters& parameters() const { return params_; }

    // Group element of U_i, i in 1..4.
    GroupElement element(int i) const;
    GaussianPacket apply(int i, const GaussianPacket& f) const;

private:
    RepSpec spec_;
    StandardParameters params_;
};

WeylSystem build_weyl_system(const RepCase& params, const ExtensionConstants& k);

// c with (U(a) U(b) f)(r) = c (U(b) U(a) f)(r), from pointwise ratios over
// a sample set around the packet. Throws Error(NonConstantRatio) if the ratio
// varies by more than 1e-9 (standard deviation) or |c| deviates from 1 by
// more than 1e-10, and Error(InsufficientSamples) if fewer than five sample
// points have |U(b)U(a)f| >= 1e-14.
cplx measure_commutation_phase(const AnyRep& rep, const GroupElement& a, const GroupElement& b,
                               const GaussianPacket& f);

// c with U_i U_j f = c U_j U_i f; i != j, both in 1..4.
cplx measure_weyl_phase(const WeylSystem& ws, int i, int j, const GaussianPacket& f);

struct TorusReport {
    CaseTag tag;
    ThetaMatrix theta;
    // Keyed "12", "13", ...; measured on the first packet.
    std::map<std::string, cplx> measured_phases;
    double max_deviation = 0.0;
    bool pass = false;
};

inline constexpr double kWeylPhaseTol = 1e-9;

// Compares all six measured phases against exp(2 pi i theta_jk) on every
// packet. For the cone family the labels (kappa, delta) are additionally
// swept over {-1, 0, 2}^2 and must not move any phase.
TorusReport verify_torus(const RepCase& params, const ExtensionConstants& k,
                         std::span<const GaussianPacket> packets, double tol = kWeylPhaseTol);

}  // namespace ncqm
