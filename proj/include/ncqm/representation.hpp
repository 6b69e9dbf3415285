#pragma once

#include <array>
#include <cstddef>
#include <variant>

#include "ncqm/coadjoint.hpp"
#include "ncqm/group.hpp"
#include "ncqm/packet.hpp"

namespace ncqm {

namespace rep {

struct Generic4D { double rho, sigma, tau; };
// (kappa, delta) label the member of the cone family; they enter only
// through constant phases.
struct Cone2D { double rho, zeta, kappa = 0.0, delta = 0.0; };
struct TauZero4D { double rho, sigma; };
struct SigmaZero4D { double rho, tau; };
struct RhoZero4D { double sigma, tau; };
struct WeylHeisenberg4D { double rho; };
struct QPlane2D { double sigma, c3 = 0.0, c4 = 0.0; };
struct PPlane2D { double tau, c1 = 0.0, c2 = 0.0; };
struct Point0D { double c1, c2, c3, c4; };

}  // namespace rep

// Alternative order matches CaseTag and OrbitClass.
using RepCase = std::variant<rep::Generic4D, rep::Cone2D, rep::TauZero4D, rep::SigmaZero4D,
                             rep::RhoZero4D, rep::WeylHeisenberg4D, rep::QPlane2D, rep::PPlane2D,
                             rep::Point0D>;

// A validated member of one of the nine irreducible families.
class RepSpec {
public:
    // Throws Error(InvalidSpec) if a parameter is zero where the family needs
    // it nonzero (or nonzero where it must vanish), if the generic
    // determinant rho^2 alpha^2 - gamma beta sigma tau is zero, or if any
    // value is non-finite.
    RepSpec(const ExtensionConstants& k, const RepCase& params);

    const ExtensionConstants& constants() const { return k_; }
    const RepCase& params() const { return params_; }
    CaseTag tag() const { return kAllCases[params_.index()]; }

    // 2 for the four-dimensional-orbit families, 1 for Cone2D and the two
    // planes, 0 for Point0D (which accepts packets of either dimension).
    std::size_t carrier_dim() const;

    // (rho, sigma, tau) of the underlying orbit.
    std::array<double, 3> casimirs() const;

private:
    ExtensionConstants k_;
    RepCase params_;
};

OrbitClass orbit_of(const RepSpec& spec);

inline constexpr double kSingularTol = 1e-12;

// Member (l, m) of the family of equivalent representations on the
// rho = sigma = tau = 1 orbit.
class GaugeRep {
public:
    // Throws Error(SingularParameter) when |gamma beta l - alpha^2| < 1e-12.
    GaugeRep(const ExtensionConstants& k, double l, double m);

    const ExtensionConstants& constants() const { return k_; }
    double l() const { return l_; }
    double m() const { return m_; }
    // gamma beta l - alpha^2
    double denominator() const { return denom_; }

private:
    ExtensionConstants k_;
    double l_;
    double m_;
    double denom_;
};

using AnyRep = std::variant<RepSpec, GaugeRep>;

std::size_t carrier_dim(const AnyRep& r);
const ExtensionConstants& constants_of(const AnyRep& r);

// (U f)(r) = exp(i phase) exp(i wave.r) f(r + shift). Scalar actions
// (Point0D) carry dim == 0 and zero wave/shift.
struct AffineAction {
    std::size_t dim = 2;
    double phase = 0.0;
    std::array<double, 2> wave{0.0, 0.0};
    std::array<double, 2> shift{0.0, 0.0};
};

AffineAction action_of(const RepSpec& spec, const GroupElement& g);
AffineAction action_of(const GaugeRep& rep, const GroupElement& g);
AffineAction action_of(const AnyRep& rep, const GroupElement& g);
// The adjoint of the (l, m) family as written out in closed form.
AffineAction adjoint_action_of(const GaugeRep& rep, const GroupElement& g);

// Exact action on the packet: amplitude picks up exp(i phase + i k.shift),
// k += wave, c -= shift, widths untouched. Throws Error(CaseMismatch) when
// a non-scalar action meets a packet of the wrong dimension.
GaussianPacket apply_action(const AffineAction& a, const GaussianPacket& f);

GaussianPacket apply_rep(const RepSpec& spec, const GroupElement& g, const GaussianPacket& f);
GaussianPacket apply_rep(const AnyRep& rep, const GroupElement& g, const GaussianPacket& f);

GaussianPacket apply_gauge_rep(double l, double m, const ExtensionConstants& k,
                               const GroupElement& g, const GaussianPacket& f);
GaussianPacket apply_gauge_rep_adjoint(double l, double m, const ExtensionConstants& k,
                                       const GroupElement& g, const GaussianPacket& f);

}  // namespace ncqm
