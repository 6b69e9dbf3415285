#pragma once

#include <array>
#include <string_view>
#include <variant>

#include "ncqm/group.hpp"

namespace ncqm {

// Coordinates (X1..X7) of a point in the dual Lie algebra. X5, X6, X7 are the
// Casimir invariants rho, sigma, tau.
struct DualVector {
    std::array<double, 7> x{};

    double rho() const { return x[4]; }
    double sigma() const { return x[5]; }
    double tau() const { return x[6]; }

    friend bool operator==(const DualVector&, const DualVector&) = default;
};

// The nine families of coadjoint orbits / irreducible representations, in a
// fixed order shared by OrbitClass and RepCase.
enum class CaseTag {
    Generic4D,
    Cone2D,
    TauZero4D,
    SigmaZero4D,
    RhoZero4D,
    WeylHeisenberg4D,
    QPlane2D,
    PPlane2D,
    Point0D,
};

inline constexpr std::array<CaseTag, 9> kAllCases = {
    CaseTag::Generic4D,   CaseTag::Cone2D,           CaseTag::TauZero4D,
    CaseTag::SigmaZero4D, CaseTag::RhoZero4D,        CaseTag::WeylHeisenberg4D,
    CaseTag::QPlane2D,    CaseTag::PPlane2D,         CaseTag::Point0D,
};

std::string_view to_string(CaseTag tag) noexcept;
// Throws Error(InvalidSpec) on an unknown name.
CaseTag case_from_string(std::string_view name);

namespace orbit {

struct Generic4D { double rho, sigma, tau; };
// Point on the cone rho^2 alpha^2 = gamma beta sigma tau, parametrised by
// rho and the slope zeta = rho / sigma.
struct Cone2D { double rho, zeta; };
struct TauZero4D { double rho, sigma; };
struct SigmaZero4D { double rho, tau; };
struct RhoZero4D { double sigma, tau; };
struct WeylHeisenberg4D { double rho; };
struct QPlane2D { double sigma; };
struct PPlane2D { double tau; };
struct Point0D { double c1, c2, c3, c4; };

}  // namespace orbit

// Alternative order matches CaseTag.
using OrbitClass = std::variant<orbit::Generic4D, orbit::Cone2D, orbit::TauZero4D,
                                orbit::SigmaZero4D, orbit::RhoZero4D, orbit::WeylHeisenberg4D,
                                orbit::QPlane2D, orbit::PPlane2D, orbit::Point0D>;

CaseTag tag_of(const OrbitClass& c);

// (rho, sigma, tau) of the class; the cone reports sigma = rho/zeta and
// tau = zeta alpha^2 rho / (gamma beta).
std::array<double, 3> casimirs(const OrbitClass& c, const ExtensionConstants& k);

inline constexpr double kDefaultZeroTol = 1e-12;

DualVector coadjoint_act(const GroupElement& g, const DualVector& f, const ExtensionConstants& k);

// Maps a dual point to its orbit family. Components with |.| < zero_tol count
// as zero; the cone is detected by |rho^2 alpha^2 - gamma beta sigma tau| <=
// zero_tol * max(1, rho^2 alpha^2). Throws Error(InconsistentCone) when the
// determinant test accepts the cone but the zeta cross-check does not, and
// Error(InvalidSpec) for zero_tol <= 0.
OrbitClass classify_orbit(const DualVector& f, const ExtensionConstants& k,
                          double zero_tol = kDefaultZeroTol);

int orbit_dimension(const OrbitClass& c);

}  // namespace ncqm
