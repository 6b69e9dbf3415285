#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>

#include "ncqm/group.hpp"
#include "ncqm/packet.hpp"
#include "ncqm/representation.hpp"

namespace ncqm {

// O = const_term * I + sum_j a_j r_j + sum_j b_j d/dr_j on functions of
// `dim` variables. The commutator of two such operators is always a scalar.
struct AffineDiffOp {
    std::size_t dim = 2;
    cplx const_term{0.0, 0.0};
    std::array<cplx, 2> a{};
    std::array<cplx, 2> b{};

    static AffineDiffOp scalar(cplx value, std::size_t dim);
    static AffineDiffOp position(std::size_t axis, cplx coeff, std::size_t dim);
    static AffineDiffOp derivative(std::size_t axis, cplx coeff, std::size_t dim);

    bool is_scalar() const;

    AffineDiffOp& operator+=(const AffineDiffOp& o);
    AffineDiffOp& operator*=(cplx s);
    friend AffineDiffOp operator+(AffineDiffOp x, const AffineDiffOp& y) { return x += y; }
    friend AffineDiffOp operator*(cplx s, AffineDiffOp x) { return x *= s; }

    friend bool operator==(const AffineDiffOp&, const AffineDiffOp&) = default;
};

// [o1, o2] = sum_j (b_j a'_j - b'_j a_j) I. Throws Error(DimMismatch).
AffineDiffOp commutator(const AffineDiffOp& o1, const AffineDiffOp& o2);

// (O f)(r), using d_j f = (i k_j - (r_j - c_j)/w_j^2) f. Throws DimMismatch.
cplx apply_op(const AffineDiffOp& o, const GaussianPacket& f, std::span<const double> r);

// hbar = 1/(rho alpha), vartheta = -sigma beta/(rho alpha)^2,
// calB = -tau gamma/(rho alpha)^2, B = calB/hbar.
struct QuantumParams {
    double hbar;
    double vartheta;
    double calB;
    double B;
};

class PhysicalParams {
public:
    PhysicalParams(std::optional<QuantumParams> quantum, double kappa1, double kappa2)
        : quantum_(quantum), kappa1_(kappa1), kappa2_(kappa2) {}

    bool has_quantum() const { return quantum_.has_value(); }
    // These throw Error(RhoZero) when built with rho = 0.
    const QuantumParams& quantum() const;
    double hbar() const { return quantum().hbar; }
    double vartheta() const { return quantum().vartheta; }
    double calB() const { return quantum().calB; }
    double B() const { return quantum().B; }

    // kappa1 = -sigma beta, kappa2 = -tau gamma; defined for every (sigma, tau).
    double kappa1() const { return kappa1_; }
    double kappa2() const { return kappa2_; }

private:
    std::optional<QuantumParams> quantum_;
    double kappa1_;
    double kappa2_;
};

PhysicalParams physical_params(double rho, double sigma, double tau, const ExtensionConstants& k);

enum class Generator { Q1, Q2, P1, P2 };

// q1 -> P1, q2 -> P2, p1 -> Q1, p2 -> Q2.
Generator generator_for(Direction d);

struct GeneratorSet {
    AffineDiffOp Q1, Q2, P1, P2;

    const AffineDiffOp& operator[](Generator g) const;
};

// Self-adjoint realisation of the Lie algebra for the family. Point0D has no
// carrier of its own; its scalars are built on functions of `point_dim`
// variables.
GeneratorSet build_generators(const RepSpec& spec, std::size_t point_dim = 2);
GeneratorSet build_generators(const GaugeRep& rep);
GeneratorSet build_generators(const AnyRep& rep, std::size_t point_dim = 2);

// d/dt U(t e_j) f at t = 0 equals i * sign * lambda * (X_j f) with
// lambda = rho alpha (= 1/hbar) for the families with rho != 0, alpha for the
// (l, m) family, and 1 otherwise.
double generator_scale(const AnyRep& rep);

// Frozen once: +1 is the sign under which the Generic4D realisation matches
// its group formula.
inline constexpr int kGeneratorSign = +1;

// |central difference - i sign lambda (X f)(r)| / max(1, |lambda (X f)(r)|)
// with central difference ((U(t e)f)(r) - (U(-t e)f)(r)) / (2t).
double generator_check(const AnyRep& rep, Direction d, const GaussianPacket& f,
                       std::span<const double> r, double step, int sign = kGeneratorSign);

}  // namespace ncqm
