#include "ncqm/gauge.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <cmath>
#include <string>

#include "ncqm/error.hpp"
#include "ncqm/representation.hpp"

namespace ncqm {

GaugePotential vector_potential(double m, double B, const GeneratorSet& gens) {
    return {m, B, cplx(-m * B) * gens.Q2, cplx((1.0 - m) * B) * gens.Q1, gens.Q1, gens.Q2};
}

GaugePotential landau_gauge(double B, const GeneratorSet& gens) { return vector_potential(1.0, B, gens); }

GaugePotential symmetric_gauge(double B, const GeneratorSet& gens) {
    return vector_potential(0.5, B, gens);
}

namespace {

// Coefficient vector (const, a1, a2, b1, b2).
std::array<cplx, 5> flatten(const AffineDiffOp& o) {
    return {o.const_term, o.a[0], o.a[1], o.b[0], o.b[1]};
}

}  // namespace

// Solve A = x Q1 + y Q2 on the five coefficient slots. A slot where one Q is
// nonzero and the other vanishes determines its coefficient by a single
// division, which keeps x and y exact for the realisations in this library;
// a 2x2 solve is the fallback.
QLinearCoefficients q_coefficients(const AffineDiffOp& A, const AffineDiffOp& Q1, const AffineDiffOp& Q2) {
    if (A.dim != Q1.dim || A.dim != Q2.dim)
        throw Error(ErrorKind::DimMismatch, "q_coefficients: operator dimensions differ");
    const auto a = flatten(A), u = flatten(Q1), v = flatten(Q2);
    const cplx zero{};

    std::optional<cplx> x, y;
    for (std::size_t s = 0; s < 5; ++s) {
        if (!x && u[s] != zero && v[s] == zero) x = a[s] / u[s];
        if (!y && v[s] != zero && u[s] == zero) y = a[s] / v[s];
    }
    if (!x || !y) {
        // Normal equations of the least-squares fit.
        cplx uu{}, uv{}, vv{}, ua{}, va{};
        for (std::size_t s = 0; s < 5; ++s) {
            uu += std::conj(u[s]) * u[s];
            uv += std::conj(u[s]) * v[s];
            vv += std::conj(v[s]) * v[s];
            ua += std::conj(u[s]) * a[s];
            va += std::conj(v[s]) * a[s];
        }
        const cplx det = uu * vv - uv * std::conj(uv);
        if (std::abs(det) < 1e-300)
            throw Error(ErrorKind::NonlinearPotential, "q_coefficients: Q1 and Q2 are linearly dependent");
        x = (vv * ua - uv * va) / det;
        y = (uu * va - std::conj(uv) * ua) / det;
    }

    double scale = 0.0, residual = 0.0;
    for (std::size_t s = 0; s < 5; ++s) {
        scale = std::max(scale, std::abs(a[s]));
        residual = std::max(residual, std::abs(a[s] - *x * u[s] - *y * v[s]));
    }
    const double tol = 1e-12 * std::max(1.0, scale);
    if (residual > tol || std::abs(x->imag()) > tol || std::abs(y->imag()) > tol)
        throw Error(ErrorKind::NonlinearPotential,
                    "potential component is not a real linear combination of Q1 and Q2");
    return {x->real(), y->real()};
}

double formal_curl(const GaugePotential& a) {
    const auto c1 = q_coefficients(a.A1, a.Q1, a.Q2);
    const auto c2 = q_coefficients(a.A2, a.Q1, a.Q2);
    return c2.on_q1 - c1.on_q2;
}

GaugeParamPair symmetric_rep_params(const ExtensionConstants& k) {
    k.validate();
    const double a2 = k.alpha * k.alpha;
    const double gb = k.gamma * k.beta;
    const double disc = a2 - gb;
    if (disc < -kSingularTol * std::max(1.0, a2))
        throw Error(ErrorKind::ComplexRoot,
                    "symmetric gauge needs alpha^2 >= gamma beta (alpha^2 - gamma beta = " +
                        std::to_string(disc) + ")");
    const double l = k.alpha * (k.alpha - std::sqrt(std::max(0.0, disc))) / gb;
    if (std::abs(gb * l - a2) < kSingularTol * std::max(1.0, a2))
        throw Error(ErrorKind::SingularParameter,
                    "symmetric gauge parameter l makes gamma beta l - alpha^2 vanish (alpha^2 = gamma beta)");
    return {l, 0.5};
}

}  // namespace ncqm
