#pragma once

#include "ncqm/algebra.hpp"
#include "ncqm/group.hpp"

namespace ncqm {

// A_m = (-m B Q2, (1 - m) B Q1) built from the position operators of a
// generator set. The Q operators are kept so the components can be read
// back as linear combinations of them.
struct GaugePotential {
    double m;
    double B;
    AffineDiffOp A1;
    AffineDiffOp A2;
    AffineDiffOp Q1;
    AffineDiffOp Q2;
};

GaugePotential vector_potential(double m, double B, const GeneratorSet& gens);
GaugePotential landau_gauge(double B, const GeneratorSet& gens);
GaugePotential symmetric_gauge(double B, const GeneratorSet& gens);

// Coefficients (x, y) with A = x Q1 + y Q2. Throws Error(NonlinearPotential)
// if A has a component outside span{Q1, Q2}.
struct QLinearCoefficients {
    double on_q1;
    double on_q2;
};
QLinearCoefficients q_coefficients(const AffineDiffOp& A, const AffineDiffOp& Q1, const AffineDiffOp& Q2);

// B = d1 A2 - d2 A1, with "d_i of an operator linear in Q" meaning the
// coefficient of Q_i.
double formal_curl(const GaugePotential& a);

struct GaugeParamPair {
    double l;
    double m;
};

// l = alpha (alpha - sqrt(alpha^2 - gamma beta)) / (gamma beta), m = 1/2.
// Throws Error(ComplexRoot) if alpha^2 < gamma beta and
// Error(SingularParameter) if gamma beta l - alpha^2 vanishes (alpha^2 = gamma beta).
GaugeParamPair symmetric_rep_params(const ExtensionConstants& k);

}  // namespace ncqm
