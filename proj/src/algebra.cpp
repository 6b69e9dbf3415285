#include "ncqm/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ncqm/detail/overloaded.hpp"
#include "ncqm/error.hpp"

namespace ncqm {

using detail::overloaded;

namespace {

constexpr cplx I{0.0, 1.0};

void require_same_dim(std::size_t d1, std::size_t d2, const char* where) {
    if (d1 != d2)
        throw Error(ErrorKind::DimMismatch, std::string(where) + ": dimension " + std::to_string(d1) +
                                                " vs " + std::to_string(d2));
}

}  // namespace

AffineDiffOp AffineDiffOp::scalar(cplx value, std::size_t dim) {
    AffineDiffOp o;
    o.dim = dim;
    o.const_term = value;
    return o;
}

AffineDiffOp AffineDiffOp::position(std::size_t axis, cplx coeff, std::size_t dim) {
    AffineDiffOp o;
    o.dim = dim;
    o.a.at(axis) = coeff;
    return o;
}

AffineDiffOp AffineDiffOp::derivative(std::size_t axis, cplx coeff, std::size_t dim) {
    AffineDiffOp o;
    o.dim = dim;
    o.b.at(axis) = coeff;
    return o;
}

bool AffineDiffOp::is_scalar() const {
    const cplx zero{};
    return std::all_of(a.begin(), a.end(), [&](cplx v) { return v == zero; }) &&
           std::all_of(b.begin(), b.end(), [&](cplx v) { return v == zero; });
}

AffineDiffOp& AffineDiffOp::operator+=(const AffineDiffOp& o) {
    require_same_dim(dim, o.dim, "AffineDiffOp::operator+=");
    const_term += o.const_term;
    for (std::size_t j = 0; j < 2; ++j) {
        a[j] += o.a[j];
        b[j] += o.b[j];
    }
    return *this;
}

AffineDiffOp& AffineDiffOp::operator*=(cplx s) {
    const_term *= s;
    for (std::size_t j = 0; j < 2; ++j) {
        a[j] *= s;
        b[j] *= s;
    }
    return *this;
}

AffineDiffOp commutator(const AffineDiffOp& o1, const AffineDiffOp& o2) {
    require_same_dim(o1.dim, o2.dim, "commutator");
    cplx s{};
    for (std::size_t j = 0; j < o1.dim; ++j) s += o1.b[j] * o2.a[j] - o2.b[j] * o1.a[j];
    return AffineDiffOp::scalar(s, o1.dim);
}

cplx apply_op(const AffineDiffOp& o, const GaussianPacket& f, std::span<const double> r) {
    require_same_dim(o.dim, f.dim, "apply_op");
    const cplx value = eval_packet(f, r);
    cplx factor = o.const_term;
    for (std::size_t j = 0; j < f.dim; ++j) {
        const cplx log_derivative = I * f.k[j] - (r[j] - f.c[j]) / (f.w[j] * f.w[j]);
        factor += o.a[j] * r[j] + o.b[j] * log_derivative;
    }
    return factor * value;
}

const QuantumParams& PhysicalParams::quantum() const {
    if (!quantum_)
        throw Error(ErrorKind::RhoZero, "hbar, vartheta and calB are undefined at rho = 0");
    return *quantum_;
}

PhysicalParams physical_params(double rho, double sigma, double tau, const ExtensionConstants& k) {
    std::optional<QuantumParams> q;
    if (rho != 0.0) {
        const double ra = rho * k.alpha;
        QuantumParams p;
        p.hbar = 1.0 / ra;
        p.vartheta = -sigma * k.beta / (ra * ra);
        p.calB = -tau * k.gamma / (ra * ra);
        p.B = p.calB / p.hbar;
        q = p;
    }
    return PhysicalParams(q, -sigma * k.beta, -tau * k.gamma);
}

Generator generator_for(Direction d) {
    switch (d) {
        case Direction::q1: return Generator::P1;
        case Direction::q2: return Generator::P2;
        case Direction::p1: return Generator::Q1;
        case Direction::p2: return Generator::Q2;
    }
    return Generator::Q1;
}

const AffineDiffOp& GeneratorSet::operator[](Generator g) const {
    switch (g) {
        case Generator::Q1: return Q1;
        case Generator::Q2: return Q2;
        case Generator::P1: return P1;
        case Generator::P2: return P2;
    }
    return Q1;
}

namespace {

using Op = AffineDiffOp;

Op r_(std::size_t axis, cplx coeff, std::size_t dim) { return Op::position(axis, coeff, dim); }
Op d_(std::size_t axis, cplx coeff, std::size_t dim) { return Op::derivative(axis, coeff, dim); }
Op c_(cplx value, std::size_t dim) { return Op::scalar(value, dim); }

GeneratorSet gens(const rep::Generic4D& p, const ExtensionConstants& k, std::size_t) {
    const auto pp = physical_params(p.rho, p.sigma, p.tau, k);
    const double hb = pp.hbar();
    return {r_(0, 1.0, 2) + d_(1, I * pp.vartheta(), 2), r_(1, 1.0, 2), d_(0, -I * hb, 2),
            r_(0, -pp.calB() / hb, 2) + d_(1, -I * hb, 2)};
}

GeneratorSet gens(const rep::Cone2D& p, const ExtensionConstants& k, std::size_t) {
    const double sigma = p.rho / p.zeta;
    const double tau = p.zeta * k.alpha * k.alpha * p.rho / (k.gamma * k.beta);
    const auto pp = physical_params(p.rho, sigma, tau, k);
    const double hb = pp.hbar();
    const double vt = pp.vartheta();
    return {r_(0, -1.0, 1), d_(0, I * vt, 1), c_(hb * p.kappa, 1) + d_(0, I * hb, 1),
            c_(hb * p.delta, 1) + r_(0, hb / vt, 1)};
}

GeneratorSet gens(const rep::TauZero4D& p, const ExtensionConstants& k, std::size_t) {
    const auto pp = physical_params(p.rho, p.sigma, 0.0, k);
    const double hb = pp.hbar();
    return {r_(0, 1.0, 2) + d_(1, I * pp.vartheta(), 2), r_(1, 1.0, 2), d_(0, -I * hb, 2),
            d_(1, -I * hb, 2)};
}

GeneratorSet gens(const rep::SigmaZero4D& p, const ExtensionConstants& k, std::size_t) {
    const auto pp = physical_params(p.rho, 0.0, p.tau, k);
    const double hb = pp.hbar();
    return {r_(0, 1.0, 2), r_(1, 1.0, 2), d_(0, -I * hb, 2),
            r_(0, -pp.calB() / hb, 2) + d_(1, -I * hb, 2)};
}

GeneratorSet gens(const rep::WeylHeisenberg4D& p, const ExtensionConstants& k, std::size_t) {
    const double hb = physical_params(p.rho, 0.0, 0.0, k).hbar();
    return {r_(0, 1.0, 2), r_(1, 1.0, 2), d_(0, -I * hb, 2), d_(1, -I * hb, 2)};
}

GeneratorSet gens(const rep::RhoZero4D& p, const ExtensionConstants& k, std::size_t) {
    const auto pp = physical_params(0.0, p.sigma, p.tau, k);
    return {d_(1, I * pp.kappa1(), 2), r_(1, 1.0, 2), d_(0, -I, 2), r_(0, -pp.kappa2(), 2)};
}

GeneratorSet gens(const rep::PPlane2D& p, const ExtensionConstants& k, std::size_t) {
    const auto pp = physical_params(0.0, 0.0, p.tau, k);
    return {c_(p.c1, 1), c_(p.c2, 1), r_(0, pp.kappa2(), 1), d_(0, -I, 1)};
}

GeneratorSet gens(const rep::QPlane2D& p, const ExtensionConstants& k, std::size_t) {
    const auto pp = physical_params(0.0, p.sigma, 0.0, k);
    return {d_(0, I * pp.kappa1(), 1), r_(0, 1.0, 1), c_(p.c3, 1), c_(p.c4, 1)};
}

GeneratorSet gens(const rep::Point0D& p, const ExtensionConstants&, std::size_t dim) {
    return {c_(p.c1, dim), c_(p.c2, dim), c_(p.c3, dim), c_(p.c4, dim)};
}

}  // namespace

GeneratorSet build_generators(const RepSpec& spec, std::size_t point_dim) {
    if (spec.tag() == CaseTag::Point0D && point_dim != 1 && point_dim != 2)
        throw Error(ErrorKind::DimMismatch, "Point0D generators need point_dim 1 or 2");
    return std::visit([&](const auto& p) { return gens(p, spec.constants(), point_dim); },
                      spec.params());
}

GeneratorSet build_generators(const GaugeRep& rep) {
    const auto& k = rep.constants();
    const double l = rep.l(), m = rep.m(), D = rep.denominator();
    const double a = k.alpha, a2 = a * a, gb = k.gamma * k.beta;
    return {
        r_(0, 1.0, 2) + d_(1, -m * I * k.beta / a2, 2),
        r_(1, 1.0, 2) + d_(0, (1.0 - m) * I * k.beta / a2, 2),
        r_(1, k.gamma * a * (1.0 - l) / D, 2) + d_(0, -I / a * ((gb * (l + m - l * m) - a2) / D), 2),
        r_(0, l * k.gamma / a, 2) + d_(1, I * ((gb * l * (1.0 - m) - a2) / (a2 * a)), 2),
    };
}

GeneratorSet build_generators(const AnyRep& rep, std::size_t point_dim) {
    return std::visit(overloaded{[&](const RepSpec& s) { return build_generators(s, point_dim); },
                                 [](const GaugeRep& g) { return build_generators(g); }},
                      rep);
}

double generator_scale(const AnyRep& rep) {
    return std::visit(overloaded{[](const RepSpec& s) {
                                     const double rho = s.casimirs()[0];
                                     return rho != 0.0 ? rho * s.constants().alpha : 1.0;
                                 },
                                 [](const GaugeRep& g) { return g.constants().alpha; }},
                      rep);
}

double generator_check(const AnyRep& rep, Direction d, const GaussianPacket& f,
                       std::span<const double> r, double step, int sign) {
    if (!(step > 0.0)) throw Error(ErrorKind::InvalidSpec, "generator_check: step must be positive");
    const auto gs = build_generators(rep, f.dim);
    const auto& X = gs[generator_for(d)];

    const cplx forward = eval_packet(apply_rep(rep, translation(d, step), f), r);
    const cplx backward = eval_packet(apply_rep(rep, translation(d, -step), f), r);
    const cplx fd = (forward - backward) / (2.0 * step);

    const cplx lx = generator_scale(rep) * apply_op(X, f, r);
    const cplx predicted = I * static_cast<double>(sign) * lx;
    return std::abs(fd - predicted) / std::max(1.0, std::abs(lx));
}

}  // namespace ncqm
