#include "ncqm/group.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ncqm/error.hpp"

namespace ncqm {

void ExtensionConstants::validate() const {
    for (double v : {alpha, beta, gamma}) {
        if (!std::isfinite(v) || v <= 0.0) {
            throw Error(ErrorKind::InvalidSpec,
                        "extension constants must be finite and strictly positive (alpha=" +
                            std::to_string(alpha) + ", beta=" + std::to_string(beta) +
                            ", gamma=" + std::to_string(gamma) + ")");
        }
    }
}

GroupElement GroupElement::from_coordinates(const std::array<double, 7>& x) {
    return {x[0], x[1], x[2], x[3], x[4], x[5], x[6]};
}

bool GroupElement::is_finite() const {
    const auto x = coordinates();
    return std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); });
}

GroupElement identity() { return {}; }

GroupElement compose(const GroupElement& g, const GroupElement& h, const ExtensionConstants& k) {
    GroupElement out;
    out.theta = g.theta + h.theta +
                0.5 * k.alpha * (pairing(g.q1, g.q2, h.p1, h.p2) - pairing(g.p1, g.p2, h.q1, h.q2));
    out.phi = g.phi + h.phi + 0.5 * k.beta * wedge(g.p1, g.p2, h.p1, h.p2);
    out.psi = g.psi + h.psi + 0.5 * k.gamma * wedge(g.q1, g.q2, h.q1, h.q2);
    out.q1 = g.q1 + h.q1;
    out.q2 = g.q2 + h.q2;
    out.p1 = g.p1 + h.p1;
    out.p2 = g.p2 + h.p2;
    return out;
}

// Every cocycle term is bilinear and antisymmetric in (g, h), so it vanishes
// between g and its coordinate-wise negation.
GroupElement inverse(const GroupElement& g) {
    return {-g.theta, -g.phi, -g.psi, -g.q1, -g.q2, -g.p1, -g.p2};
}

const char* to_string(Direction d) noexcept {
    switch (d) {
        case Direction::q1: return "q1";
        case Direction::q2: return "q2";
        case Direction::p1: return "p1";
        case Direction::p2: return "p2";
    }
    return "?";
}

GroupElement translation(Direction d, double amount) {
    GroupElement g;
    switch (d) {
        case Direction::q1: g.q1 = amount; break;
        case Direction::q2: g.q2 = amount; break;
        case Direction::p1: g.p1 = amount; break;
        case Direction::p2: g.p2 = amount; break;
    }
    return g;
}

double max_abs_difference(const GroupElement& a, const GroupElement& b) {
    const auto x = a.coordinates();
    const auto y = b.coordinates();
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
    return worst;
}

}  // namespace ncqm
