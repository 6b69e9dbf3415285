#include "ncqm/packet.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "ncqm/error.hpp"

namespace ncqm {

void GaussianPacket::validate() const {
    if (dim != 1 && dim != 2)
        throw Error(ErrorKind::InvalidSpec, "packet dim must be 1 or 2, got " + std::to_string(dim));
    if (!std::isfinite(amplitude.real()) || !std::isfinite(amplitude.imag()))
        throw Error(ErrorKind::InvalidSpec, "packet amplitude must be finite");
    for (std::size_t j = 0; j < dim; ++j) {
        if (!std::isfinite(k[j]) || !std::isfinite(c[j]))
            throw Error(ErrorKind::InvalidSpec, "packet k and c must be finite");
        if (!std::isfinite(w[j]) || w[j] <= 0.0)
            throw Error(ErrorKind::InvalidSpec, "packet widths must be finite and positive");
    }
}

GaussianPacket GaussianPacket::unit(std::size_t dim) {
    GaussianPacket f;
    f.dim = dim;
    return f;
}

cplx eval_packet(const GaussianPacket& f, std::span<const double> r) {
    if (r.size() != f.dim)
        throw Error(ErrorKind::DimMismatch, "eval_packet: point has " + std::to_string(r.size()) +
                                                " coordinates, packet has dim " + std::to_string(f.dim));
    double phase = 0.0;
    double expo = 0.0;
    for (std::size_t j = 0; j < f.dim; ++j) {
        phase += f.k[j] * r[j];
        const double d = r[j] - f.c[j];
        expo -= d * d / (2.0 * f.w[j] * f.w[j]);
    }
    return f.amplitude * std::polar(std::exp(expo), phase);
}

// Per axis: integral exp(-a r^2 + b r + c0) dr = sqrt(pi/a) exp(b^2/(4a) + c0)
// with complex b.
cplx inner_product(const GaussianPacket& f, const GaussianPacket& h) {
    if (f.dim != h.dim)
        throw Error(ErrorKind::DimMismatch, "inner_product: packets have different dims");
    cplx log_value{0.0, 0.0};
    double prefactor = 1.0;
    for (std::size_t j = 0; j < f.dim; ++j) {
        const double s1 = 1.0 / (f.w[j] * f.w[j]);
        const double s2 = 1.0 / (h.w[j] * h.w[j]);
        const double a = 0.5 * (s1 + s2);
        const cplx b{f.c[j] * s1 + h.c[j] * s2, h.k[j] - f.k[j]};
        const double c0 = -0.5 * (f.c[j] * f.c[j] * s1 + h.c[j] * h.c[j] * s2);
        log_value += b * b / (4.0 * a) + c0;
        prefactor *= std::sqrt(std::numbers::pi / a);
    }
    return std::conj(f.amplitude) * h.amplitude * prefactor * std::exp(log_value);
}

double squared_norm(const GaussianPacket& f) {
    double n = std::norm(f.amplitude);
    for (std::size_t j = 0; j < f.dim; ++j) n *= f.w[j] * std::sqrt(std::numbers::pi);
    return n;
}

double norm(const GaussianPacket& f) { return std::sqrt(squared_norm(f)); }

std::vector<Point> sample_points(const GaussianPacket& f, std::size_t n_random, std::uint64_t seed) {
    static constexpr std::array<double, 5> kLattice{-3.0, -1.5, 0.0, 1.5, 3.0};
    std::vector<Point> pts;
    if (f.dim == 1) {
        for (double u : kLattice) pts.push_back({f.c[0] + u * f.w[0]});
    } else {
        for (double u : kLattice)
            for (double v : kLattice) pts.push_back({f.c[0] + u * f.w[0], f.c[1] + v * f.w[1]});
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-2.0, 2.0);
    for (std::size_t n = 0; n < n_random; ++n) {
        Point p(f.dim);
        for (std::size_t j = 0; j < f.dim; ++j) p[j] = f.c[j] + unit(rng) * f.w[j];
        pts.push_back(std::move(p));
    }
    return pts;
}

}  // namespace ncqm
