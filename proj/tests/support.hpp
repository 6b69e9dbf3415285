#pragma once

// Shared generators and independent oracles for the unit tests.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "ncqm/group.hpp"
#include "ncqm/packet.hpp"

namespace testing {

using ncqm::cplx;
using ncqm::GaussianPacket;
using ncqm::GroupElement;

// Hand-rolled generator: a seeded engine plus the shapes the tests need.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    double nonzero(double lo, double hi) {
        const double v = real(lo, hi);
        return real(0.0, 1.0) < 0.5 ? -v : v;
    }

    GroupElement element(double range = 2.0) {
        return {real(-range, range), real(-range, range), real(-range, range), real(-range, range),
                real(-range, range), real(-range, range), real(-range, range)};
    }

    GaussianPacket packet(std::size_t dim) {
        auto f = GaussianPacket::unit(dim);
        f.amplitude = std::polar(real(0.5, 2.0), real(-3.0, 3.0));
        for (std::size_t j = 0; j < dim; ++j) {
            f.k[j] = real(-1.5, 1.5);
            f.c[j] = real(-1.5, 1.5);
            f.w[j] = real(0.6, 1.6);
        }
        return f;
    }

    std::vector<double> point(std::size_t dim, double range = 3.0) {
        std::vector<double> r(dim);
        for (double& x : r) x = real(-range, range);
        return r;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// Runs `body` on `n` generated cases; the case index is passed for messages.
template <class Body>
void for_all(int n, std::uint64_t seed, Body body) {
    Gen gen(seed);
    for (int i = 0; i < n; ++i) body(gen, i);
}

// Trapezoid rule on a uniform grid of `n` points per axis covering both
// packets out to 9 widths. Independent of the closed-form inner product.
inline cplx quadrature_inner(const GaussianPacket& f, const GaussianPacket& h, int n = 2048) {
    const std::size_t dim = f.dim;
    std::array<double, 2> lo{}, step{};
    for (std::size_t j = 0; j < dim; ++j) {
        const double a = std::min(f.c[j] - 9.0 * f.w[j], h.c[j] - 9.0 * h.w[j]);
        const double b = std::max(f.c[j] + 9.0 * f.w[j], h.c[j] + 9.0 * h.w[j]);
        lo[j] = a;
        step[j] = (b - a) / (n - 1);
    }
    auto weight = [n](int i) { return (i == 0 || i == n - 1) ? 0.5 : 1.0; };
    cplx sum{};
    if (dim == 1) {
        for (int i = 0; i < n; ++i) {
            const double r[1] = {lo[0] + i * step[0]};
            sum += weight(i) * std::conj(ncqm::eval_packet(f, r)) * ncqm::eval_packet(h, r);
        }
        return sum * step[0];
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double r[2] = {lo[0] + i * step[0], lo[1] + j * step[1]};
            sum += weight(i) * weight(j) * std::conj(ncqm::eval_packet(f, r)) * ncqm::eval_packet(h, r);
        }
    }
    return sum * step[0] * step[1];
}

// max |a(r) - b(r)| / max |b(r)| over points around b.
inline double pointwise_residual(const std::function<cplx(const std::vector<double>&)>& a,
                                 const std::function<cplx(const std::vector<double>&)>& b,
                                 const std::vector<std::vector<double>>& points) {
    double diff = 0.0, scale = 0.0;
    for (const auto& r : points) {
        const cplx vb = b(r);
        diff = std::max(diff, std::abs(a(r) - vb));
        scale = std::max(scale, std::abs(vb));
    }
    return scale > 0.0 ? diff / scale : diff;
}

inline double packet_residual(const GaussianPacket& a, const GaussianPacket& b, std::uint64_t seed = 7) {
    const auto pts = ncqm::sample_points(b, 20, seed);
    std::vector<std::vector<double>> points(pts.begin(), pts.end());
    return pointwise_residual([&](const std::vector<double>& r) { return ncqm::eval_packet(a, r); },
                              [&](const std::vector<double>& r) { return ncqm::eval_packet(b, r); }, points);
}

}  // namespace testing
