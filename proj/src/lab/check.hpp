#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "ncqm/group.hpp"
#include "ncqm/lab.hpp"
#include "ncqm/packet.hpp"

namespace ncqm::lab::detail {

// Running maximum of one residual against its tolerance. The first
// violating sample is kept as a replay record.
class Check {
public:
    Check(std::string name, double tolerance, std::uint64_t seed)
        : name_(std::move(name)), tolerance_(tolerance), seed_(seed) {}

    template <class Context>
    void record(double residual, Context&& context) {
        ++count_;
        if (!(residual <= max_residual_)) max_residual_ = residual;
        if (!(residual <= tolerance_) && !failure_) failure_ = context();
    }

    bool pass() const { return !failure_; }
    std::uint64_t seed() const { return seed_; }

    json to_json() const {
        json j{{"name", name_},       {"pass", pass()},   {"max_residual", max_residual_},
               {"tolerance", tolerance_}, {"count", count_}, {"sub_seed", seed_}};
        if (failure_) j["failure"] = *failure_;
        return j;
    }

private:
    std::string name_;
    double tolerance_;
    std::uint64_t seed_;
    double max_residual_ = 0.0;
    std::size_t count_ = 0;
    std::optional<json> failure_;
};

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline GroupElement random_element(std::mt19937_64& rng, double range = 2.0) {
    std::array<double, 7> x{};
    for (double& v : x) v = uniform(rng, -range, range);
    return GroupElement::from_coordinates(x);
}

inline GaussianPacket random_packet(std::mt19937_64& rng, std::size_t dim) {
    GaussianPacket f = GaussianPacket::unit(dim);
    f.amplitude = std::polar(uniform(rng, 0.5, 2.0), uniform(rng, -3.14, 3.14));
    for (std::size_t j = 0; j < dim; ++j) {
        f.k[j] = uniform(rng, -1.5, 1.5);
        f.c[j] = uniform(rng, -1.5, 1.5);
        f.w[j] = uniform(rng, 0.6, 1.6);
    }
    return f;
}

inline json to_json(const GroupElement& g) {
    return json::array({g.theta, g.phi, g.psi, g.q1, g.q2, g.p1, g.p2});
}

inline json to_json(const GaussianPacket& f) {
    json j{{"dim", f.dim}, {"amplitude", {f.amplitude.real(), f.amplitude.imag()}}};
    j["k"] = json::array();
    j["c"] = json::array();
    j["w"] = json::array();
    for (std::size_t i = 0; i < f.dim; ++i) {
        j["k"].push_back(f.k[i]);
        j["c"].push_back(f.c[i]);
        j["w"].push_back(f.w[i]);
    }
    return j;
}

// max_p |a(p) - b(p)| / max_p |b(p)| over points sampled around b.
inline double packet_residual(const GaussianPacket& a, const GaussianPacket& b, std::uint64_t seed) {
    double diff = 0.0, scale = 0.0;
    for (const auto& p : sample_points(b, 10, seed)) {
        const cplx vb = eval_packet(b, p);
        diff = std::max(diff, std::abs(eval_packet(a, p) - vb));
        scale = std::max(scale, std::abs(vb));
    }
    return scale > 0.0 ? diff / scale : diff;
}

}  // namespace ncqm::lab::detail
