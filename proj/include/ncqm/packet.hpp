#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ncqm {

using cplx = std::complex<double>;

// f(r) = amplitude * exp(i k.r) * exp(-sum_j (r_j - c_j)^2 / (2 w_j^2)) on
// R^dim, dim in {1, 2}. Unused trailing axes are kept at k=c=0, w=1.
//
// Every representation in this library acts on f by a constant phase, an
// r-linear phase and a translation of the argument, so this family is closed
// under all of them and every action is exact arithmetic on the parameters.
struct GaussianPacket {
    std::size_t dim = 2;
    cplx amplitude{1.0, 0.0};
    std::array<double, 2> k{0.0, 0.0};
    std::array<double, 2> c{0.0, 0.0};
    std::array<double, 2> w{1.0, 1.0};

    // Throws Error(InvalidSpec) on dim outside {1,2}, non-positive widths or
    // non-finite fields.
    void validate() const;

    static GaussianPacket unit(std::size_t dim);
};

// Exact pointwise value. Throws Error(DimMismatch) when r.size() != f.dim.
cplx eval_packet(const GaussianPacket& f, std::span<const double> r);

// Closed-form L^2 pairing <f, h> = integral conj(f) h. Throws DimMismatch.
cplx inner_product(const GaussianPacket& f, const GaussianPacket& h);

// |amplitude|^2 * prod_j w_j sqrt(pi)
double squared_norm(const GaussianPacket& f);
double norm(const GaussianPacket& f);

using Point = std::vector<double>;

// The lattice {-3,-1.5,0,1.5,3}^dim scaled by the widths around the packet
// centre, followed by n_random points drawn uniformly from centre +- 2w with
// a generator seeded by `seed`.
std::vector<Point> sample_points(const GaussianPacket& f, std::size_t n_random, std::uint64_t seed);

}  // namespace ncqm
