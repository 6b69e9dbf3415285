#pragma once

#include <array>

namespace ncqm {

// Strictly positive constants of the triple central extension. The
// dimensional bookkeeping ([alpha] = 1/(pq), [beta] = 1/p^2,
// [gamma] = 1/q^2) is a documentation matter only; values are plain doubles.
struct ExtensionConstants {
    double alpha = 1.0;
    double beta = 0.5;
    double gamma = 0.5;

    // Throws Error(InvalidSpec) unless all three are finite and > 0.
    void validate() const;

    // Defaults for the general modules: alpha^2 != gamma*beta.
    static constexpr ExtensionConstants general() { return {1.0, 0.5, 0.5}; }
    // Defaults for the torus module, where alpha^2 == gamma*beta is forced.
    static constexpr ExtensionConstants unit() { return {1.0, 1.0, 1.0}; }

    friend bool operator==(const ExtensionConstants&, const ExtensionConstants&) = default;
};

// A point (theta, phi, psi, q1, q2, p1, p2) of the 7-dimensional group.
// theta, phi, psi are the central coordinates.
struct GroupElement {
    double theta = 0.0;
    double phi = 0.0;
    double psi = 0.0;
    double q1 = 0.0;
    double q2 = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;

    std::array<double, 7> coordinates() const { return {theta, phi, psi, q1, q2, p1, p2}; }
    static GroupElement from_coordinates(const std::array<double, 7>& x);

    bool is_finite() const;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// <q, p> = q1 p1 + q2 p2
constexpr double pairing(double q1, double q2, double p1, double p2) { return q1 * p1 + q2 * p2; }
// q ^ p = q1 p2 - q2 p1
constexpr double wedge(double q1, double q2, double p1, double p2) { return q1 * p2 - q2 * p1; }

GroupElement identity();
GroupElement compose(const GroupElement& g, const GroupElement& h, const ExtensionConstants& k);
GroupElement inverse(const GroupElement& g);

// The four noncentral coordinates. Under the algebra realisations the
// generators P1, P2, Q1, Q2 pair with q1, q2, p1, p2 respectively.
enum class Direction { q1, q2, p1, p2 };

inline constexpr std::array<Direction, 4> kAllDirections = {Direction::q1, Direction::q2,
                                                            Direction::p1, Direction::p2};

const char* to_string(Direction d) noexcept;

// Group element whose only nonzero coordinate is `amount` along `d`.
GroupElement translation(Direction d, double amount);

// Largest absolute coordinate difference.
double max_abs_difference(const GroupElement& a, const GroupElement& b);

}  // namespace ncqm
