#pragma once

#include <cmath>

#include "irrigen/phase/law.hpp"

namespace irrigen::phase::systems {

/// (sqrt(5) - 1) / 2, the most badly approximable rotation number.
inline constexpr double golden_fraction = 0.6180339887498949;

inline double frac(double x) { return x - std::floor(x); }

/// Circle rotation x <- x + alpha (mod 1). Lebesgue-preserving; ergodic and
/// uniquely ergodic for irrational alpha.
inline DynamicalLaw circle_rotation(double alpha) {
    return DynamicalLaw::map(
        1, [alpha](const Vec& x) { return Vec{frac(x[0] + alpha)}; },
        [](const Vec&) { return 1.0; });
}

/// Golden-ratio rotation: the default ergodic test map. Note the binary
/// doubling and tent maps are deliberately not offered here: in binary
/// floating point their orbits collapse to 0 after ~53 steps, which makes
/// them useless for Birkhoff checks at machine precision.
inline DynamicalLaw golden_rotation() { return circle_rotation(golden_fraction); }

/// Logistic map x <- r x (1 - x); chaotic and ergodic at r = 4.
inline DynamicalLaw logistic_map(double r = 4.0) {
    return DynamicalLaw::map(1, [r](const Vec& x) { return Vec{r * x[0] * (1.0 - x[0])}; });
}

/// Uniform scaling x <- c x with |det dS| = |c|^d. Contracting for |c| < 1.
inline DynamicalLaw scaling_map(double factor, std::size_t dim = 1) {
    return DynamicalLaw::map(
        dim,
        [factor, dim](const Vec& x) {
            Vec y(dim);
            for (std::size_t i = 0; i < dim; ++i) y[i] = factor * x[i];
            return y;
        },
        [factor, dim](const Vec&) { return std::pow(factor, double(dim)); });
}

/// Chirikov standard map on the (p, q) torus [0, 2pi)^2:
///   p' = p + K sin q,  q' = q + p'.
/// Area-preserving: det dS = 1 identically (registered analytically).
/// `wrap = false` drops the modulus, which keeps the transform smooth for
/// finite-difference Jacobian probes.
inline DynamicalLaw standard_map(double kick, bool wrap = true) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    auto transform = [kick, wrap](const Vec& x) {
        double p = x[0] + kick * std::sin(x[1]);
        double q = x[1] + p;
        if (wrap) {
            p -= two_pi * std::floor(p / two_pi);
            q -= two_pi * std::floor(q / two_pi);
        }
        return Vec{p, q};
    };
    return DynamicalLaw::map(2, transform, [](const Vec&) { return 1.0; });
}

/// Linear contraction flow xdot = -lambda x in d dimensions.
/// div E = -lambda d, registered analytically unless `analytic` is false
/// (then estimators must fall back to finite differences).
inline DynamicalLaw linear_contraction_flow(double lambda, double dt, std::size_t dim = 1,
                                            bool analytic = true) {
    auto field = [lambda, dim](const Vec& x) {
        Vec v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = -lambda * x[i];
        return v;
    };
    if (!analytic) return DynamicalLaw::flow(dim, field, dt);
    return DynamicalLaw::flow(dim, field, dt,
                              [lambda, dim](const Vec&) { return -lambda * double(dim); });
}

/// Cubic contraction flow xdot = -x^3 (one dimension), div E = -3 x^2.
inline DynamicalLaw cubic_contraction_flow(double dt, bool analytic = true) {
    auto field = [](const Vec& x) { return Vec{-x[0] * x[0] * x[0]}; };
    if (!analytic) return DynamicalLaw::flow(1, field, dt);
    return DynamicalLaw::flow(1, field, dt, [](const Vec& x) { return -3.0 * x[0] * x[0]; });
}

/// Rigid rotation field (-y, x): divergence-free, closed circular orbits.
inline DynamicalLaw rotation_field(double dt, bool analytic = true) {
    auto field = [](const Vec& x) { return Vec{-x[1], x[0]}; };
    if (!analytic) return DynamicalLaw::flow(2, field, dt);
    return DynamicalLaw::flow(2, field, dt, [](const Vec&) { return 0.0; });
}

/// Incompressible cellular flow from the stream function sin(x) sin(y):
///   E = (sin x cos y, -cos x sin y),  div E = 0.
/// A non-trivial target for the finite-difference divergence estimator.
inline DynamicalLaw cellular_flow(double dt, bool analytic = true) {
    auto field = [](const Vec& x) {
        return Vec{std::sin(x[0]) * std::cos(x[1]), -std::cos(x[0]) * std::sin(x[1])};
    };
    if (!analytic) return DynamicalLaw::flow(2, field, dt);
    return DynamicalLaw::flow(2, field, dt, [](const Vec&) { return 0.0; });
}

}  // namespace irrigen::phase::systems
