#pragma once

#include <cmath>

#include "irrigen/phase/ensemble.hpp"
#include "irrigen/thermo/state.hpp"

namespace irrigen::phase {

/// div E at a point: the registered analytic rule when available, otherwise
/// central finite differences with step `fd_step` per coordinate. Defined for
/// flows only; phase-volume change of a map goes through contraction_rate_map.
inline double divergence(const DynamicalLaw& law, const PhasePoint& p, double fd_step = 1e-5) {
    require(p.dim() == law.dim, "divergence: point dimension differs from law dimension");
    if (law.kind != LawKind::flow)
        throw std::invalid_argument(
            "divergence: law is a discrete map; use contraction_rate_map instead");
    if (law.has_divergence()) {
        const double value = law.divergence(p.coords);
        require(std::isfinite(value), "divergence: analytic divergence not finite at point");
        return value;
    }
    require(fd_step > 0.0, "divergence: fd_step must be positive");
    double acc = 0.0;
    Vec probe = p.coords;
    for (std::size_t k = 0; k < law.dim; ++k) {
        const double x0 = probe[k];
        probe[k] = x0 + fd_step;
        const Vec plus = law.transform(probe);
        probe[k] = x0 - fd_step;
        const Vec minus = law.transform(probe);
        probe[k] = x0;
        require(plus.size() == law.dim && minus.size() == law.dim &&
                    std::isfinite(plus[k]) && std::isfinite(minus[k]),
                "divergence: vector field undefined at probe point");
        acc += (plus[k] - minus[k]) / (2.0 * fd_step);
    }
    return acc;
}

/// Phase-space entropy production sigma_entr = -k_B < div E >_mu for a flow.
/// Non-negative for contracting dynamics; zero only at equilibrium
/// (divergence-free field).
inline double entropy_production(const DynamicalLaw& law, const EnsembleMeasure& mu,
                                 const thermo::PhysicalConstants& constants,
                                 const ExecutionPolicy& policy = {}) {
    require(law.kind == LawKind::flow, "entropy_production: law must be a flow");
    return -constants.k_b *
           ensemble_average(mu, [&](const PhasePoint& p) { return divergence(law, p); }, policy);
}

struct ContractionReport {
    double rate;           // -k_B < ln |det dS| >
    std::size_t rejected;  // samples skipped for singular Jacobian
    bool expanding;        // rate < 0: the map expands phase volume on average
};

namespace detail {

inline double map_jacobian_det(const DynamicalLaw& law, const Vec& x, double fd_step) {
    if (law.has_jacobian_det()) return law.jacobian_det(x);
    const std::size_t d = law.dim;
    std::vector<double> jac(d * d);
    Vec probe = x;
    for (std::size_t k = 0; k < d; ++k) {
        const double x0 = probe[k];
        probe[k] = x0 + fd_step;
        const Vec plus = law.transform(probe);
        probe[k] = x0 - fd_step;
        const Vec minus = law.transform(probe);
        probe[k] = x0;
        for (std::size_t r = 0; r < d; ++r) jac[r * d + k] = (plus[r] - minus[r]) / (2.0 * fd_step);
    }
    return det_destructive(jac, d);
}

}  // namespace detail

/// Discrete-time analog of the phase-space contraction rate: per-step volume
/// contraction -k_B < ln |det dS| > under the measure. Samples with a
/// singular Jacobian are rejected and the remaining weight renormalized.
inline ContractionReport contraction_rate_map_report(const DynamicalLaw& law,
                                                     const EnsembleMeasure& mu,
                                                     const thermo::PhysicalConstants& constants,
                                                     double fd_step = 1e-5,
                                                     const ExecutionPolicy& policy = {}) {
    require(law.kind == LawKind::map, "contraction_rate_map: law must be a discrete map");
    require(mu.dim() == law.dim, "contraction_rate_map: dimension mismatch");
    const auto& samples = mu.samples();
    const auto& weights = mu.weights();

    struct Acc {
        double weighted_logdet = 0.0;
        double kept_weight = 0.0;
        std::size_t rejected = 0;
    };
    const Acc total = chunked_reduce<Acc>(
        mu.size(), Acc{},
        [&](Acc& acc, std::size_t k) {
            const double det = detail::map_jacobian_det(law, samples[k].coords, fd_step);
            if (det == 0.0 || !std::isfinite(det)) {
                ++acc.rejected;
                return;
            }
            acc.weighted_logdet += weights[k] * std::log(std::fabs(det));
            acc.kept_weight += weights[k];
        },
        [](Acc& acc, const Acc& p) {
            acc.weighted_logdet += p.weighted_logdet;
            acc.kept_weight += p.kept_weight;
            acc.rejected += p.rejected;
        },
        policy);

    if (total.kept_weight <= 0.0)
        throw std::domain_error("contraction_rate_map: every sample has a singular Jacobian");
    const double rate = -constants.k_b * (total.weighted_logdet / total.kept_weight);
    return ContractionReport{rate, total.rejected, rate < 0.0};
}

inline double contraction_rate_map(const DynamicalLaw& law, const EnsembleMeasure& mu,
                                   const thermo::PhysicalConstants& constants,
                                   double fd_step = 1e-5, const ExecutionPolicy& policy = {}) {
    return contraction_rate_map_report(law, mu, constants, fd_step, policy).rate;
}

/// Statistical entropy generation dS_irr = sigma_entr / m_dot
/// = -(k_B/m_dot) < div E >_mu, the bridge between the phase-space estimator
/// and the engineering balance.
inline double entropy_generation_statistical(const DynamicalLaw& law, const EnsembleMeasure& mu,
                                             const thermo::PhysicalConstants& constants,
                                             double m_dot, const ExecutionPolicy& policy = {}) {
    require(m_dot > 0.0 && std::isfinite(m_dot),
            "entropy_generation_statistical: m_dot must be positive");
    return entropy_production(law, mu, constants, policy) / m_dot;
}

}  // namespace irrigen::phase
