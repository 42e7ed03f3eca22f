#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "irrigen/variational/family.hpp"

namespace irrigen::variational {

/// Thermodynamic action A = integral L dt, trapezoidal over a uniformly
/// sampled Lagrangian series.
inline double action(std::span<const double> lagrangian_series, double dt) {
    require(dt > 0.0 && std::isfinite(dt), "action: dt must be positive");
    require(lagrangian_series.size() >= 2, "action: need at least 2 samples");
    require(all_finite(lagrangian_series), "action: non-finite Lagrangian sample");
    double acc = 0.0;
    for (double v : lagrangian_series) acc += v;
    acc -= 0.5 * (lagrangian_series.front() + lagrangian_series.back());
    return acc * dt;
}

struct StationarityReport {
    double max_violation;   // max over probes of dS_irr(theta') - dS_irr(theta)
    double gradient_norm;   // finite-difference gradient magnitude
    bool on_boundary;       // some probes were one-sided
};

/// Probe delta(dS_irr) >= 0 numerically: evaluate the family at
/// theta +- fd_step e_k. At a true maximum no perturbation may raise dS_irr
/// beyond the second-order tolerance c * fd_step^2 (curvature-dependent c).
/// Probes falling outside the bounds degrade to one-sided checks and set the
/// boundary flag.
inline StationarityReport stationarity_check(const StateFamily& family,
                                             std::span<const double> theta, double fd_step) {
    require(fd_step > 0.0 && std::isfinite(fd_step), "stationarity_check: fd_step must be > 0");
    const std::size_t n = family.dim();
    require(theta.size() == n, "stationarity_check: theta dimension mismatch");
    const auto& bounds = family.bounds();
    const double base = family(theta);

    StationarityReport report{-std::numeric_limits<double>::infinity(), 0.0, false};
    double grad_sq = 0.0;
    std::vector<double> probe(theta.begin(), theta.end());
    for (std::size_t k = 0; k < n; ++k) {
        const double center = probe[k];
        const bool can_up = center + fd_step <= bounds[k].hi;
        const bool can_down = center - fd_step >= bounds[k].lo;
        if (!can_up || !can_down) report.on_boundary = true;

        double up = base, down = base;
        if (can_up) {
            probe[k] = center + fd_step;
            up = family(probe);
            report.max_violation = std::max(report.max_violation, up - base);
        }
        if (can_down) {
            probe[k] = center - fd_step;
            down = family(probe);
            report.max_violation = std::max(report.max_violation, down - base);
        }
        probe[k] = center;

        double slope = 0.0;
        if (can_up && can_down) slope = (up - down) / (2.0 * fd_step);
        else if (can_up) slope = (up - base) / fd_step;
        else if (can_down) slope = (base - down) / fd_step;
        grad_sq += slope * slope;
    }
    if (!std::isfinite(report.max_violation)) report.max_violation = 0.0;  // no feasible probe
    report.gradient_norm = std::sqrt(grad_sq);
    return report;
}

struct LeastActionReport {
    double action_at_star;    // A(theta*) for the constant-in-time series
    double min_probe_action;  // smallest action among probe perturbations
    bool minimal;             // A(theta*) <= every probe action
    std::size_t probes;
};

/// Least-action counterpart of the maximum-entropy-generation search: with
/// T_ref constant, L(t) = -T_ref dS_irr(theta) is constant in time, so the
/// argmax of dS_irr must be the argmin of A = integral L dt. Builds the
/// series over [0, horizon] with step dt and compares A(theta*) against
/// per-axis probe perturbations.
inline LeastActionReport least_action_check(const StateFamily& family,
                                            std::span<const double> theta_star, double t_ref,
                                            double horizon, double dt,
                                            double probe_step = 1e-4) {
    require(t_ref > 0.0 && std::isfinite(t_ref), "least_action_check: t_ref must be positive");
    require(horizon > 0.0 && dt > 0.0 && dt <= horizon,
            "least_action_check: need 0 < dt <= horizon");
    require(probe_step > 0.0, "least_action_check: probe_step must be positive");
    const std::size_t n = family.dim();
    require(theta_star.size() == n, "least_action_check: theta dimension mismatch");

    const auto samples = static_cast<std::size_t>(std::floor(horizon / dt + 1e-9)) + 1;
    auto action_of = [&](std::span<const double> theta) {
        const std::vector<double> series(samples, -t_ref * family(theta));
        return action(series, dt);
    };

    LeastActionReport report{};
    report.action_at_star = action_of(theta_star);
    report.min_probe_action = std::numeric_limits<double>::infinity();
    const auto& bounds = family.bounds();
    std::vector<double> probe(theta_star.begin(), theta_star.end());
    for (std::size_t k = 0; k < n; ++k) {
        const double center = probe[k];
        for (const double direction : {+1.0, -1.0}) {
            const double moved = center + direction * probe_step;
            if (moved < bounds[k].lo || moved > bounds[k].hi) continue;
            probe[k] = moved;
            report.min_probe_action = std::min(report.min_probe_action, action_of(probe));
            ++report.probes;
        }
        probe[k] = center;
    }
    report.minimal = report.probes == 0 || report.action_at_star <= report.min_probe_action;
    return report;
}

}  // namespace irrigen::variational
