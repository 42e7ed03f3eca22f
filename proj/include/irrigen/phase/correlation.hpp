#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "irrigen/phase/trajectory.hpp"

namespace irrigen::phase {

struct OnsagerEstimate {
    double value;
    double mean_i = 0.0;        // pooled channel means (should be ~0 for
    double mean_j = 0.0;        // mean-removed stationary observables)
    bool drift_warning = false; // first/second-half means differ markedly
    std::size_t lag_max = 0;
};

/// Equilibrium time-correlation estimate of the Onsager coefficient
///   L_ij = 1/2 integral_{-inf}^{inf} < sigma_i(S_t sigma) sigma_j(sigma) > dt
/// discretized as the two-sided lag sum
///   1/2 dt [ C_ij(0) + sum_{k=1}^{K} (C_ij(k) + C_ji(k)) ]
/// where C_ij(k) is the ensemble- and time-averaged cross-correlation at lag
/// k and dt the trajectory sampling interval. Exactly symmetric under i<->j.
/// Stationarity (mean-removed observables, zero external force) is the
/// caller's responsibility; a mean-drift heuristic only raises a warning.
inline OnsagerEstimate onsager_estimate_report(std::span<const Trajectory> trajectories,
                                               const Observable& obs_i, const Observable& obs_j,
                                               std::size_t lag_max) {
    require(!trajectories.empty(), "onsager_estimate: need at least one trajectory");
    const double dt = trajectories.front().step;
    for (const auto& traj : trajectories) {
        require(traj.step == dt, "onsager_estimate: trajectories have mixed sampling intervals");
        if (traj.size() < lag_max + 1)
            throw std::invalid_argument("onsager_estimate: trajectory of length " +
                                        std::to_string(traj.size()) +
                                        " too short for lag_max " + std::to_string(lag_max));
    }

    std::vector<std::vector<double>> a_series, b_series;
    a_series.reserve(trajectories.size());
    b_series.reserve(trajectories.size());
    for (const auto& traj : trajectories) {
        std::vector<double> a(traj.size()), b(traj.size());
        for (std::size_t s = 0; s < traj.size(); ++s) {
            a[s] = obs_i(traj.points[s]);
            b[s] = obs_j(traj.points[s]);
        }
        a_series.push_back(std::move(a));
        b_series.push_back(std::move(b));
    }

    // Pooled cross-correlations; forward lag applies to the first channel.
    auto correlation = [&](const std::vector<std::vector<double>>& lead,
                           const std::vector<std::vector<double>>& lag, std::size_t k) {
        double acc = 0.0;
        std::size_t count = 0;
        for (std::size_t m = 0; m < lead.size(); ++m) {
            const auto& x = lead[m];
            const auto& y = lag[m];
            for (std::size_t s = 0; s + k < x.size(); ++s) acc += x[s + k] * y[s];
            count += x.size() - k;
        }
        return acc / double(count);
    };

    double sum = correlation(a_series, b_series, 0);
    for (std::size_t k = 1; k <= lag_max; ++k)
        sum += correlation(a_series, b_series, k) + correlation(b_series, a_series, k);

    OnsagerEstimate est;
    est.value = 0.5 * dt * sum;
    est.lag_max = lag_max;

    auto pooled_drift = [&](const std::vector<std::vector<double>>& series, double& mean_out) {
        double m1 = 0.0, m2 = 0.0, sq = 0.0, all = 0.0;
        std::size_t n1 = 0, n2 = 0, n = 0;
        for (const auto& x : series) {
            const std::size_t half = x.size() / 2;
            for (std::size_t s = 0; s < x.size(); ++s) {
                all += x[s];
                sq += x[s] * x[s];
                ++n;
                if (s < half) {
                    m1 += x[s];
                    ++n1;
                } else {
                    m2 += x[s];
                    ++n2;
                }
            }
        }
        mean_out = all / double(n);
        if (n1 == 0 || n2 == 0) return false;
        const double var = std::max(sq / double(n) - mean_out * mean_out, 0.0);
        const double sd = std::sqrt(var);
        return std::fabs(m1 / double(n1) - m2 / double(n2)) > 0.5 * std::max(sd, 1e-300);
    };
    bool drift_i = pooled_drift(a_series, est.mean_i);
    bool drift_j = pooled_drift(b_series, est.mean_j);
    est.drift_warning = drift_i || drift_j;
    return est;
}

inline double onsager_estimate(std::span<const Trajectory> trajectories, const Observable& obs_i,
                               const Observable& obs_j, std::size_t lag_max) {
    return onsager_estimate_report(trajectories, obs_i, obs_j, lag_max).value;
}

}  // namespace irrigen::phase
