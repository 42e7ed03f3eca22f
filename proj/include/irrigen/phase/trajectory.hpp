#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "irrigen/phase/law.hpp"

namespace irrigen::phase {

/// A uniformly sampled orbit segment. `truncated` marks an orbit that left
/// the finite range before reaching the requested length; the stored points
/// are the finite prefix.
struct Trajectory {
    std::vector<PhasePoint> points;
    double step = 1.0;  // time between samples, s (1 for maps)
    bool truncated = false;

    std::size_t size() const { return points.size(); }
    const PhasePoint& front() const { return points.front(); }
    const PhasePoint& back() const { return points.back(); }
};

/// Iterate the law `steps` times from `start`. Deterministic: identical
/// inputs give bitwise-identical trajectories. Divergence to non-finite
/// values truncates the trajectory and sets the flag.
inline Trajectory evolve(const DynamicalLaw& law, const PhasePoint& start, std::size_t steps) {
    require(start.dim() == law.dim, "evolve: start point dimension differs from law dimension");
    Trajectory traj;
    traj.step = law.sample_interval();
    traj.points.reserve(steps + 1);
    traj.points.push_back(start);
    Vec x = start.coords;
    for (std::size_t j = 0; j < steps; ++j) {
        x = law.step(x);
        if (!all_finite(x)) {
            traj.truncated = true;
            break;
        }
        traj.points.emplace_back(x);
    }
    return traj;
}

/// True iff the endpoints coincide within `tol` in the max norm.
inline bool is_cycle(const Trajectory& traj, double tol) {
    require(traj.size() >= 2, "is_cycle: trajectory needs at least 2 points");
    require(tol >= 0.0, "is_cycle: tolerance must be non-negative");
    const Vec& a = traj.front().coords;
    const Vec& b = traj.back().coords;
    double gap = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::fabs(a[i] - b[i]));
    return gap < tol;
}

}  // namespace irrigen::phase
