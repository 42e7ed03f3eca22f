#pragma once

#include <span>
#include <vector>

#include "irrigen/numerics.hpp"

namespace irrigen::thermo {

/// Regular rectangular grid over (t, T, V). Axes are strictly increasing
/// with at least two points each. Field values are stored row-major as
/// values[(it * nT + iT) * nV + iV].
struct Grid3 {
    std::vector<double> time;         // s
    std::vector<double> temperature;  // K
    std::vector<double> volume;       // m^3
};

/// Trapezoidal triple integral of a scalar field over the grid,
/// integral dt integral dT integral dV f(t, T, V). Applied to the Lagrangian
/// density it yields the global Lagrangian; applied to the dissipative
/// potential it yields the lost work.
inline double integrate_density(const Grid3& grid, std::span<const double> values) {
    const auto wt = trapezoid_weights(grid.time, "t");
    const auto wT = trapezoid_weights(grid.temperature, "T");
    const auto wV = trapezoid_weights(grid.volume, "V");
    const std::size_t nt = wt.size(), nT = wT.size(), nV = wV.size();
    require(values.size() == nt * nT * nV,
            "integrate_density: field has " + std::to_string(values.size()) +
                " values, grid has " + std::to_string(nt * nT * nV) + " nodes");
    require(all_finite(values), "integrate_density: field has non-finite values");
    double acc = 0.0;
    for (std::size_t it = 0; it < nt; ++it) {
        double slab = 0.0;
        for (std::size_t iT = 0; iT < nT; ++iT) {
            double line = 0.0;
            const std::size_t base = (it * nT + iT) * nV;
            for (std::size_t iV = 0; iV < nV; ++iV) line += wV[iV] * values[base + iV];
            slab += wT[iT] * line;
        }
        acc += wt[it] * slab;
    }
    return acc;
}

}  // namespace irrigen::thermo
