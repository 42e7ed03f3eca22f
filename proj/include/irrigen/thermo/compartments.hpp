#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "irrigen/numerics.hpp"

namespace irrigen::thermo {

/// Compartment-wise continuum balance state. The i-th compartment carries a
/// mass m_i, density rho_i, volume V_i and a local velocity divergence; the
/// whole system carries a source term Xi, a total density and the divergence
/// of the barycentric velocity.
struct CompartmentSystem {
    std::vector<double> masses;        // m_i, kg
    std::vector<double> densities;     // rho_i, kg/m^3
    std::vector<double> volumes;       // V_i, m^3
    std::vector<double> div_velocity;  // div xdot_i, 1/s
    double source = 0.0;               // Xi, 1/s
    double total_density = 1.0;        // rho, kg/m^3
    double div_barycentric = 0.0;      // div xdot_B, 1/s
    double total_volume = 0.0;         // V = sum V_i, m^3
};

inline void validate(const CompartmentSystem& s) {
    const std::size_t n = s.masses.size();
    require(n > 0, "CompartmentSystem: no compartments");
    require(s.densities.size() == n && s.volumes.size() == n && s.div_velocity.size() == n,
            "CompartmentSystem: per-compartment vectors disagree in length");
    for (std::size_t i = 0; i < n; ++i) {
        require(s.masses[i] > 0.0 && std::isfinite(s.masses[i]),
                "CompartmentSystem: mass " + std::to_string(i) + " not strictly positive");
        require(s.densities[i] > 0.0 && std::isfinite(s.densities[i]),
                "CompartmentSystem: density " + std::to_string(i) + " not strictly positive");
        require(s.volumes[i] > 0.0 && std::isfinite(s.volumes[i]),
                "CompartmentSystem: volume " + std::to_string(i) + " not strictly positive");
        require(std::isfinite(s.div_velocity[i]), "CompartmentSystem: non-finite divergence");
    }
    require(s.total_density > 0.0 && std::isfinite(s.total_density),
            "CompartmentSystem: total density not strictly positive");
    require(std::isfinite(s.source) && std::isfinite(s.div_barycentric),
            "CompartmentSystem: non-finite source or barycentric divergence");
    const double volume_sum = kahan_sum(s.volumes);
    require(rel_diff(volume_sum, s.total_volume) < 1e-12,
            "CompartmentSystem: sum of compartment volumes differs from total volume");
}

/// Total mass sum m_i; a conserved quantity under source-free balanced flow.
inline double total_mass(const CompartmentSystem& s) {
    validate(s);
    double m = 0.0;
    for (double mi : s.masses) m += mi;
    return m;
}

/// One explicit-Euler step of the compartment balances
///   rho_i <- rho_i + dt (rho Xi - rho_i div xdot_i)
///   rho   <- rho   - dt  rho div xdot_B
/// with masses recomputed as rho_i V_i. A step that drives any density
/// non-positive is rejected.
inline CompartmentSystem step_compartments(const CompartmentSystem& s, double dt) {
    validate(s);
    require(dt > 0.0 && std::isfinite(dt), "step_compartments: dt must be positive");
    CompartmentSystem next = s;
    const std::size_t n = s.masses.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double rho_i =
            s.densities[i] + dt * (s.total_density * s.source - s.densities[i] * s.div_velocity[i]);
        if (!(rho_i > 0.0) || !std::isfinite(rho_i))
            throw std::domain_error("step_compartments: density of compartment " +
                                    std::to_string(i) + " driven to " + std::to_string(rho_i) +
                                    "; reduce dt");
        next.densities[i] = rho_i;
        next.masses[i] = rho_i * s.volumes[i];
    }
    const double rho = s.total_density - dt * s.total_density * s.div_barycentric;
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw std::domain_error("step_compartments: total density driven to " +
                                std::to_string(rho) + "; reduce dt");
    next.total_density = rho;
    return next;
}

}  // namespace irrigen::thermo
