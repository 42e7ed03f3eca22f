#pragma once

#include <cmath>
#include <optional>

#include "irrigen/numerics.hpp"

namespace irrigen::exergy {

/// The eight scalar terms of the engineering entropy-generation balance for
/// an open system, plus the lower-reservoir temperature and an optional mass
/// flow (used only by the phase-space bridge).
struct ProcessBalance {
    double q_r = 0.0;      // heat from source, J
    double t_r = 300.0;    // source temperature, K
    double t_a = 300.0;    // ambient temperature, K
    double delta_h = 0.0;  // enthalpy change, J
    double delta_s = 0.0;  // entropy change, J/K
    double delta_ek = 0.0; // kinetic-energy change, J
    double delta_eg = 0.0; // gravitational-energy change, J
    double w = 0.0;        // work, J
    double t_ref = 300.0;  // lower-reservoir temperature, K
    std::optional<double> m_dot = std::nullopt;  // kg/s
};

inline void validate(const ProcessBalance& b) {
    require(b.t_r > 0.0 && std::isfinite(b.t_r), "ProcessBalance: t_r must be positive");
    require(b.t_a > 0.0 && std::isfinite(b.t_a), "ProcessBalance: t_a must be positive");
    require(b.t_ref > 0.0 && std::isfinite(b.t_ref), "ProcessBalance: t_ref must be positive");
    require(std::isfinite(b.q_r) && std::isfinite(b.delta_h) && std::isfinite(b.delta_s) &&
                std::isfinite(b.delta_ek) && std::isfinite(b.delta_eg) && std::isfinite(b.w),
            "ProcessBalance: non-finite energy term");
    if (b.m_dot) require(*b.m_dot > 0.0 && std::isfinite(*b.m_dot),
                         "ProcessBalance: m_dot must be positive when present");
}

/// First/second-law entropy generation of the process, J/K:
/// Q_r/T_a (1 - T_a/T_r) + dH/T_a - dS + (dE_k + dE_g - W)/T_a.
/// The value is not clamped; unphysical inputs may come out negative and are
/// flagged by analyze() instead.
inline double entropy_generation(const ProcessBalance& b) {
    validate(b);
    return (b.q_r / b.t_a) * (1.0 - b.t_a / b.t_r) + b.delta_h / b.t_a - b.delta_s +
           (b.delta_ek + b.delta_eg - b.w) / b.t_a;
}

/// Gouy-Stodola lost work T_ref dS_irr, J. Engineering sign convention:
/// positive for an irreversible process; the opposite-sign statement of the
/// same theorem lives in thermodynamic_lagrangian.
inline double lost_work(const ProcessBalance& b) {
    return b.t_ref * entropy_generation(b);
}

/// Global thermodynamic Lagrangian L = -T_ref dS_irr, J.
inline double thermodynamic_lagrangian(const ProcessBalance& b) { return -lost_work(b); }

/// Global thermodynamic Hamiltonian H = +T_ref dS_irr = -L, J.
inline double thermodynamic_hamiltonian(const ProcessBalance& b) { return lost_work(b); }

struct ExergyReport {
    double delta_s_irr;
    double w_lost;
    double lagrangian;
    double hamiltonian;
    bool second_law_ok;  // false marks dS_irr < 0 (unphysical input)
};

inline ExergyReport analyze(const ProcessBalance& b) {
    const double s_irr = entropy_generation(b);
    const double w_lost = b.t_ref * s_irr;
    return ExergyReport{s_irr, w_lost, -w_lost, w_lost, s_irr >= 0.0};
}

}  // namespace irrigen::exergy
