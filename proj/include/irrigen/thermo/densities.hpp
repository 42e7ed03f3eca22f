#pragma once

#include <optional>
#include <vector>

#include "irrigen/thermo/state.hpp"

namespace irrigen::thermo {

namespace detail {

inline void check_dims(const GeneralizedState& state, const OnsagerTensors& tensors) {
    require(state.size() == tensors.size(),
            "state/tensor dimension mismatch: xi has " + std::to_string(state.size()) +
                " entries, tensors are rank " + std::to_string(tensors.size()));
}

inline double quadratic_sum(const GeneralizedState& s, const OnsagerTensors& L) {
    const std::size_t n = s.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) acc += L.l2(i, j) * s.xi[i] * s.xi[j];
    return acc;
}

inline double cubic_sum(const GeneralizedState& s, const OnsagerTensors& L) {
    const std::size_t n = s.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double xij = s.xi[i] * s.xi[j];
            for (std::size_t k = 0; k < n; ++k) acc += L.l3(i, j, k) * xij * s.xi[k];
        }
    return acc;
}

}  // namespace detail

/// Entropy produced per unit time and volume:
/// sum_ij L_ij xi_i xi_j + 1/2 sum_ijk L_ijk xi_i xi_j xi_k.
inline double entropy_rate_density(const GeneralizedState& state, const OnsagerTensors& tensors) {
    detail::check_dims(state, tensors);
    return detail::quadratic_sum(state, tensors) + 0.5 * detail::cubic_sum(state, tensors);
}

/// Non-linear dissipative potential density:
/// 1/2 sum_ij L_ij xi_i xi_j + 1/6 sum_ijk L_ijk xi_i xi_j xi_k.
inline double dissipative_potential(const GeneralizedState& state, const OnsagerTensors& tensors) {
    detail::check_dims(state, tensors);
    return 0.5 * detail::quadratic_sum(state, tensors) +
           detail::cubic_sum(state, tensors) / 6.0;
}

/// Lagrangian per unit time, temperature and volume:
/// 1/2 sum_ij L_ij xi_i xi_j + 1/3 sum_ijk L_ijk xi_i xi_j xi_k.
/// Identically the entropy-rate density minus the dissipative potential.
inline double lagrangian_density(const GeneralizedState& state, const OnsagerTensors& tensors) {
    detail::check_dims(state, tensors);
    return 0.5 * detail::quadratic_sum(state, tensors) +
           detail::cubic_sum(state, tensors) / 3.0;
}

/// Hamiltonian density. The Legendre transform collapses: the Lagrangian
/// density has no xi_dot dependence, every conjugate momentum vanishes, and
/// rho_H = sum_i zeta_i xi_i - rho_L = -rho_L exactly.
inline double hamiltonian_density(const GeneralizedState& state, const OnsagerTensors& tensors) {
    return -lagrangian_density(state, tensors);
}

/// Conjugate momenta zeta_i = d rho_L / d xi_dot_i. Always the zero vector;
/// kept as an operation so the Legendre construction is explicit and testable.
inline std::vector<double> conjugate_momenta(const GeneralizedState& state,
                                             const OnsagerTensors& tensors) {
    detail::check_dims(state, tensors);
    return std::vector<double>(state.size(), 0.0);
}

/// Residuals of the density-level identities. All informational; none is
/// enforced. potential_gap is zero iff the cubic contribution vanishes, and
/// cubic_claim equals the quadratic form 1/2 sum_ij L_ij xi_i xi_j.
struct ConsistencyReport {
    double decomposition;           // rho_L - (entropy rate - psi)
    std::optional<double> lavenda;  // rho_S - rho_pi - 2 psi, when supplied
    double potential_gap;           // psi - rho_L
    double cubic_claim;             // psi - 1/6 sum_ijk L_ijk xi xi xi
};

inline ConsistencyReport consistency_report(const GeneralizedState& state,
                                            const OnsagerTensors& tensors,
                                            std::optional<double> rho_s = std::nullopt,
                                            std::optional<double> rho_pi = std::nullopt) {
    detail::check_dims(state, tensors);
    const double quad = detail::quadratic_sum(state, tensors);
    const double cubic = detail::cubic_sum(state, tensors);
    const double rate = quad + 0.5 * cubic;
    const double psi = 0.5 * quad + cubic / 6.0;
    const double rho_l = 0.5 * quad + cubic / 3.0;
    ConsistencyReport report{};
    report.decomposition = rho_l - (rate - psi);
    if (rho_s && rho_pi) report.lavenda = *rho_s - *rho_pi - 2.0 * psi;
    report.potential_gap = psi - rho_l;
    report.cubic_claim = psi - cubic / 6.0;
    return report;
}

}  // namespace irrigen::thermo
