#pragma once

#include <cmath>
#include <string>

#include "irrigen/phase/ensemble.hpp"

namespace irrigen::phase {

/// Birkhoff mean (1/T) sum_{j=0}^{T-1} phi(S^j sigma) along the orbit of
/// `start`. The j = 0 term is included and the sum divided by T; the
/// difference from the j = 1..T-1 convention is O(1/T). Streams the orbit
/// without storing it.
inline double time_average(const DynamicalLaw& law, const PhasePoint& start, const Observable& phi,
                           std::size_t horizon) {
    require(horizon >= 1, "time_average: horizon must be >= 1");
    require(start.dim() == law.dim, "time_average: start dimension differs from law dimension");
    Vec x = start.coords;
    double acc = phi(PhasePoint(x));
    double carry = 0.0;
    for (std::size_t j = 1; j < horizon; ++j) {
        x = law.step(x);
        if (!all_finite(x))
            throw std::domain_error("time_average: orbit left the finite range at step " +
                                    std::to_string(j));
        kahan_add(acc, carry, phi(PhasePoint(x)));
    }
    return acc / double(horizon);
}

/// |time average - ensemble average|: the residual of the ergodic identity
/// between the orbit mean and the stationary-measure expectation.
inline double birkhoff_residual(const DynamicalLaw& law, const PhasePoint& start,
                                const EnsembleMeasure& mu, const Observable& phi,
                                std::size_t horizon, const ExecutionPolicy& policy = {}) {
    return std::fabs(time_average(law, start, phi, horizon) - ensemble_average(mu, phi, policy));
}

}  // namespace irrigen::phase
