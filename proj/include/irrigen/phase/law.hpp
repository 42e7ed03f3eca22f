#pragma once

#include <functional>
#include <utility>

#include "irrigen/phase/point.hpp"

namespace irrigen::phase {

enum class LawKind { map, flow };

/// A dynamical law on phase space: either a discrete map sigma -> S(sigma) or
/// a continuous flow generated by a vector field E(sigma), advanced with a
/// fixed-step 4th-order Runge-Kutta integrator. Analytic divergence (flows)
/// and Jacobian determinant (maps) are optional; when absent the estimators
/// fall back to central finite differences.
struct DynamicalLaw {
    LawKind kind = LawKind::map;
    std::size_t dim = 0;
    std::function<Vec(const Vec&)> transform;          // S(x) or E(x)
    std::function<double(const Vec&)> divergence;      // div E, optional
    std::function<double(const Vec&)> jacobian_det;    // det dS, optional
    double dt = 0.0;                                   // flow step, s

    static DynamicalLaw map(std::size_t dim, std::function<Vec(const Vec&)> transform,
                            std::function<double(const Vec&)> jacobian_det = {}) {
        require(dim >= 1, "DynamicalLaw: dimension must be >= 1");
        require(static_cast<bool>(transform), "DynamicalLaw: transform is required");
        DynamicalLaw law;
        law.kind = LawKind::map;
        law.dim = dim;
        law.transform = std::move(transform);
        law.jacobian_det = std::move(jacobian_det);
        return law;
    }

    static DynamicalLaw flow(std::size_t dim, std::function<Vec(const Vec&)> field, double dt,
                             std::function<double(const Vec&)> divergence = {}) {
        require(dim >= 1, "DynamicalLaw: dimension must be >= 1");
        require(static_cast<bool>(field), "DynamicalLaw: vector field is required");
        require(dt > 0.0 && std::isfinite(dt), "DynamicalLaw: flow requires dt > 0");
        DynamicalLaw law;
        law.kind = LawKind::flow;
        law.dim = dim;
        law.transform = std::move(field);
        law.divergence = std::move(divergence);
        law.dt = dt;
        return law;
    }

    bool is_flow() const { return kind == LawKind::flow; }
    bool has_divergence() const { return static_cast<bool>(divergence); }
    bool has_jacobian_det() const { return static_cast<bool>(jacobian_det); }

    /// One step: S(x) for maps, one RK4 increment of length dt for flows.
    /// May produce non-finite coordinates; callers decide how to react.
    Vec step(const Vec& x) const {
        if (kind == LawKind::map) return transform(x);
        const double h = dt;
        const Vec k1 = transform(x);
        Vec probe(dim);
        for (std::size_t i = 0; i < dim; ++i) probe[i] = x[i] + 0.5 * h * k1[i];
        const Vec k2 = transform(probe);
        for (std::size_t i = 0; i < dim; ++i) probe[i] = x[i] + 0.5 * h * k2[i];
        const Vec k3 = transform(probe);
        for (std::size_t i = 0; i < dim; ++i) probe[i] = x[i] + h * k3[i];
        const Vec k4 = transform(probe);
        Vec next(dim);
        for (std::size_t i = 0; i < dim; ++i)
            next[i] = x[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        return next;
    }

    /// Time between successive samples of an orbit: dt for flows, 1 for maps.
    double sample_interval() const { return kind == LawKind::flow ? dt : 1.0; }
};

}  // namespace irrigen::phase
