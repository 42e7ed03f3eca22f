#pragma once

#include <algorithm>
#include <limits>
#include <random>

#include "irrigen/random.hpp"
#include "irrigen/variational/family.hpp"

namespace irrigen::variational {

struct TraceEntry {
    std::size_t index;          // global evaluation counter
    std::vector<double> theta;
    double value;               // dS_irr(theta)
};

struct OptimizationResult {
    std::vector<double> theta;
    double value = 0.0;
    bool converged = false;
    std::size_t evaluations = 0;
    std::vector<TraceEntry> trace;  // every evaluation, in order
};

namespace detail {

/// Shared evaluation budget across restarts; every call lands in the trace.
class BudgetedObjective {
public:
    BudgetedObjective(const StateFamily& family, std::size_t budget,
                      std::vector<TraceEntry>& trace)
        : family_(family), budget_(budget), trace_(trace) {}

    bool exhausted() const { return used_ >= budget_; }
    std::size_t used() const { return used_; }

    /// dS_irr at theta (clamped into bounds). Returns false when the budget
    /// is spent, leaving `value` untouched.
    bool eval(const std::vector<double>& theta, double& value) {
        if (exhausted()) return false;
        value = family_(theta);
        trace_.push_back(TraceEntry{used_, theta, value});
        ++used_;
        return true;
    }

private:
    const StateFamily& family_;
    std::size_t budget_;
    std::vector<TraceEntry>& trace_;
    std::size_t used_ = 0;
};

struct SimplexOutcome {
    std::vector<double> theta;
    double value;
    bool converged;
};

/// One Nelder-Mead descent of g = -dS_irr from `start`, projected into the
/// box bounds. Standard reflection/expansion/contraction/shrink coefficients.
inline SimplexOutcome nelder_mead_maximize(const StateFamily& family, BudgetedObjective& objective,
                                           const std::vector<double>& start,
                                           const OptimizerConfig& config) {
    const std::size_t n = family.dim();
    const auto& bounds = family.bounds();

    std::vector<std::vector<double>> vertex;
    std::vector<double> value;  // stores dS_irr (maximized)
    auto push_vertex = [&](std::vector<double> theta) {
        theta = family.clamp(std::move(theta));
        double v = 0.0;
        if (!objective.eval(theta, v)) return false;
        vertex.push_back(std::move(theta));
        value.push_back(v);
        return true;
    };

    if (!push_vertex(start))
        return SimplexOutcome{start, -std::numeric_limits<double>::infinity(), false};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<double> theta = vertex.front();
        const double span = bounds[k].hi - bounds[k].lo;
        double step = 0.05 * span;
        if (theta[k] + step > bounds[k].hi) step = -step;
        theta[k] += step;
        if (!push_vertex(std::move(theta)))
            return SimplexOutcome{vertex.front(), value.front(), false};
    }

    auto order = [&] {
        std::vector<std::size_t> idx(vertex.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        // best = largest dS_irr first; ties broken lexicographically for determinism
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            if (value[a] != value[b]) return value[a] > value[b];
            return vertex[a] < vertex[b];
        });
        std::vector<std::vector<double>> v2(vertex.size());
        std::vector<double> f2(vertex.size());
        for (std::size_t i = 0; i < idx.size(); ++i) {
            v2[i] = vertex[idx[i]];
            f2[i] = value[idx[i]];
        }
        vertex.swap(v2);
        value.swap(f2);
    };

    auto simplex_diameter = [&] {
        double d = 0.0;
        for (std::size_t i = 1; i < vertex.size(); ++i)
            for (std::size_t k = 0; k < n; ++k)
                d = std::max(d, std::fabs(vertex[i][k] - vertex[0][k]));
        return d;
    };

    bool converged = false;
    while (!objective.exhausted()) {
        order();
        if (std::fabs(value.front() - value.back()) <= config.tol_value &&
            simplex_diameter() <= config.tol_param) {
            converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i + 1 < vertex.size(); ++i)
            for (std::size_t k = 0; k < n; ++k) centroid[k] += vertex[i][k];
        for (double& c : centroid) c /= double(n);

        const std::size_t worst = vertex.size() - 1;
        auto blend = [&](double coeff) {
            std::vector<double> p(n);
            for (std::size_t k = 0; k < n; ++k)
                p[k] = centroid[k] + coeff * (centroid[k] - vertex[worst][k]);
            return family.clamp(std::move(p));
        };

        auto reflected = blend(1.0);
        double f_reflected = 0.0;
        if (!objective.eval(reflected, f_reflected)) break;

        if (f_reflected > value.front()) {
            auto expanded = blend(2.0);
            double f_expanded = 0.0;
            if (!objective.eval(expanded, f_expanded)) break;
            if (f_expanded > f_reflected) {
                vertex[worst] = std::move(expanded);
                value[worst] = f_expanded;
            } else {
                vertex[worst] = std::move(reflected);
                value[worst] = f_reflected;
            }
            continue;
        }
        if (f_reflected > value[worst - 1]) {
            vertex[worst] = std::move(reflected);
            value[worst] = f_reflected;
            continue;
        }

        auto contracted = blend(-0.5);
        double f_contracted = 0.0;
        if (!objective.eval(contracted, f_contracted)) break;
        if (f_contracted > value[worst]) {
            vertex[worst] = std::move(contracted);
            value[worst] = f_contracted;
            continue;
        }

        // Shrink toward the best vertex.
        bool out_of_budget = false;
        for (std::size_t i = 1; i < vertex.size(); ++i) {
            for (std::size_t k = 0; k < n; ++k)
                vertex[i][k] = vertex[0][k] + 0.5 * (vertex[i][k] - vertex[0][k]);
            vertex[i] = family.clamp(std::move(vertex[i]));
            if (!objective.eval(vertex[i], value[i])) {
                out_of_budget = true;
                break;
            }
        }
        if (out_of_budget) break;
    }

    order();
    return SimplexOutcome{vertex.front(), value.front(), converged};
}

}  // namespace detail

/// Search for a maximizer of dS_irr(theta) over the family's box bounds:
/// derivative-free simplex descent from the box center plus `restarts`
/// bound-uniform seeded starts, sharing one evaluation budget of
/// max_iters * (dim + 2). Starts are merged by best value with a
/// deterministic lexicographic tie-break, so the result does not depend on
/// evaluation scheduling.
inline OptimizationResult maximize_entropy_generation(const StateFamily& family,
                                                      const OptimizerConfig& config = {}) {
    config.validate();
    const std::size_t n = family.dim();
    const auto& bounds = family.bounds();

    std::vector<std::vector<double>> starts;
    starts.reserve(1 + config.restarts);
    std::vector<double> center(n);
    for (std::size_t k = 0; k < n; ++k) center[k] = 0.5 * (bounds[k].lo + bounds[k].hi);
    starts.push_back(std::move(center));
    std::mt19937_64 rng(config.seed);
    for (std::size_t r = 0; r < config.restarts; ++r) {
        std::vector<double> s(n);
        for (std::size_t k = 0; k < n; ++k) s[k] = uniform_in(rng, bounds[k].lo, bounds[k].hi);
        starts.push_back(std::move(s));
    }

    OptimizationResult result;
    const std::size_t budget = config.max_iters * (n + 2);
    detail::BudgetedObjective objective(family, budget, result.trace);

    bool have_best = false;
    detail::SimplexOutcome best{};
    for (const auto& start : starts) {
        if (objective.exhausted()) break;
        const auto outcome = detail::nelder_mead_maximize(family, objective, start, config);
        const bool better =
            !have_best || outcome.value > best.value ||
            (outcome.value == best.value && outcome.theta < best.theta);
        if (better) {
            best = outcome;
            have_best = true;
        } else if (outcome.converged && outcome.value == best.value && outcome.theta == best.theta) {
            best.converged = true;
        }
    }

    result.theta = best.theta;
    result.value = best.value;
    result.converged = have_best && best.converged;
    result.evaluations = objective.used();
    return result;
}

}  // namespace irrigen::variational
