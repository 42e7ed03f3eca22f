#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "irrigen/exergy/balance.hpp"
#include "irrigen/numerics.hpp"

namespace irrigen::variational {

struct Bounds {
    double lo;
    double hi;
};

/// A parameterized family of stationary states: theta maps to the entropy
/// generation dS_irr(theta), either directly or through a ProcessBalance.
/// Parameters live in closed box bounds.
class StateFamily {
public:
    StateFamily(std::size_t dim, std::function<double(std::span<const double>)> delta_s_irr,
                std::vector<Bounds> bounds)
        : dim_(dim), eval_(std::move(delta_s_irr)), bounds_(std::move(bounds)) {
        require(dim_ >= 1, "StateFamily: dim must be >= 1");
        require(static_cast<bool>(eval_), "StateFamily: evaluation rule is required");
        require(bounds_.size() == dim_, "StateFamily: bounds count differs from dim");
        for (const auto& b : bounds_)
            require(std::isfinite(b.lo) && std::isfinite(b.hi) && b.lo < b.hi,
                    "StateFamily: malformed bounds");
    }

    static StateFamily from_balances(
        std::size_t dim, std::function<exergy::ProcessBalance(std::span<const double>)> balance,
        std::vector<Bounds> bounds) {
        require(static_cast<bool>(balance), "StateFamily: balance rule is required");
        auto eval = [balance = std::move(balance)](std::span<const double> theta) {
            return exergy::entropy_generation(balance(theta));
        };
        return StateFamily(dim, std::move(eval), std::move(bounds));
    }

    double operator()(std::span<const double> theta) const {
        require(theta.size() == dim_, "StateFamily: theta dimension mismatch");
        const double value = eval_(theta);
        require(std::isfinite(value), "StateFamily: dS_irr evaluated to a non-finite value");
        return value;
    }

    std::size_t dim() const { return dim_; }
    const std::vector<Bounds>& bounds() const { return bounds_; }

    bool interior(std::span<const double> theta, double margin = 0.0) const {
        for (std::size_t k = 0; k < dim_; ++k)
            if (theta[k] <= bounds_[k].lo + margin || theta[k] >= bounds_[k].hi - margin)
                return false;
        return true;
    }

    std::vector<double> clamp(std::vector<double> theta) const {
        for (std::size_t k = 0; k < dim_; ++k)
            theta[k] = std::min(std::max(theta[k], bounds_[k].lo), bounds_[k].hi);
        return theta;
    }

private:
    std::size_t dim_;
    std::function<double(std::span<const double>)> eval_;
    std::vector<Bounds> bounds_;
};

struct OptimizerConfig {
    std::size_t max_iters = 400;  // evaluation budget is max_iters * (dim + 2)
    double tol_value = 1e-12;
    double tol_param = 1e-9;
    double fd_step = 1e-4;
    std::uint64_t seed = 0;
    std::size_t restarts = 4;  // seeded starts beyond the box center

    void validate() const {
        require(max_iters >= 1, "OptimizerConfig: max_iters must be >= 1");
        require(tol_value > 0.0 && tol_param > 0.0 && fd_step > 0.0,
                "OptimizerConfig: tolerances must be positive");
    }
};

}  // namespace irrigen::variational
