#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "irrigen/parallel.hpp"
#include "irrigen/phase/trajectory.hpp"
#include "irrigen/random.hpp"

namespace irrigen::phase {

/// Finite weighted-ensemble approximation of the stationary statistics. Only
/// sample/weight pairs are ever assumed, never a density with respect to
/// phase volume, so measures with fractal support are representable.
class EnsembleMeasure {
public:
    EnsembleMeasure(std::vector<PhasePoint> samples, std::vector<double> weights)
        : samples_(std::move(samples)), weights_(std::move(weights)) {
        require(!samples_.empty(), "EnsembleMeasure: no samples");
        require(samples_.size() == weights_.size(),
                "EnsembleMeasure: samples and weights differ in length");
        const std::size_t d = samples_.front().dim();
        for (const auto& s : samples_)
            require(s.dim() == d, "EnsembleMeasure: samples of mixed dimension");
        for (double w : weights_)
            require(w >= 0.0 && std::isfinite(w), "EnsembleMeasure: negative or non-finite weight");
        require(std::fabs(kahan_sum(weights_) - 1.0) < 1e-12,
                "EnsembleMeasure: weights must sum to 1 within 1e-12");
    }

    static EnsembleMeasure equal_weights(std::vector<PhasePoint> samples) {
        const std::size_t n = samples.size();
        require(n > 0, "EnsembleMeasure: no samples");
        return EnsembleMeasure(std::move(samples), std::vector<double>(n, 1.0 / double(n)));
    }

    static EnsembleMeasure point_mass(PhasePoint at) {
        std::vector<PhasePoint> s;
        s.push_back(std::move(at));
        return EnsembleMeasure(std::move(s), {1.0});
    }

    /// n pseudorandom points, coordinates independent uniform in [lo, hi)^d.
    static EnsembleMeasure uniform_random(std::size_t n, double lo, double hi, std::uint64_t seed,
                                          std::size_t dim = 1) {
        require(n > 0 && dim >= 1 && lo < hi, "uniform_random: bad arguments");
        std::mt19937_64 rng(seed);
        std::vector<PhasePoint> samples;
        samples.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            Vec c(dim);
            for (auto& x : c) x = uniform_in(rng, lo, hi);
            samples.emplace_back(std::move(c));
        }
        return equal_weights(std::move(samples));
    }

    /// n jittered-grid points on [lo, hi): sample k is uniform on the k-th of
    /// n equal cells. Quadrature-grade uniform sampling (one dimension):
    /// the mean error is O(1/n) instead of the O(1/sqrt(n)) of plain
    /// pseudorandom draws.
    static EnsembleMeasure stratified_uniform(std::size_t n, double lo, double hi,
                                              std::uint64_t seed) {
        require(n > 0 && lo < hi, "stratified_uniform: bad arguments");
        std::mt19937_64 rng(seed);
        const double cell = (hi - lo) / double(n);
        std::vector<PhasePoint> samples;
        samples.reserve(n);
        for (std::size_t k = 0; k < n; ++k)
            samples.emplace_back(Vec{lo + (double(k) + uniform_unit(rng)) * cell});
        return equal_weights(std::move(samples));
    }

    /// Orbit-sampling approximation: every trajectory point with equal weight.
    static EnsembleMeasure from_trajectory(const Trajectory& traj) {
        require(traj.size() > 0, "from_trajectory: empty trajectory");
        return equal_weights(traj.points);
    }

    std::size_t size() const { return samples_.size(); }
    std::size_t dim() const { return samples_.front().dim(); }
    const std::vector<PhasePoint>& samples() const { return samples_; }
    const std::vector<double>& weights() const { return weights_; }

private:
    std::vector<PhasePoint> samples_;
    std::vector<double> weights_;
};

/// Ensemble expectation sum_k w_k phi(sigma_k), computed as the compensated
/// weighted mean (sum w phi) / (sum w). The weights sum to 1 by invariant, so
/// the normalization only cancels their accumulated rounding; it makes
/// constant observables average exactly. Linear in the observable and
/// order-insensitive up to floating-point reassociation when parallel.
inline double ensemble_average(const EnsembleMeasure& mu, const Observable& phi,
                               const ExecutionPolicy& policy = {}) {
    const auto& s = mu.samples();
    const auto& w = mu.weights();
    struct Acc {
        double sum = 0.0, sum_c = 0.0, weight = 0.0, weight_c = 0.0;
    };
    const Acc acc = chunked_reduce<Acc>(
        mu.size(), Acc{},
        [&](Acc& a, std::size_t k) {
            kahan_add(a.sum, a.sum_c, w[k] * phi(s[k]));
            kahan_add(a.weight, a.weight_c, w[k]);
        },
        [](Acc& a, const Acc& p) {
            kahan_add(a.sum, a.sum_c, p.sum);
            kahan_add(a.weight, a.weight_c, p.weight);
        },
        policy);
    return acc.sum / acc.weight;
}

/// A subset of phase space, decided pointwise on samples.
using Region = std::function<bool(const PhasePoint&)>;

/// Additivity on a disjoint family: the weight of the union must equal the
/// sum of the member weights. Overlap detected on any sample is rejected.
inline bool measure_additivity_check(const EnsembleMeasure& mu, std::span<const Region> partition,
                                     double tol = 1e-12) {
    require(!partition.empty(), "measure_additivity_check: empty partition");
    const auto& samples = mu.samples();
    const auto& weights = mu.weights();
    double union_weight = 0.0;
    std::vector<double> region_weight(partition.size(), 0.0);
    for (std::size_t k = 0; k < samples.size(); ++k) {
        std::size_t hits = 0;
        for (std::size_t r = 0; r < partition.size(); ++r) {
            if (partition[r](samples[k])) {
                ++hits;
                region_weight[r] += weights[k];
            }
        }
        if (hits > 1)
            throw std::invalid_argument("measure_additivity_check: regions overlap at sample " +
                                        std::to_string(k));
        if (hits == 1) union_weight += weights[k];
    }
    double sum = 0.0;
    for (double w : region_weight) sum += w;
    return std::fabs(union_weight - sum) <= tol;
}

struct MeasurePreservationReport {
    bool preserving;
    double max_deviation;  // largest per-cell weight change under pushforward
};

/// Histogram check of measure preservation for a map law: pushes every
/// sample through S and compares binned weights before and after. Supports
/// d <= 3 (bins^d cells over the joint bounding box).
inline MeasurePreservationReport is_measure_preserving(const DynamicalLaw& law,
                                                       const EnsembleMeasure& mu,
                                                       std::size_t bins, double tol) {
    require(law.kind == LawKind::map, "is_measure_preserving: law must be a map");
    require(bins >= 1, "is_measure_preserving: bins must be >= 1");
    const std::size_t d = mu.dim();
    require(d == law.dim, "is_measure_preserving: dimension mismatch");
    require(d <= 3, "is_measure_preserving: histogram binning supports d <= 3");

    const auto& samples = mu.samples();
    const auto& weights = mu.weights();
    std::vector<Vec> pushed(samples.size());
    for (std::size_t k = 0; k < samples.size(); ++k) {
        pushed[k] = law.transform(samples[k].coords);
        require(pushed[k].size() == d && all_finite(pushed[k]),
                "is_measure_preserving: pushforward produced a bad point");
    }

    Vec lo(d, std::numeric_limits<double>::infinity());
    Vec hi(d, -std::numeric_limits<double>::infinity());
    auto absorb = [&](const Vec& x) {
        for (std::size_t i = 0; i < d; ++i) {
            lo[i] = std::min(lo[i], x[i]);
            hi[i] = std::max(hi[i], x[i]);
        }
    };
    for (const auto& s : samples) absorb(s.coords);
    for (const auto& x : pushed) absorb(x);
    for (std::size_t i = 0; i < d; ++i) {
        const double span = hi[i] - lo[i];
        hi[i] += (span > 0.0 ? span : 1.0) * 1e-9;  // keep the max inside the last cell
    }

    std::size_t cells = 1;
    for (std::size_t i = 0; i < d; ++i) cells *= bins;
    auto cell_of = [&](const Vec& x) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < d; ++i) {
            auto b = static_cast<std::size_t>(double(bins) * (x[i] - lo[i]) / (hi[i] - lo[i]));
            if (b >= bins) b = bins - 1;
            idx = idx * bins + b;
        }
        return idx;
    };
    std::vector<double> before(cells, 0.0), after(cells, 0.0);
    for (std::size_t k = 0; k < samples.size(); ++k) {
        before[cell_of(samples[k].coords)] += weights[k];
        after[cell_of(pushed[k])] += weights[k];
    }
    double max_dev = 0.0;
    for (std::size_t c = 0; c < cells; ++c)
        max_dev = std::max(max_dev, std::fabs(before[c] - after[c]));
    return MeasurePreservationReport{max_dev < tol, max_dev};
}

}  // namespace irrigen::phase
