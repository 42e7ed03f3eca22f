#pragma once

// Shared random-instance generators for the test suites. Kept independent of
// the library's own verify-mode generators.

#include <random>
#include <vector>

#include "irrigen/random.hpp"
#include "irrigen/thermo/densities.hpp"

namespace testgen {

struct ThermoInstance {
    std::vector<double> xi;
    std::vector<std::vector<double>> l2;
    std::vector<std::vector<std::vector<double>>> l3;
};

inline ThermoInstance random_thermo(std::mt19937_64& rng, std::size_t max_dim = 5,
                                    bool with_cubic = true) {
    auto entry = [&] { return irrigen::uniform_in(rng, -10.0, 10.0); };
    ThermoInstance inst;
    const std::size_t n = irrigen::uniform_index(rng, 1, max_dim);
    inst.xi.resize(n);
    for (auto& x : inst.xi) x = entry();
    inst.l2.assign(n, std::vector<double>(n));
    for (auto& row : inst.l2)
        for (auto& v : row) v = entry();
    inst.l3.assign(n, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)));
    if (with_cubic)
        for (auto& plane : inst.l3)
            for (auto& row : plane)
                for (auto& v : row) v = entry();
    return inst;
}

/// Brute-force sums over the raw (unsymmetrized) coefficient arrays; the
/// independent oracle for every density formula.
inline double naive_quadratic(const ThermoInstance& inst) {
    double acc = 0.0;
    const std::size_t n = inst.xi.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) acc += inst.l2[i][j] * inst.xi[i] * inst.xi[j];
    return acc;
}

inline double naive_cubic(const ThermoInstance& inst) {
    double acc = 0.0;
    const std::size_t n = inst.xi.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                acc += inst.l3[i][j][k] * inst.xi[i] * inst.xi[j] * inst.xi[k];
    return acc;
}

}  // namespace testgen
