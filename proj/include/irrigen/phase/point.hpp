#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "irrigen/numerics.hpp"

namespace irrigen::phase {

using Vec = std::vector<double>;

/// A point in phase space. For an N-particle system the dimension is 6N with
/// coordinates ordered (p, q); any d >= 1 is accepted for test maps.
struct PhasePoint {
    Vec coords;

    explicit PhasePoint(Vec c) : coords(std::move(c)) {
        require(!coords.empty(), "PhasePoint: dimension must be >= 1");
        require(all_finite(coords), "PhasePoint: non-finite coordinates");
    }

    std::size_t dim() const { return coords.size(); }
    double operator[](std::size_t k) const { return coords[k]; }
};

/// A continuous scalar function on phase space.
using Observable = std::function<double(const PhasePoint&)>;

/// Observable picking out coordinate k.
inline Observable coordinate(std::size_t k) {
    return [k](const PhasePoint& p) { return p.coords.at(k); };
}

}  // namespace irrigen::phase
