#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace irrigen {

inline bool all_finite(std::span<const double> v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

inline void require(bool condition, const std::string& message) {
    if (!condition) throw std::invalid_argument(message);
}

/// |a - b| / max(|a|, |b|); zero when both operands are zero.
inline double rel_diff(double a, double b) {
    const double scale = std::max(std::fabs(a), std::fabs(b));
    if (scale == 0.0) return 0.0;
    return std::fabs(a - b) / scale;
}

/// One Kahan compensation step: sum += x with the rounding residue kept in
/// carry.
inline void kahan_add(double& sum, double& carry, double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
}

/// Compensated (Kahan) summation. Used where a plain left-to-right sum
/// would eat into validation tolerances (e.g. 1e5 weights of 1/n).
inline double kahan_sum(std::span<const double> v) {
    double sum = 0.0;
    double carry = 0.0;
    for (double x : v) kahan_add(sum, carry, x);
    return sum;
}

/// Determinant of an n x n row-major matrix by Gaussian elimination with
/// partial pivoting. The matrix is destroyed.
inline double det_destructive(std::vector<double>& m, std::size_t n) {
    if (m.size() != n * n) throw std::invalid_argument("det: matrix shape mismatch");
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::fabs(m[col * n + col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double cand = std::fabs(m[r * n + col]);
            if (cand > best) {
                best = cand;
                pivot = r;
            }
        }
        if (best == 0.0) return 0.0;
        if (pivot != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(m[pivot * n + c], m[col * n + c]);
            det = -det;
        }
        const double diag = m[col * n + col];
        det *= diag;
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = m[r * n + col] / diag;
            if (factor == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) m[r * n + c] -= factor * m[col * n + c];
        }
    }
    return det;
}

/// Trapezoidal quadrature weights for a strictly increasing axis.
inline std::vector<double> trapezoid_weights(std::span<const double> axis, const std::string& name) {
    if (axis.size() < 2) throw std::invalid_argument("axis '" + name + "' needs at least 2 points");
    for (std::size_t i = 0; i + 1 < axis.size(); ++i)
        if (!(axis[i] < axis[i + 1]))
            throw std::invalid_argument("axis '" + name + "' is not strictly increasing at index " +
                                        std::to_string(i + 1));
    std::vector<double> w(axis.size(), 0.0);
    for (std::size_t i = 0; i + 1 < axis.size(); ++i) {
        const double h = 0.5 * (axis[i + 1] - axis[i]);
        w[i] += h;
        w[i + 1] += h;
    }
    return w;
}

}  // namespace irrigen
