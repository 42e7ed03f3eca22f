#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "irrigen/numerics.hpp"

namespace irrigen::thermo {

/// Generalized thermodynamic coordinates: deviations xi_i = alpha_i - alpha_i^(0)
/// of the extensive quantities from their stable-state values. Entries are
/// treated as pre-normalized dimensionless numbers; rates are per second.
struct GeneralizedState {
    std::vector<double> xi;
    std::optional<std::vector<double>> xi_dot;
    double t = 0.0;  // s

    explicit GeneralizedState(std::vector<double> xi_,
                              std::optional<std::vector<double>> xi_dot_ = std::nullopt,
                              double t_ = 0.0)
        : xi(std::move(xi_)), xi_dot(std::move(xi_dot_)), t(t_) {
        require(!xi.empty(), "GeneralizedState: xi must be non-empty");
        require(all_finite(xi), "GeneralizedState: xi has non-finite entries");
        if (xi_dot) {
            require(xi_dot->size() == xi.size(),
                    "GeneralizedState: xi_dot length differs from xi");
            require(all_finite(*xi_dot), "GeneralizedState: xi_dot has non-finite entries");
        }
    }

    std::size_t size() const { return xi.size(); }
};

/// Phenomenological coefficients L_ij and L_ijk in entropy-rate units per
/// unit xi-product. Construction keeps only the permutation-symmetric part:
/// the sums over i,j(,k) are blind to the antisymmetric remainder, so the
/// symmetric representative is canonical.
class OnsagerTensors {
public:
    OnsagerTensors(const std::vector<std::vector<double>>& l2,
                   const std::vector<std::vector<std::vector<double>>>& l3) {
        n_ = l2.size();
        require(n_ > 0, "OnsagerTensors: empty l2");
        require(l3.size() == n_, "OnsagerTensors: l2 and l3 dimensions disagree");
        l2_.assign(n_ * n_, 0.0);
        l3_.assign(n_ * n_ * n_, 0.0);
        for (std::size_t i = 0; i < n_; ++i) {
            require(l2[i].size() == n_, "OnsagerTensors: l2 is not square");
            for (std::size_t j = 0; j < n_; ++j) {
                require(std::isfinite(l2[i][j]), "OnsagerTensors: non-finite l2 entry");
                l2_[i * n_ + j] = l2[i][j];
            }
        }
        for (std::size_t i = 0; i < n_; ++i) {
            require(l3[i].size() == n_, "OnsagerTensors: l3 shape mismatch");
            for (std::size_t j = 0; j < n_; ++j) {
                require(l3[i][j].size() == n_, "OnsagerTensors: l3 shape mismatch");
                for (std::size_t k = 0; k < n_; ++k) {
                    require(std::isfinite(l3[i][j][k]), "OnsagerTensors: non-finite l3 entry");
                    l3_[(i * n_ + j) * n_ + k] = l3[i][j][k];
                }
            }
        }
        symmetrize();
    }

    /// Quadratic-only tensors (L_ijk = 0).
    static OnsagerTensors quadratic(const std::vector<std::vector<double>>& l2) {
        const std::size_t n = l2.size();
        std::vector<std::vector<std::vector<double>>> zero(
            n, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)));
        return OnsagerTensors(l2, zero);
    }

    static OnsagerTensors zero(std::size_t n) {
        return quadratic(std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)));
    }

    std::size_t size() const { return n_; }
    double l2(std::size_t i, std::size_t j) const { return l2_[i * n_ + j]; }
    double l3(std::size_t i, std::size_t j, std::size_t k) const {
        return l3_[(i * n_ + j) * n_ + k];
    }

private:
    void symmetrize() {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j) {
                const double avg = 0.5 * (l2_[i * n_ + j] + l2_[j * n_ + i]);
                l2_[i * n_ + j] = avg;
                l2_[j * n_ + i] = avg;
            }
        std::vector<double> sym(l3_.size());
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k) {
                    const double avg = (at3(i, j, k) + at3(i, k, j) + at3(j, i, k) +
                                        at3(j, k, i) + at3(k, i, j) + at3(k, j, i)) /
                                       6.0;
                    sym[(i * n_ + j) * n_ + k] = avg;
                }
        l3_ = std::move(sym);
    }

    double at3(std::size_t i, std::size_t j, std::size_t k) const {
        return l3_[(i * n_ + j) * n_ + k];
    }

    std::size_t n_ = 0;
    std::vector<double> l2_;
    std::vector<double> l3_;
};

/// k_B and the lower-reservoir temperature. k_B is the SI value by default
/// and settable to 1 for dimensionless phase-space studies.
struct PhysicalConstants {
    double k_b = 1.380649e-23;  // J/K
    double t_ref = 298.15;      // K

    PhysicalConstants(double k_b_, double t_ref_) : k_b(k_b_), t_ref(t_ref_) {
        require(k_b > 0.0 && std::isfinite(k_b), "PhysicalConstants: k_b must be positive");
        require(t_ref > 0.0 && std::isfinite(t_ref), "PhysicalConstants: t_ref must be positive");
    }

    static PhysicalConstants si(double t_ref = 298.15) {
        return PhysicalConstants(1.380649e-23, t_ref);
    }
    static PhysicalConstants unit() { return PhysicalConstants(1.0, 1.0); }
};

}  // namespace irrigen::thermo
