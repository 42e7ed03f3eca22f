#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "irrigen/phase/contraction.hpp"
#include "irrigen/phase/systems.hpp"

using irrigen::phase::DynamicalLaw;
using irrigen::phase::EnsembleMeasure;
using irrigen::phase::PhasePoint;
using irrigen::phase::Vec;
namespace sys = irrigen::phase::systems;

namespace {
const auto kUnit = irrigen::thermo::PhysicalConstants::unit();
}

TEST_CASE("divergence of reference fields") {
    SECTION("linear contraction: analytic -0.5 everywhere") {
        const auto flow = sys::linear_contraction_flow(0.5, 0.1);
        CHECK(irrigen::phase::divergence(flow, PhasePoint({3.7})) == -0.5);
        CHECK(irrigen::phase::divergence(flow, PhasePoint({-12.0})) == -0.5);
    }
    SECTION("rigid rotation field is divergence-free") {
        CHECK(irrigen::phase::divergence(sys::rotation_field(0.1), PhasePoint({0.3, -1.2})) ==
              0.0);
    }
    SECTION("finite differences agree with the analytic rule on xdot = -x^3") {
        const auto fd_flow = sys::cubic_contraction_flow(0.1, /*analytic=*/false);
        CHECK(irrigen::phase::divergence(fd_flow, PhasePoint({1.0})) ==
              Catch::Approx(-3.0).margin(1e-8));
        const auto exact_flow = sys::cubic_contraction_flow(0.1);
        CHECK(irrigen::phase::divergence(exact_flow, PhasePoint({1.0})) == -3.0);
    }
    SECTION("maps are redirected to the contraction estimator") {
        CHECK_THROWS_AS(irrigen::phase::divergence(sys::golden_rotation(), PhasePoint({0.1})),
                        std::invalid_argument);
    }
}

TEST_CASE("entropy production of flows") {
    const auto measure = EnsembleMeasure::uniform_random(1000, -2.0, 2.0, 17);
    SECTION("constant-divergence flow gives k_B * lambda for any measure") {
        const auto flow = sys::linear_contraction_flow(0.5, 0.1);
        CHECK(irrigen::phase::entropy_production(flow, measure, kUnit) == 0.5);
        const auto point = EnsembleMeasure::point_mass(PhasePoint({123.0}));
        CHECK(irrigen::phase::entropy_production(flow, point, kUnit) == 0.5);
        const auto strong = sys::linear_contraction_flow(2.0, 0.1);
        CHECK(irrigen::phase::entropy_production(strong, measure, kUnit) == 2.0);
    }
    SECTION("k_B scales the result") {
        const auto flow = sys::linear_contraction_flow(0.5, 0.1);
        const auto si = irrigen::thermo::PhysicalConstants::si();
        CHECK(irrigen::phase::entropy_production(flow, measure, si) ==
              Catch::Approx(0.5 * 1.380649e-23).epsilon(1e-14));
    }
    SECTION("divergence-free fields are at equilibrium: sigma = 0") {
        const auto measure2 = EnsembleMeasure::uniform_random(2000, -3.0, 3.0, 23, 2);
        CHECK(std::fabs(irrigen::phase::entropy_production(sys::cellular_flow(0.1), measure2,
                                                           kUnit)) < 1e-10);
        CHECK(std::fabs(irrigen::phase::entropy_production(
                  sys::cellular_flow(0.1, /*analytic=*/false), measure2, kUnit)) < 1e-6);
    }
    SECTION("FD divergence reproduces the linear-contraction value") {
        const auto fd_flow = sys::linear_contraction_flow(0.5, 0.1, 1, /*analytic=*/false);
        CHECK(std::fabs(irrigen::phase::entropy_production(fd_flow, measure, kUnit) - 0.5) <
              1e-6);
    }
    SECTION("maps are rejected") {
        CHECK_THROWS_AS(irrigen::phase::entropy_production(sys::golden_rotation(), measure, kUnit),
                        std::invalid_argument);
    }
}

TEST_CASE("contraction rate of maps") {
    const auto measure = EnsembleMeasure::uniform_random(500, -1.0, 1.0, 29);
    SECTION("halving map contracts at ln 2 per step") {
        const auto report =
            irrigen::phase::contraction_rate_map_report(sys::scaling_map(0.5), measure, kUnit);
        CHECK(report.rate == Catch::Approx(std::log(2.0)).epsilon(1e-12));
        CHECK(report.rejected == 0);
        CHECK_FALSE(report.expanding);
    }
    SECTION("doubling map expands and is flagged") {
        const auto report =
            irrigen::phase::contraction_rate_map_report(sys::scaling_map(2.0), measure, kUnit);
        CHECK(report.rate == Catch::Approx(-std::log(2.0)).epsilon(1e-12));
        CHECK(report.expanding);
    }
    SECTION("area-preserving standard map has zero contraction") {
        const auto torus = EnsembleMeasure::uniform_random(10000, 0.0, 6.28, 31, 2);
        CHECK(std::fabs(irrigen::phase::contraction_rate_map(sys::standard_map(0.9), torus,
                                                             kUnit)) < 1e-8);
    }
    SECTION("FD Jacobian of the unwrapped standard map also lands near zero") {
        const auto torus = EnsembleMeasure::uniform_random(2000, 0.0, 6.28, 37, 2);
        const auto smooth = sys::standard_map(0.9, /*wrap=*/false);
        const auto fd_law = DynamicalLaw::map(2, smooth.transform);  // no analytic det
        CHECK(std::fabs(irrigen::phase::contraction_rate_map(fd_law, torus, kUnit)) < 1e-8);
    }
    SECTION("FD Jacobian reproduces the halving-map rate") {
        const auto fd_law =
            DynamicalLaw::map(1, [](const Vec& x) { return Vec{0.5 * x[0]}; });
        CHECK(irrigen::phase::contraction_rate_map(fd_law, measure, kUnit) ==
              Catch::Approx(std::log(2.0)).margin(1e-9));
    }
    SECTION("singular Jacobians are rejected per sample, all-singular throws") {
        const auto collapse = DynamicalLaw::map(
            1, [](const Vec&) { return Vec{0.0}; }, [](const Vec&) { return 0.0; });
        CHECK_THROWS_AS(irrigen::phase::contraction_rate_map(collapse, measure, kUnit),
                        std::domain_error);
        // mixed case: singular only at some samples gets skipped and counted
        const auto partial = DynamicalLaw::map(
            1, [](const Vec& x) { return Vec{0.5 * x[0]}; },
            [](const Vec& x) { return x[0] > 0.0 ? 0.5 : 0.0; });
        const auto report =
            irrigen::phase::contraction_rate_map_report(partial, measure, kUnit);
        CHECK(report.rejected > 0);
        CHECK(report.rate == Catch::Approx(std::log(2.0)).epsilon(1e-12));
    }
    SECTION("flows are rejected") {
        CHECK_THROWS_AS(irrigen::phase::contraction_rate_map(
                            sys::linear_contraction_flow(0.5, 0.1), measure, kUnit),
                        std::invalid_argument);
    }
}

TEST_CASE("statistical entropy generation divides by the mass flow") {
    const auto measure = EnsembleMeasure::uniform_random(100, -1.0, 1.0, 41);
    const auto flow = sys::linear_contraction_flow(0.5, 0.1);
    CHECK(irrigen::phase::entropy_generation_statistical(flow, measure, kUnit, 1.0) == 0.5);
    CHECK(irrigen::phase::entropy_generation_statistical(flow, measure, kUnit, 2.0) == 0.25);
    const auto measure2 = EnsembleMeasure::uniform_random(100, -1.0, 1.0, 43, 2);
    CHECK(irrigen::phase::entropy_generation_statistical(sys::rotation_field(0.1), measure2,
                                                         kUnit, 5.0) == 0.0);
    CHECK_THROWS_AS(irrigen::phase::entropy_generation_statistical(flow, measure, kUnit, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(irrigen::phase::entropy_generation_statistical(flow, measure, kUnit, -1.0),
                    std::invalid_argument);
}
