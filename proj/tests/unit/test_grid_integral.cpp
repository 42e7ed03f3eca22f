#include <catch2/catch_amalgamated.hpp>

#include "irrigen/thermo/grid_integral.hpp"

using irrigen::thermo::Grid3;

namespace {

Grid3 unit_cube(std::size_t points) {
    Grid3 g;
    for (std::size_t i = 0; i < points; ++i) {
        const double x = double(i) / double(points - 1);
        g.time.push_back(x);
        g.temperature.push_back(x);
        g.volume.push_back(x);
    }
    return g;
}

}  // namespace

TEST_CASE("constant field over the unit cube integrates to the volume") {
    const auto g = unit_cube(6);
    const std::vector<double> ones(6 * 6 * 6, 1.0);
    CHECK(irrigen::thermo::integrate_density(g, ones) == Catch::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("linear-in-time field integrates to 1/2 (trapezoid is exact)") {
    const auto g = unit_cube(11);
    std::vector<double> f(11 * 11 * 11);
    for (std::size_t it = 0; it < 11; ++it)
        for (std::size_t iT = 0; iT < 11; ++iT)
            for (std::size_t iV = 0; iV < 11; ++iV) f[(it * 11 + iT) * 11 + iV] = g.time[it];
    CHECK(irrigen::thermo::integrate_density(g, f) == Catch::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("the integral is linear in the field") {
    const auto g = unit_cube(5);
    std::vector<double> f(5 * 5 * 5);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::sin(0.37 * double(i));
    std::vector<double> doubled = f;
    for (auto& v : doubled) v *= 2.0;
    const double base = irrigen::thermo::integrate_density(g, f);
    CHECK(irrigen::thermo::integrate_density(g, doubled) ==
          Catch::Approx(2.0 * base).epsilon(1e-13));
}

TEST_CASE("non-uniform axes still integrate linear fields exactly") {
    Grid3 g;
    g.time = {0.0, 0.1, 0.4, 1.0};
    g.temperature = {300.0, 310.0, 350.0};
    g.volume = {0.0, 2.0};
    std::vector<double> f(4 * 3 * 2);
    for (std::size_t it = 0; it < 4; ++it)
        for (std::size_t iT = 0; iT < 3; ++iT)
            for (std::size_t iV = 0; iV < 2; ++iV) f[(it * 3 + iT) * 2 + iV] = g.time[it];
    // integral of t over [0,1] x [300,350] x [0,2] = 0.5 * 50 * 2
    CHECK(irrigen::thermo::integrate_density(g, f) == Catch::Approx(50.0).epsilon(1e-13));
}

TEST_CASE("bad grids and fields are rejected") {
    auto g = unit_cube(4);
    const std::vector<double> f(4 * 4 * 4, 1.0);
    SECTION("non-monotone axis") {
        g.temperature[2] = g.temperature[1];
        CHECK_THROWS_AS(irrigen::thermo::integrate_density(g, f), std::invalid_argument);
    }
    SECTION("too few points") {
        g.volume = {1.0};
        CHECK_THROWS_AS(irrigen::thermo::integrate_density(g, f), std::invalid_argument);
    }
    SECTION("shape mismatch") {
        const std::vector<double> short_field(10, 1.0);
        CHECK_THROWS_AS(irrigen::thermo::integrate_density(g, short_field),
                        std::invalid_argument);
    }
    SECTION("non-finite values") {
        auto bad = f;
        bad[7] = std::numeric_limits<double>::infinity();
        CHECK_THROWS_AS(irrigen::thermo::integrate_density(g, bad), std::invalid_argument);
    }
}
