#include <catch2/catch_amalgamated.hpp>

#include "irrigen/random.hpp"
#include "irrigen/thermo/densities.hpp"
#include "support/generators.hpp"

using irrigen::rel_diff;
using irrigen::thermo::GeneralizedState;
using irrigen::thermo::OnsagerTensors;

namespace {

GeneralizedState state_of(std::vector<double> xi) { return GeneralizedState(std::move(xi)); }

const OnsagerTensors kTwoByTwo = OnsagerTensors::quadratic({{2.0, 1.0}, {1.0, 4.0}});
const OnsagerTensors kCubicOne({{2.0}}, {{{6.0}}});

}  // namespace

TEST_CASE("entropy rate density matches hand-evaluated sums") {
    CHECK(irrigen::thermo::entropy_rate_density(state_of({0.0, 0.0}), kTwoByTwo) == 0.0);
    CHECK(irrigen::thermo::entropy_rate_density(state_of({1.0, 1.0}), kTwoByTwo) ==
          Catch::Approx(8.0).epsilon(1e-14));
    CHECK(irrigen::thermo::entropy_rate_density(state_of({1.0}), kCubicOne) ==
          Catch::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("dissipative potential matches hand-evaluated sums") {
    CHECK(irrigen::thermo::dissipative_potential(state_of({0.0, 0.0}), kTwoByTwo) == 0.0);
    CHECK(irrigen::thermo::dissipative_potential(state_of({1.0, 1.0}), kTwoByTwo) ==
          Catch::Approx(4.0).epsilon(1e-14));
    CHECK(irrigen::thermo::dissipative_potential(state_of({1.0}), kCubicOne) ==
          Catch::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("lagrangian density closed form equals rate minus potential") {
    CHECK(irrigen::thermo::lagrangian_density(state_of({0.0, 0.0}), kTwoByTwo) == 0.0);
    CHECK(irrigen::thermo::lagrangian_density(state_of({1.0, 1.0}), kTwoByTwo) ==
          Catch::Approx(4.0).epsilon(1e-14));
    CHECK(irrigen::thermo::lagrangian_density(state_of({1.0}), kCubicOne) ==
          Catch::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("hamiltonian density is the exact negation") {
    CHECK(irrigen::thermo::hamiltonian_density(state_of({0.0, 0.0}), kTwoByTwo) == 0.0);
    CHECK(irrigen::thermo::hamiltonian_density(state_of({1.0, 1.0}), kTwoByTwo) ==
          Catch::Approx(-4.0).epsilon(1e-14));
    CHECK(irrigen::thermo::hamiltonian_density(state_of({1.0}), kCubicOne) ==
          Catch::Approx(-3.0).epsilon(1e-14));
}

TEST_CASE("conjugate momenta vanish structurally") {
    CHECK(irrigen::thermo::conjugate_momenta(state_of({1.0, -2.0}), kTwoByTwo) ==
          std::vector<double>{0.0, 0.0});
    CHECK(irrigen::thermo::conjugate_momenta(state_of({3.0}), kCubicOne) ==
          std::vector<double>{0.0});
    std::mt19937_64 rng(7);
    const auto inst = testgen::random_thermo(rng, 5);
    const OnsagerTensors tensors(inst.l2, inst.l3);
    const auto zeta = irrigen::thermo::conjugate_momenta(state_of(inst.xi), tensors);
    REQUIRE(zeta.size() == inst.xi.size());
    for (double z : zeta) CHECK(z == 0.0);
}

TEST_CASE("consistency report residuals") {
    SECTION("potential gap vanishes exactly without cubic coefficients") {
        const auto report = irrigen::thermo::consistency_report(state_of({1.3, -0.4}), kTwoByTwo);
        CHECK(report.potential_gap == 0.0);
    }
    SECTION("worked cubic example: psi - rho_L = 2 - 3 = -1") {
        const auto report = irrigen::thermo::consistency_report(state_of({1.0}), kCubicOne);
        CHECK(report.potential_gap == Catch::Approx(-1.0).epsilon(1e-14));
        CHECK(std::fabs(report.decomposition) < 1e-14);
    }
    SECTION("cubic claim residual is the quadratic form") {
        const OnsagerTensors pure_cubic({{0.0}}, {{{6.0}}});
        const auto report = irrigen::thermo::consistency_report(state_of({1.0}), pure_cubic);
        CHECK(report.cubic_claim == 0.0);
        // and with a quadratic part it equals 1/2 sum L_ij xi_i xi_j
        const auto mixed = irrigen::thermo::consistency_report(state_of({1.0}), kCubicOne);
        CHECK(mixed.cubic_claim == Catch::Approx(1.0).epsilon(1e-14));
    }
    SECTION("Lavenda residual only when both densities supplied") {
        const auto none = irrigen::thermo::consistency_report(state_of({1.0}), kCubicOne);
        CHECK_FALSE(none.lavenda.has_value());
        const auto some =
            irrigen::thermo::consistency_report(state_of({1.0}), kCubicOne, 10.0, 6.0);
        REQUIRE(some.lavenda.has_value());
        CHECK(*some.lavenda == Catch::Approx(10.0 - 6.0 - 4.0).epsilon(1e-14));
    }
}

TEST_CASE("density identities over random instances") {
    std::mt19937_64 rng(2024);
    for (int rep = 0; rep < 1000; ++rep) {
        const auto inst = testgen::random_thermo(rng);
        const GeneralizedState state = state_of(inst.xi);
        const OnsagerTensors tensors(inst.l2, inst.l3);
        const double rate = irrigen::thermo::entropy_rate_density(state, tensors);
        const double psi = irrigen::thermo::dissipative_potential(state, tensors);
        const double lagrangian = irrigen::thermo::lagrangian_density(state, tensors);
        REQUIRE(rel_diff(lagrangian, rate - psi) < 1e-12);
        REQUIRE(irrigen::thermo::hamiltonian_density(state, tensors) == -lagrangian);
    }
}

TEST_CASE("evaluation is invariant under symmetrization of raw input") {
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 500; ++rep) {
        const auto inst = testgen::random_thermo(rng, 4);
        const GeneralizedState state = state_of(inst.xi);
        const OnsagerTensors tensors(inst.l2, inst.l3);
        const double raw_quad = testgen::naive_quadratic(inst);
        const double raw_cubic = testgen::naive_cubic(inst);
        REQUIRE(rel_diff(irrigen::thermo::entropy_rate_density(state, tensors),
                         raw_quad + 0.5 * raw_cubic) < 1e-12);
        REQUIRE(rel_diff(irrigen::thermo::dissipative_potential(state, tensors),
                         0.5 * raw_quad + raw_cubic / 6.0) < 1e-12);
    }
}

TEST_CASE("quadratic-only densities scale as c^2") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 200; ++rep) {
        const auto inst = testgen::random_thermo(rng, 5, /*with_cubic=*/false);
        const OnsagerTensors tensors = OnsagerTensors::quadratic(inst.l2);
        const double c = irrigen::uniform_in(rng, 0.2, 4.0);
        std::vector<double> scaled = inst.xi;
        for (auto& x : scaled) x *= c;
        const double base = irrigen::thermo::entropy_rate_density(state_of(inst.xi), tensors);
        const double stretched =
            irrigen::thermo::entropy_rate_density(state_of(scaled), tensors);
        REQUIRE(rel_diff(stretched, c * c * base) < 1e-10);
    }
}

TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(irrigen::thermo::entropy_rate_density(state_of({1.0}), kTwoByTwo),
                    std::invalid_argument);
    CHECK_THROWS_AS(irrigen::thermo::dissipative_potential(state_of({1.0, 2.0, 3.0}), kTwoByTwo),
                    std::invalid_argument);
    CHECK_THROWS_AS(irrigen::thermo::conjugate_momenta(state_of({1.0}), kTwoByTwo),
                    std::invalid_argument);
}

TEST_CASE("malformed states and tensors are rejected at construction") {
    CHECK_THROWS_AS(GeneralizedState({1.0, std::nan("")}), std::invalid_argument);
    CHECK_THROWS_AS(GeneralizedState({1.0}, std::vector<double>{1.0, 2.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(OnsagerTensors({{1.0, 2.0}}, {}), std::invalid_argument);
}

TEST_CASE("tensor construction symmetrizes") {
    const OnsagerTensors tensors({{0.0, 2.0}, {4.0, 0.0}},
                                 std::vector<std::vector<std::vector<double>>>(
                                     2, std::vector<std::vector<double>>(
                                            2, std::vector<double>(2, 0.0))));
    CHECK(tensors.l2(0, 1) == 3.0);
    CHECK(tensors.l2(1, 0) == 3.0);
}
