#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "irrigen/exergy/balance.hpp"
#include "irrigen/random.hpp"

using irrigen::rel_diff;
using irrigen::exergy::ProcessBalance;

namespace {

ProcessBalance heat_only(double q_r, double t_r, double t_a, double t_ref = 300.0) {
    ProcessBalance b;
    b.q_r = q_r;
    b.t_r = t_r;
    b.t_a = t_a;
    b.t_ref = t_ref;
    return b;
}

ProcessBalance random_balance(std::mt19937_64& rng) {
    auto energy = [&] { return irrigen::uniform_in(rng, -5000.0, 5000.0); };
    auto temperature = [&] { return irrigen::uniform_in(rng, 150.0, 900.0); };
    ProcessBalance b;
    b.q_r = energy();
    b.t_r = temperature();
    b.t_a = temperature();
    b.delta_h = energy();
    b.delta_s = energy() / 250.0;
    b.delta_ek = energy();
    b.delta_eg = energy();
    b.w = energy();
    b.t_ref = temperature();
    return b;
}

}  // namespace

TEST_CASE("entropy generation hand oracles") {
    CHECK(irrigen::exergy::entropy_generation(ProcessBalance{}) == 0.0);
    // (1000/300)(1 - 300/500) = 4/3
    CHECK(irrigen::exergy::entropy_generation(heat_only(1000.0, 500.0, 300.0)) ==
          Catch::Approx(4.0 / 3.0).epsilon(1e-12));
    // reversible isothermal case: dH/T_a - dS = 3000/300 - 10 = 0
    ProcessBalance reversible;
    reversible.t_r = 300.0;
    reversible.t_a = 300.0;
    reversible.delta_h = 3000.0;
    reversible.delta_s = 10.0;
    reversible.t_ref = 300.0;
    CHECK(std::fabs(irrigen::exergy::entropy_generation(reversible)) < 1e-12);
}

TEST_CASE("lost work is T_ref times the entropy generation") {
    CHECK(irrigen::exergy::lost_work(ProcessBalance{}) == 0.0);
    CHECK(irrigen::exergy::lost_work(heat_only(1000.0, 500.0, 300.0)) ==
          Catch::Approx(400.0).epsilon(1e-12));
    const auto at_600 = heat_only(1000.0, 500.0, 300.0, 600.0);
    CHECK(irrigen::exergy::lost_work(at_600) == Catch::Approx(800.0).epsilon(1e-12));
}

TEST_CASE("Lagrangian and Hamiltonian mirror the lost work") {
    const auto b = heat_only(1000.0, 500.0, 300.0);
    CHECK(irrigen::exergy::thermodynamic_lagrangian(b) == Catch::Approx(-400.0).epsilon(1e-12));
    CHECK(irrigen::exergy::thermodynamic_hamiltonian(b) == Catch::Approx(400.0).epsilon(1e-12));
    CHECK(irrigen::exergy::thermodynamic_lagrangian(ProcessBalance{}) == 0.0);
}

TEST_CASE("H = -L = W_lost exactly over random balances") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 1000; ++rep) {
        const auto b = random_balance(rng);
        const double h = irrigen::exergy::thermodynamic_hamiltonian(b);
        const double l = irrigen::exergy::thermodynamic_lagrangian(b);
        REQUIRE(h == -l);
        REQUIRE(h == irrigen::exergy::lost_work(b));
        REQUIRE(rel_diff(h, b.t_ref * irrigen::exergy::entropy_generation(b)) < 1e-12);
    }
}

TEST_CASE("entropy generation superposes along each energy term") {
    std::mt19937_64 rng(12);
    auto energy = [&rng] { return irrigen::uniform_in(rng, -2000.0, 2000.0); };
    const auto base = random_balance(rng);
    auto perturb = [&](auto setter) {
        auto with = [&](double v) {
            ProcessBalance b = base;
            setter(b, v);
            return irrigen::exergy::entropy_generation(b);
        };
        const double a = energy(), c = energy();
        const double lhs = with(a + c);
        const double rhs = with(a) + with(c) - with(0.0);
        REQUIRE(std::fabs(lhs - rhs) < 1e-9);
    };
    perturb([](ProcessBalance& b, double v) { b.q_r = v; });
    perturb([](ProcessBalance& b, double v) { b.delta_h = v; });
    perturb([](ProcessBalance& b, double v) { b.delta_ek = v; });
    perturb([](ProcessBalance& b, double v) { b.w = v; });
}

TEST_CASE("pure heat transfer is irreversible iff heat flows down the gradient") {
    for (double q : {-1500.0, -10.0, 0.0, 10.0, 1500.0})
        for (double t_r : {250.0, 300.0, 450.0, 700.0})
            for (double t_a : {250.0, 300.0, 450.0, 700.0}) {
                const double s = irrigen::exergy::entropy_generation(heat_only(q, t_r, t_a));
                REQUIRE((s >= 0.0) == (q * (t_r - t_a) >= 0.0));
            }
}

TEST_CASE("scaling all energy terms scales the entropy generation") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 100; ++rep) {
        auto b = random_balance(rng);
        const double c = 3.7;
        auto scaled = b;
        scaled.q_r *= c;
        scaled.delta_h *= c;
        scaled.delta_s *= c;
        scaled.delta_ek *= c;
        scaled.delta_eg *= c;
        scaled.w *= c;
        REQUIRE(rel_diff(irrigen::exergy::entropy_generation(scaled),
                         c * irrigen::exergy::entropy_generation(b)) < 1e-12);
    }
}

TEST_CASE("diagnostics flag unphysical negative generation without clamping") {
    const auto uphill = heat_only(1000.0, 300.0, 500.0);  // heat "from" the colder body
    const auto report = irrigen::exergy::analyze(uphill);
    CHECK(report.delta_s_irr < 0.0);
    CHECK_FALSE(report.second_law_ok);
    CHECK(report.hamiltonian == -report.lagrangian);
}

TEST_CASE("invalid balances are rejected") {
    auto bad = heat_only(1.0, -5.0, 300.0);
    CHECK_THROWS_AS(irrigen::exergy::entropy_generation(bad), std::invalid_argument);
    ProcessBalance nonfinite;
    nonfinite.delta_h = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(irrigen::exergy::entropy_generation(nonfinite), std::invalid_argument);
    ProcessBalance zero_flow;
    zero_flow.m_dot = 0.0;
    CHECK_THROWS_AS(irrigen::exergy::entropy_generation(zero_flow), std::invalid_argument);
}
