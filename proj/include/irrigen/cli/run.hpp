#pragma once

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "irrigen/cli/report.hpp"
#include "irrigen/cli/verify.hpp"
#include "irrigen/phase/averages.hpp"
#include "irrigen/phase/contraction.hpp"
#include "irrigen/phase/systems.hpp"
#include "irrigen/thermo/densities.hpp"
#include "irrigen/variational/action.hpp"

namespace irrigen::cli {

/// Exit statuses of run().
enum ExitStatus : int {
    exit_ok = 0,
    exit_validation_error = 1,
    exit_numerical_failure = 2,
    exit_verify_failure = 3,
};

struct RunOptions {
    std::filesystem::path out_dir = ".";
    std::optional<std::uint64_t> seed_override;
    bool sequential = false;
    std::ostream* diagnostics = &std::cerr;
};

namespace run_detail {

inline thermo::PhysicalConstants constants_for(const RunConfig& cfg) {
    return cfg.kb_mode == KbMode::si ? thermo::PhysicalConstants::si()
                                     : thermo::PhysicalConstants::unit();
}

inline std::vector<Row> run_exergy(const RunConfig& cfg) {
    exergy::ProcessBalance balance;
    balance.q_r = cfg.number("q_r");
    balance.t_r = cfg.number("t_r");
    balance.t_a = cfg.number("t_a");
    balance.delta_h = cfg.number("delta_h");
    balance.delta_s = cfg.number("delta_s");
    balance.delta_ek = cfg.number("delta_ek");
    balance.delta_eg = cfg.number("delta_eg");
    balance.w = cfg.number("w");
    balance.t_ref = cfg.number("t_ref");
    balance.m_dot = cfg.number_opt("m_dot");
    const auto report = exergy::analyze(balance);
    return {
        {"delta_s_irr", report.delta_s_irr},
        {"w_lost", report.w_lost},
        {"lagrangian", report.lagrangian},
        {"hamiltonian", report.hamiltonian},
        {"second_law_ok", report.second_law_ok ? 1.0 : 0.0},
    };
}

inline std::vector<Row> run_onsager(const RunConfig& cfg) {
    const std::size_t n = cfg.count("n");
    std::vector<double> xi(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) xi[i] = cfg.number("xi_" + std::to_string(i));
    std::optional<std::vector<double>> xi_dot;
    for (std::size_t i = 0; i < n; ++i)
        if (auto v = cfg.number_opt("xi_dot_" + std::to_string(i))) {
            if (!xi_dot) xi_dot.emplace(n, 0.0);
            (*xi_dot)[i] = *v;
        }
    std::vector<std::vector<double>> l2(n, std::vector<double>(n, 0.0));
    std::vector<std::vector<std::vector<double>>> l3(
        n, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (auto v = cfg.number_opt("l2_" + std::to_string(i) + "_" + std::to_string(j)))
                l2[i][j] = *v;
            for (std::size_t k = 0; k < n; ++k)
                if (auto v = cfg.number_opt("l3_" + std::to_string(i) + "_" + std::to_string(j) +
                                            "_" + std::to_string(k)))
                    l3[i][j][k] = *v;
        }
    const thermo::GeneralizedState state(std::move(xi), std::move(xi_dot));
    const thermo::OnsagerTensors tensors(l2, l3);
    const auto consistency =
        thermo::consistency_report(state, tensors, cfg.number_opt("rho_s"),
                                   cfg.number_opt("rho_pi"));
    const auto momenta = thermo::conjugate_momenta(state, tensors);
    double momentum_max = 0.0;
    for (double z : momenta) momentum_max = std::max(momentum_max, std::fabs(z));
    std::vector<Row> rows = {
        {"entropy_rate_density", thermo::entropy_rate_density(state, tensors)},
        {"dissipative_potential", thermo::dissipative_potential(state, tensors)},
        {"lagrangian_density", thermo::lagrangian_density(state, tensors)},
        {"hamiltonian_density", thermo::hamiltonian_density(state, tensors)},
        {"conjugate_momenta_max_abs", momentum_max},
        {"residual_decomposition", consistency.decomposition},
        {"residual_potential_gap", consistency.potential_gap},
        {"residual_cubic_claim", consistency.cubic_claim},
    };
    if (consistency.lavenda) rows.emplace_back("residual_lavenda", *consistency.lavenda);
    return rows;
}

struct PhaseSetup {
    phase::DynamicalLaw law;
    std::size_t dim;
};

inline PhaseSetup phase_system(const RunConfig& cfg) {
    namespace sys = phase::systems;
    const std::string& name = cfg.words.at("system");
    if (name == "golden_rotation") return {sys::golden_rotation(), 1};
    if (name == "rotation") return {sys::circle_rotation(cfg.number("alpha")), 1};
    if (name == "logistic") return {sys::logistic_map(cfg.number("r")), 1};
    if (name == "standard_map") return {sys::standard_map(cfg.number("kick")), 2};
    if (name == "scaling_map") {
        const std::size_t dim = cfg.count("dim");
        return {sys::scaling_map(cfg.number("factor"), dim), dim};
    }
    if (name == "linear_contraction") {
        const std::size_t dim = cfg.count("dim");
        return {sys::linear_contraction_flow(cfg.number("lambda"), cfg.number("dt"), dim), dim};
    }
    if (name == "cubic_contraction") return {sys::cubic_contraction_flow(cfg.number("dt")), 1};
    if (name == "rotation_field") return {sys::rotation_field(cfg.number("dt")), 2};
    if (name == "cellular_flow") return {sys::cellular_flow(cfg.number("dt")), 2};
    throw std::invalid_argument("unknown phase system '" + name + "'");
}

inline std::vector<Row> run_phase(const RunConfig& cfg, std::uint64_t seed,
                                  const ExecutionPolicy& policy,
                                  const std::filesystem::path& out_dir) {
    const auto setup = phase_system(cfg);
    const auto constants = constants_for(cfg);
    const auto steps = cfg.count("steps");
    const auto samples = cfg.count("samples");
    const auto observable = phase::coordinate(cfg.count("obs_coord"));

    phase::Vec start(setup.dim);
    for (std::size_t i = 0; i < setup.dim; ++i) start[i] = cfg.number("x0_" + std::to_string(i));
    const phase::PhasePoint x0(start);

    const double lo = cfg.number("sample_lo");
    const double hi = cfg.number("sample_hi");
    const auto ensemble =
        setup.dim == 1 ? phase::EnsembleMeasure::stratified_uniform(samples, lo, hi, seed)
                       : phase::EnsembleMeasure::uniform_random(samples, lo, hi, seed, setup.dim);

    const double time_avg = phase::time_average(setup.law, x0, observable, steps);
    const double ens_avg = phase::ensemble_average(ensemble, observable, policy);

    std::vector<Row> rows = {
        {"time_average", time_avg},
        {"ensemble_average", ens_avg},
        {"birkhoff_residual", std::fabs(time_avg - ens_avg)},
    };

    if (setup.law.is_flow()) {
        const double sigma = phase::entropy_production(setup.law, ensemble, constants, policy);
        rows.emplace_back("entropy_production", sigma);
        if (auto m_dot = cfg.number_opt("m_dot"))
            rows.emplace_back("entropy_generation_statistical", sigma / *m_dot);
    } else {
        const auto contraction =
            phase::contraction_rate_map_report(setup.law, ensemble, constants, 1e-5, policy);
        rows.emplace_back("contraction_rate", contraction.rate);
        rows.emplace_back("contraction_rejected", double(contraction.rejected));
        rows.emplace_back("contraction_expanding", contraction.expanding ? 1.0 : 0.0);
    }

    const auto stored = phase::evolve(setup.law, x0, cfg.count("traj_points") - 1);
    rows.emplace_back("is_cycle",
                      phase::is_cycle(stored, cfg.number("cycle_tol")) ? 1.0 : 0.0);
    rows.emplace_back("trajectory_truncated", stored.truncated ? 1.0 : 0.0);

    if (auto path = cfg.word_opt("dump_trajectory"))
        write_trajectory_csv(out_dir / *path, stored);
    if (auto path = cfg.word_opt("dump_ensemble")) write_ensemble_csv(out_dir / *path, ensemble);
    return rows;
}

inline variational::StateFamily variational_family(const RunConfig& cfg) {
    const std::string& family = cfg.words.at("family");
    if (family == "quadratic") {
        const std::size_t n = cfg.count("n");
        const double peak = cfg.number("peak");
        std::vector<double> center(n), curv(n);
        std::vector<variational::Bounds> bounds(n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::string suffix = "_" + std::to_string(i);
            center[i] = cfg.number("center" + suffix);
            curv[i] = cfg.number("curv" + suffix);
            bounds[i] = {cfg.number("lo" + suffix), cfg.number("hi" + suffix)};
        }
        auto eval = [peak, center, curv](std::span<const double> theta) {
            double v = peak;
            for (std::size_t i = 0; i < theta.size(); ++i) {
                const double d = theta[i] - center[i];
                v -= curv[i] * d * d;
            }
            return v;
        };
        return variational::StateFamily(n, std::move(eval), std::move(bounds));
    }
    // exergy_heat: theta in [q_lo, q_hi] is the heat drawn from the source
    exergy::ProcessBalance base;
    base.t_r = cfg.number("t_r");
    base.t_a = cfg.number("t_a");
    base.t_ref = cfg.number("t_ref");
    base.delta_h = cfg.number("delta_h");
    base.delta_s = cfg.number("delta_s");
    base.delta_ek = cfg.number("delta_ek");
    base.delta_eg = cfg.number("delta_eg");
    base.w = cfg.number("w");
    return variational::StateFamily::from_balances(
        1,
        [base](std::span<const double> theta) {
            exergy::ProcessBalance b = base;
            b.q_r = theta[0];
            return b;
        },
        {{cfg.number("q_lo"), cfg.number("q_hi")}});
}

inline std::vector<Row> run_variational(const RunConfig& cfg, std::uint64_t seed,
                                        const std::filesystem::path& out_dir,
                                        const std::filesystem::path& report_path) {
    const auto family = variational_family(cfg);
    variational::OptimizerConfig config;
    config.max_iters = cfg.count("max_iters");
    config.restarts = cfg.count("restarts");
    config.tol_value = cfg.number("tol_value");
    config.tol_param = cfg.number("tol_param");
    config.fd_step = cfg.number("fd_step");
    config.seed = seed;

    const auto result = variational::maximize_entropy_generation(family, config);
    const auto stationarity =
        variational::stationarity_check(family, result.theta, config.fd_step);
    const double t_ref = cfg.number("t_ref");
    const auto least_action =
        variational::least_action_check(family, result.theta, t_ref, cfg.number("horizon"),
                                        cfg.number("dt"), cfg.number("probe_step"));

    std::vector<Row> rows;
    for (std::size_t k = 0; k < result.theta.size(); ++k)
        rows.emplace_back("theta_" + std::to_string(k), result.theta[k]);
    rows.emplace_back("value", result.value);
    rows.emplace_back("converged", result.converged ? 1.0 : 0.0);
    rows.emplace_back("evaluations", double(result.evaluations));
    rows.emplace_back("stationarity_max_violation", stationarity.max_violation);
    rows.emplace_back("stationarity_gradient_norm", stationarity.gradient_norm);
    rows.emplace_back("stationarity_on_boundary", stationarity.on_boundary ? 1.0 : 0.0);
    rows.emplace_back("action_at_star", least_action.action_at_star);
    rows.emplace_back("min_probe_action", least_action.probes > 0
                                              ? least_action.min_probe_action
                                              : least_action.action_at_star);
    rows.emplace_back("least_action_minimal", least_action.minimal ? 1.0 : 0.0);

    std::filesystem::path trace_path = report_path;
    trace_path.replace_extension();
    trace_path += "_trace.csv";
    write_trace_csv(trace_path, result.trace, family.dim());
    (void)out_dir;
    return rows;
}

}  // namespace run_detail

/// Execute a validated config: compute, write the report CSV (plus any mode
/// side outputs) under opts.out_dir, and return the process exit status.
inline int run(const RunConfig& cfg, const RunOptions& opts = {}) {
    std::ostream* diag = opts.diagnostics;
    const std::uint64_t seed = opts.seed_override.value_or(cfg.seed);
    const ExecutionPolicy policy = opts.sequential ? ExecutionPolicy::sequential()
                                                   : ExecutionPolicy{};
    try {
        std::filesystem::create_directories(opts.out_dir);
        const std::filesystem::path report_path = opts.out_dir / cfg.output_path;
        std::vector<Row> rows;
        int status = exit_ok;
        switch (cfg.mode) {
            case Mode::exergy: rows = run_detail::run_exergy(cfg); break;
            case Mode::onsager: rows = run_detail::run_onsager(cfg); break;
            case Mode::phase: rows = run_detail::run_phase(cfg, seed, policy, opts.out_dir); break;
            case Mode::variational:
                rows = run_detail::run_variational(cfg, seed, opts.out_dir, report_path);
                break;
            case Mode::verify: {
                const auto checks = run_verify_suite(seed, policy);
                std::size_t failed = 0;
                for (const auto& check : checks) {
                    rows.emplace_back("check_" + check.name, check.pass ? 1.0 : 0.0);
                    if (!check.pass) ++failed;
                }
                rows.emplace_back("checks_total", double(checks.size()));
                rows.emplace_back("checks_failed", double(failed));
                if (failed > 0) status = exit_verify_failure;
                break;
            }
        }
        write_report(report_path, rows);
        for (const auto& [key, value] : rows)
            if (!std::isfinite(value)) {
                if (diag) *diag << "irrigen: non-finite result for '" << key << "'\n";
                return exit_numerical_failure;
            }
        return status;
    } catch (const ConfigError& e) {
        if (diag) *diag << "irrigen: config error: " << e.what() << "\n";
        return exit_validation_error;
    } catch (const std::invalid_argument& e) {
        if (diag) *diag << "irrigen: invalid input: " << e.what() << "\n";
        return exit_validation_error;
    } catch (const std::domain_error& e) {
        if (diag) *diag << "irrigen: numerical failure: " << e.what() << "\n";
        return exit_numerical_failure;
    } catch (const std::exception& e) {
        if (diag) *diag << "irrigen: error: " << e.what() << "\n";
        return exit_numerical_failure;
    }
}

}  // namespace irrigen::cli
