#pragma once

#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "irrigen/cli/config.hpp"
#include "irrigen/phase/ensemble.hpp"
#include "irrigen/variational/nelder_mead.hpp"

namespace irrigen::cli {

/// One report line. All values are numbers (booleans as 0/1) rendered at 17
/// significant digits, which round-trips doubles exactly.
using Row = std::pair<std::string, double>;

inline std::string format_value(double v) { return detail::format_g17(v); }

namespace detail {

inline std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!out) throw std::runtime_error("cannot open output file " + path.string());
    return out;
}

}  // namespace detail

inline void write_report(const std::filesystem::path& path, std::span<const Row> rows) {
    auto out = detail::open_out(path);
    out << "key,value\n";
    for (const auto& [key, value] : rows) out << key << "," << format_value(value) << "\n";
}

inline void write_trace_csv(const std::filesystem::path& path,
                            std::span<const variational::TraceEntry> trace, std::size_t dim) {
    auto out = detail::open_out(path);
    out << "iteration";
    for (std::size_t k = 0; k < dim; ++k) out << ",theta_" << k;
    out << ",value\n";
    for (const auto& entry : trace) {
        out << entry.index;
        for (double t : entry.theta) out << "," << format_value(t);
        out << "," << format_value(entry.value) << "\n";
    }
}

inline void write_trajectory_csv(const std::filesystem::path& path,
                                 const phase::Trajectory& traj) {
    auto out = detail::open_out(path);
    out << "index";
    for (std::size_t k = 0; k < traj.front().dim(); ++k) out << ",c" << k;
    out << ",weight\n";
    for (std::size_t i = 0; i < traj.size(); ++i) {
        out << i;
        for (double c : traj.points[i].coords) out << "," << format_value(c);
        out << "," << format_value(1.0) << "\n";
    }
}

inline void write_ensemble_csv(const std::filesystem::path& path,
                               const phase::EnsembleMeasure& mu) {
    auto out = detail::open_out(path);
    out << "index";
    for (std::size_t k = 0; k < mu.dim(); ++k) out << ",c" << k;
    out << ",weight\n";
    for (std::size_t i = 0; i < mu.size(); ++i) {
        out << i;
        for (double c : mu.samples()[i].coords) out << "," << format_value(c);
        out << "," << format_value(mu.weights()[i]) << "\n";
    }
}

}  // namespace irrigen::cli
