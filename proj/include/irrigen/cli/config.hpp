#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "irrigen/numerics.hpp"

namespace irrigen::cli {

enum class Mode { exergy, onsager, phase, variational, verify };
enum class KbMode { si, unit };

inline const char* mode_name(Mode m) {
    switch (m) {
        case Mode::exergy: return "exergy";
        case Mode::onsager: return "onsager";
        case Mode::phase: return "phase";
        case Mode::variational: return "variational";
        case Mode::verify: return "verify";
    }
    return "?";
}

inline std::optional<Mode> mode_from_name(const std::string& name) {
    if (name == "exergy") return Mode::exergy;
    if (name == "onsager") return Mode::onsager;
    if (name == "phase") return Mode::phase;
    if (name == "variational") return Mode::variational;
    if (name == "verify") return Mode::verify;
    return std::nullopt;
}

/// Configuration error with the offending line (0 when not tied to a line).
class ConfigError : public std::runtime_error {
public:
    ConfigError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

/// A fully validated run request. Numeric parameters (including materialized
/// defaults) live in `numbers`; enumerated/word parameters in `words`.
struct RunConfig {
    Mode mode = Mode::verify;
    std::map<std::string, double> numbers;
    std::map<std::string, std::string> words;
    std::string output_path;
    std::uint64_t seed = 0;
    KbMode kb_mode = KbMode::unit;

    bool operator==(const RunConfig&) const = default;

    double number(const std::string& key) const { return numbers.at(key); }
    std::optional<double> number_opt(const std::string& key) const {
        auto it = numbers.find(key);
        if (it == numbers.end()) return std::nullopt;
        return it->second;
    }
    std::size_t count(const std::string& key) const {
        return static_cast<std::size_t>(numbers.at(key));
    }
    std::optional<std::string> word_opt(const std::string& key) const {
        auto it = words.find(key);
        if (it == words.end()) return std::nullopt;
        return it->second;
    }
};

namespace detail {

struct RawEntry {
    std::string value;
    int line = 0;
    bool consumed = false;
};

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline bool valid_key(const std::string& k) {
    if (k.empty()) return false;
    for (char c : k)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

inline double parse_number(const std::string& text, const std::string& key, int line) {
    const std::string t = trim(text);
    if (t.empty()) throw ConfigError(line, "empty value for key '" + key + "'");
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size() || !std::isfinite(v))
        throw ConfigError(line, "bad number for key '" + key + "': '" + t + "'");
    return v;
}

/// Consumes validated keys from the raw section; whatever is left at
/// finish() is rejected with its line number.
class SectionReader {
public:
    SectionReader(std::map<std::string, RawEntry>& entries, const std::string& section)
        : entries_(entries), section_(section) {}

    std::optional<double> take_number(const std::string& key) {
        auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        it->second.consumed = true;
        return parse_number(it->second.value, key, it->second.line);
    }

    double need_number(const std::string& key) {
        auto v = take_number(key);
        if (!v)
            throw ConfigError(0, "missing required key '" + key + "' in section [" + section_ + "]");
        return *v;
    }

    std::optional<double> take_integer(const std::string& key, double lo, double hi) {
        auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        const int line = it->second.line;
        const double v = *take_number(key);
        if (v != std::floor(v) || v < lo || v > hi)
            throw ConfigError(line, "key '" + key + "' must be an integer in [" +
                                        std::to_string(static_cast<long long>(lo)) + ", " +
                                        std::to_string(static_cast<long long>(hi)) + "]");
        return v;
    }

    double need_integer(const std::string& key, double lo, double hi) {
        auto v = take_integer(key, lo, hi);
        if (!v)
            throw ConfigError(0, "missing required key '" + key + "' in section [" + section_ + "]");
        return *v;
    }

    std::optional<std::string> take_word(const std::string& key,
                                         const std::set<std::string>& allowed = {}) {
        auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        it->second.consumed = true;
        const std::string v = trim(it->second.value);
        if (!allowed.empty() && !allowed.count(v)) {
            std::string options;
            for (const auto& a : allowed) options += (options.empty() ? "" : ", ") + a;
            throw ConfigError(it->second.line, "key '" + key + "' must be one of {" + options +
                                                   "}, got '" + v + "'");
        }
        return v;
    }

    /// Claim every unconsumed key matching `prefix` followed by underscore-
    /// separated indices, each < n. Returns (indices -> value).
    std::vector<std::pair<std::vector<std::size_t>, double>> take_indexed(
        const std::string& prefix, std::size_t rank, std::size_t n) {
        std::vector<std::pair<std::vector<std::size_t>, double>> out;
        for (auto& [key, entry] : entries_) {
            if (entry.consumed) continue;
            if (key.rfind(prefix, 0) != 0) continue;
            const std::string tail = key.substr(prefix.size());
            std::vector<std::size_t> idx;
            std::size_t pos = 0;
            bool ok = !tail.empty();
            while (ok && pos < tail.size()) {
                std::size_t digits = 0;
                std::size_t value = 0;
                while (pos < tail.size() && std::isdigit(static_cast<unsigned char>(tail[pos]))) {
                    value = value * 10 + static_cast<std::size_t>(tail[pos] - '0');
                    ++pos;
                    ++digits;
                }
                if (digits == 0) {
                    ok = false;
                    break;
                }
                idx.push_back(value);
                if (pos < tail.size()) {
                    if (tail[pos] != '_') {
                        ok = false;
                        break;
                    }
                    ++pos;
                    if (pos == tail.size()) ok = false;  // trailing underscore
                }
            }
            if (!ok) continue;  // not an index pattern for this prefix; left for finish()
            if (idx.size() != rank)
                throw ConfigError(entry.line, "key '" + key + "' must carry " +
                                                  std::to_string(rank) + " indices");
            for (std::size_t i : idx)
                if (i >= n)
                    throw ConfigError(entry.line, "key '" + key + "' index out of range (n = " +
                                                      std::to_string(n) + ")");
            entry.consumed = true;
            out.emplace_back(idx, parse_number(entry.value, key, entry.line));
        }
        return out;
    }

    void finish() const {
        for (const auto& [key, entry] : entries_)
            if (!entry.consumed)
                throw ConfigError(entry.line,
                                  "unknown key '" + key + "' in section [" + section_ + "]");
    }

private:
    std::map<std::string, RawEntry>& entries_;
    std::string section_;
};

inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace detail

inline RunConfig parse_config(const std::string& text);

/// Canonical text form; parse_config(render_config(c)) == c for every valid c.
inline std::string render_config(const RunConfig& cfg) {
    std::ostringstream out;
    out << "[" << mode_name(cfg.mode) << "]\n";
    out << "kb_mode = " << (cfg.kb_mode == KbMode::si ? "si" : "unit") << "\n";
    out << "output = " << cfg.output_path << "\n";
    out << "seed = " << cfg.seed << "\n";
    for (const auto& [key, value] : cfg.words) out << key << " = " << value << "\n";
    for (const auto& [key, value] : cfg.numbers)
        out << key << " = " << detail::format_g17(value) << "\n";
    return out.str();
}

namespace detail {

inline void validate_exergy(SectionReader& reader, RunConfig& cfg) {
    for (const char* key : {"q_r", "t_r", "t_a", "delta_h", "delta_s", "delta_ek", "delta_eg", "w"})
        cfg.numbers[key] = reader.need_number(key);
    // Lower reservoir defaults to the ambient.
    cfg.numbers["t_ref"] = reader.take_number("t_ref").value_or(cfg.numbers["t_a"]);
    if (auto m = reader.take_number("m_dot")) cfg.numbers["m_dot"] = *m;
}

inline void validate_onsager(SectionReader& reader, RunConfig& cfg) {
    const double n = reader.need_integer("n", 1, 16);
    cfg.numbers["n"] = n;
    const auto count = static_cast<std::size_t>(n);
    for (auto& [idx, v] : reader.take_indexed("xi_dot_", 1, count))
        cfg.numbers["xi_dot_" + std::to_string(idx[0])] = v;
    for (auto& [idx, v] : reader.take_indexed("xi_", 1, count))
        cfg.numbers["xi_" + std::to_string(idx[0])] = v;
    for (std::size_t i = 0; i < count; ++i)
        if (!cfg.numbers.count("xi_" + std::to_string(i)))
            throw ConfigError(0, "missing required key 'xi_" + std::to_string(i) +
                                     "' in section [onsager]");
    for (auto& [idx, v] : reader.take_indexed("l2_", 2, count))
        cfg.numbers["l2_" + std::to_string(idx[0]) + "_" + std::to_string(idx[1])] = v;
    for (auto& [idx, v] : reader.take_indexed("l3_", 3, count))
        cfg.numbers["l3_" + std::to_string(idx[0]) + "_" + std::to_string(idx[1]) + "_" +
                    std::to_string(idx[2])] = v;
    auto rho_s = reader.take_number("rho_s");
    auto rho_pi = reader.take_number("rho_pi");
    if (rho_s.has_value() != rho_pi.has_value())
        throw ConfigError(0, "keys 'rho_s' and 'rho_pi' must be given together");
    if (rho_s) {
        cfg.numbers["rho_s"] = *rho_s;
        cfg.numbers["rho_pi"] = *rho_pi;
    }
}

inline void validate_phase(SectionReader& reader, RunConfig& cfg) {
    static const std::set<std::string> systems = {
        "golden_rotation", "rotation",       "logistic",       "standard_map", "scaling_map",
        "linear_contraction", "cubic_contraction", "rotation_field", "cellular_flow"};
    const std::string system = reader.take_word("system", systems).value_or("");
    if (system.empty())
        throw ConfigError(0, "missing required key 'system' in section [phase]");
    cfg.words["system"] = system;

    const bool is_flow = system == "linear_contraction" || system == "cubic_contraction" ||
                         system == "rotation_field" || system == "cellular_flow";
    std::size_t dim = 1;
    if (system == "standard_map" || system == "rotation_field" || system == "cellular_flow")
        dim = 2;
    if (system == "linear_contraction" || system == "scaling_map") {
        dim = static_cast<std::size_t>(reader.take_integer("dim", 1, 6).value_or(1));
        cfg.numbers["dim"] = double(dim);
    }

    cfg.numbers["steps"] = reader.need_integer("steps", 1, 1e12);
    cfg.numbers["samples"] = reader.take_integer("samples", 1, 1e9).value_or(10000);
    cfg.numbers["obs_coord"] = reader.take_integer("obs_coord", 0, double(dim - 1)).value_or(0);
    cfg.numbers["sample_lo"] = reader.take_number("sample_lo").value_or(0.0);
    cfg.numbers["sample_hi"] = reader.take_number("sample_hi").value_or(1.0);
    if (!(cfg.numbers["sample_lo"] < cfg.numbers["sample_hi"]))
        throw ConfigError(0, "'sample_lo' must be below 'sample_hi'");
    cfg.numbers["traj_points"] =
        reader.take_integer("traj_points", 2, 1e7)
            .value_or(std::min(cfg.numbers["steps"] + 1.0, 1001.0));
    cfg.numbers["cycle_tol"] = reader.take_number("cycle_tol").value_or(1e-9);
    for (std::size_t i = 0; i < dim; ++i) {
        const std::string key = "x0_" + std::to_string(i);
        auto v = reader.take_number(key);
        cfg.numbers[key] = v.value_or(0.3);
    }

    if (is_flow) cfg.numbers["dt"] = reader.need_number("dt");
    if (system == "rotation") cfg.numbers["alpha"] = reader.need_number("alpha");
    if (system == "scaling_map") cfg.numbers["factor"] = reader.need_number("factor");
    if (system == "linear_contraction")
        cfg.numbers["lambda"] = reader.take_number("lambda").value_or(0.5);
    if (system == "standard_map") cfg.numbers["kick"] = reader.take_number("kick").value_or(0.9);
    if (system == "logistic") cfg.numbers["r"] = reader.take_number("r").value_or(4.0);
    if (auto m = reader.take_number("m_dot")) {
        if (*m <= 0.0) throw ConfigError(0, "'m_dot' must be positive");
        cfg.numbers["m_dot"] = *m;
    }
    if (auto p = reader.take_word("dump_trajectory")) cfg.words["dump_trajectory"] = *p;
    if (auto p = reader.take_word("dump_ensemble")) cfg.words["dump_ensemble"] = *p;
}

inline void validate_variational(SectionReader& reader, RunConfig& cfg) {
    static const std::set<std::string> families = {"quadratic", "exergy_heat"};
    const std::string family = reader.take_word("family", families).value_or("");
    if (family.empty())
        throw ConfigError(0, "missing required key 'family' in section [variational]");
    cfg.words["family"] = family;

    if (family == "quadratic") {
        const double n = reader.need_integer("n", 1, 16);
        cfg.numbers["n"] = n;
        const auto count = static_cast<std::size_t>(n);
        cfg.numbers["peak"] = reader.take_number("peak").value_or(0.0);
        for (std::size_t i = 0; i < count; ++i) {
            const std::string suffix = "_" + std::to_string(i);
            cfg.numbers["center" + suffix] = reader.take_number("center" + suffix).value_or(0.0);
            const double curv = reader.take_number("curv" + suffix).value_or(1.0);
            if (curv <= 0.0) throw ConfigError(0, "'curv" + suffix + "' must be positive");
            cfg.numbers["curv" + suffix] = curv;
            cfg.numbers["lo" + suffix] = reader.need_number("lo" + suffix);
            cfg.numbers["hi" + suffix] = reader.need_number("hi" + suffix);
            if (!(cfg.numbers["lo" + suffix] < cfg.numbers["hi" + suffix]))
                throw ConfigError(0, "'lo" + suffix + "' must be below 'hi" + suffix + "'");
        }
        cfg.numbers["t_ref"] = reader.take_number("t_ref").value_or(1.0);
    } else {  // exergy_heat: theta = Q_r through the full balance
        for (const char* key : {"t_r", "t_a", "t_ref", "q_lo", "q_hi"})
            cfg.numbers[key] = reader.need_number(key);
        if (!(cfg.numbers["q_lo"] < cfg.numbers["q_hi"]))
            throw ConfigError(0, "'q_lo' must be below 'q_hi'");
        for (const char* key : {"delta_h", "delta_s", "delta_ek", "delta_eg", "w"})
            cfg.numbers[key] = reader.take_number(key).value_or(0.0);
    }

    cfg.numbers["max_iters"] = reader.take_integer("max_iters", 1, 1e7).value_or(400);
    cfg.numbers["restarts"] = reader.take_integer("restarts", 0, 1e4).value_or(4);
    cfg.numbers["tol_value"] = reader.take_number("tol_value").value_or(1e-12);
    cfg.numbers["tol_param"] = reader.take_number("tol_param").value_or(1e-9);
    cfg.numbers["fd_step"] = reader.take_number("fd_step").value_or(1e-4);
    cfg.numbers["probe_step"] = reader.take_number("probe_step").value_or(1e-4);
    cfg.numbers["horizon"] = reader.take_number("horizon").value_or(1.0);
    cfg.numbers["dt"] = reader.take_number("dt").value_or(0.01);
    for (const char* key : {"tol_value", "tol_param", "fd_step", "probe_step", "horizon", "dt"})
        if (cfg.numbers[key] <= 0.0)
            throw ConfigError(0, std::string("'") + key + "' must be positive");
}

}  // namespace detail

inline RunConfig parse_config(const std::string& text) {
    std::map<std::string, detail::RawEntry> entries;
    std::optional<Mode> mode;
    int mode_line = 0;

    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string line = detail::trim(raw);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(line_no, "malformed section header '" + line + "'");
            const std::string name = detail::trim(line.substr(1, line.size() - 2));
            const auto m = mode_from_name(name);
            if (!m) throw ConfigError(line_no, "unknown mode '" + name + "'");
            if (mode)
                throw ConfigError(line_no, "unexpected second section [" + name +
                                               "] (first at line " + std::to_string(mode_line) +
                                               ")");
            mode = m;
            mode_line = line_no;
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(line_no, "expected 'key = value', got '" + line + "'");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        if (!detail::valid_key(key))
            throw ConfigError(line_no, "malformed key '" + key + "'");
        if (value.empty()) throw ConfigError(line_no, "empty value for key '" + key + "'");
        if (!mode) throw ConfigError(line_no, "key '" + key + "' appears before any section");
        if (auto it = entries.find(key); it != entries.end())
            throw ConfigError(line_no, "duplicate key '" + key + "' (first defined at line " +
                                           std::to_string(it->second.line) + ")");
        entries[key] = detail::RawEntry{value, line_no, false};
    }
    if (!mode) throw ConfigError(0, "no section header found; expected one of [exergy], "
                                    "[onsager], [phase], [variational], [verify]");

    RunConfig cfg;
    cfg.mode = *mode;
    detail::SectionReader reader(entries, mode_name(cfg.mode));

    // Reserved keys shared by every mode.
    if (auto s = reader.take_integer("seed", 0, 9.007199254740992e15))
        cfg.seed = static_cast<std::uint64_t>(*s);
    const std::string default_kb = cfg.mode == Mode::exergy ? "si" : "unit";
    const std::string kb = reader.take_word("kb_mode", {"si", "unit"}).value_or(default_kb);
    cfg.kb_mode = kb == "si" ? KbMode::si : KbMode::unit;
    cfg.output_path = reader.take_word("output").value_or(std::string(mode_name(cfg.mode)) +
                                                          "_report.csv");

    switch (cfg.mode) {
        case Mode::exergy: detail::validate_exergy(reader, cfg); break;
        case Mode::onsager: detail::validate_onsager(reader, cfg); break;
        case Mode::phase: detail::validate_phase(reader, cfg); break;
        case Mode::variational: detail::validate_variational(reader, cfg); break;
        case Mode::verify: break;
    }
    reader.finish();
    return cfg;
}

}  // namespace irrigen::cli
