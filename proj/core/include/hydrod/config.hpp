#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace hydrod {

/// Numeric overrides from a flat key-value config file. Unset fields fall
/// through to the built-in defaults; CLI flags override both.
struct RunConfig {
    std::optional<double> r_min;
    std::optional<double> r_max;
    std::optional<int> n_points;
    std::optional<int> scan_points;
    std::optional<double> bisection_rel_tol;
    std::optional<long> mc_samples;
    std::optional<std::uint64_t> seed;
};

/// Parses `key = value` lines (# comments and blank lines allowed).
/// Accepted keys: r_min, r_max, n_points, scan_points, bisection_rel_tol,
/// mc_samples, seed. Unknown keys or malformed values throw
/// std::invalid_argument.
RunConfig parse_config(std::istream& in);

/// Reads and parses a config file; throws std::runtime_error when the file
/// cannot be opened.
RunConfig load_config(const std::string& path);

/// Fields set in `over` replace those in `base`.
void overlay_config(RunConfig& base, const RunConfig& over);

/// Name of the environment variable selecting the default config path.
inline constexpr const char* kConfigEnvVar = "HYDROD_CONFIG";

/// Config from $HYDROD_CONFIG if set, empty otherwise.
RunConfig env_default_config();

} // namespace hydrod
