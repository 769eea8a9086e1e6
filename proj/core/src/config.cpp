#include "hydrod/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hydrod {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
    std::istringstream ss(text);
    T value;
    ss >> value;
    if (ss.fail() || !(ss >> std::ws).eof())
        throw std::invalid_argument("config: bad value for '" + key + "': '" + text + "'");
    return value;
}

} // namespace

RunConfig parse_config(std::istream& in) {
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "r_min")
            cfg.r_min = parse_number<double>(key, val);
        else if (key == "r_max")
            cfg.r_max = parse_number<double>(key, val);
        else if (key == "n_points")
            cfg.n_points = parse_number<int>(key, val);
        else if (key == "scan_points")
            cfg.scan_points = parse_number<int>(key, val);
        else if (key == "bisection_rel_tol")
            cfg.bisection_rel_tol = parse_number<double>(key, val);
        else if (key == "mc_samples")
            cfg.mc_samples = parse_number<long>(key, val);
        else if (key == "seed")
            cfg.seed = parse_number<std::uint64_t>(key, val);
        else
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("config: cannot open '" + path + "'");
    return parse_config(in);
}

void overlay_config(RunConfig& base, const RunConfig& over) {
    if (over.r_min)
        base.r_min = over.r_min;
    if (over.r_max)
        base.r_max = over.r_max;
    if (over.n_points)
        base.n_points = over.n_points;
    if (over.scan_points)
        base.scan_points = over.scan_points;
    if (over.bisection_rel_tol)
        base.bisection_rel_tol = over.bisection_rel_tol;
    if (over.mc_samples)
        base.mc_samples = over.mc_samples;
    if (over.seed)
        base.seed = over.seed;
}

RunConfig env_default_config() {
    const char* path = std::getenv(kConfigEnvVar);
    if (path == nullptr || *path == '\0')
        return {};
    return load_config(path);
}

} // namespace hydrod
