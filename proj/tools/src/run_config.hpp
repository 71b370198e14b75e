#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "weber_orr/errors.hpp"
#include "weber_orr/mellin.hpp"
#include "weber_orr/weber.hpp"

namespace weber_orr::cli {

using json = nlohmann::ordered_json;

// Thrown for anything wrong with the config document itself; maps to exit code 2.
class ConfigError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

struct RunConfig {
    json doc;
    std::filesystem::path base_dir;  // relative paths resolve against the config file
};

RunConfig load_config(const std::filesystem::path& path);

// Accessors that name the offending key on failure.
double get_number(const json& obj, const std::string& key, double fallback);
int get_int(const json& obj, const std::string& key, int fallback);
std::string get_string(const json& obj, const std::string& key, const std::string& fallback);
const json& require(const json& obj, const std::string& key);

// "params": {a, nu, mu, tol, n_cut, t_height, strict}
TransformConfig parse_params(const json& doc);

// "function": {"expr": "...", "origin_exponent": 0.5, "tail": "exponential", "rate": 1}
//           | {"table": "samples.csv", ...} | {"zero": true}
RadialFunction parse_function(const json& spec, const RunConfig& rc, double domain_lo);

// "grid": {"points": [...]} | {"start": lo, "stop": hi, "count": n, "spacing": "linear" | "log"}
std::vector<double> parse_grid(const json& spec);

// CSV with header "x,value", '.' decimal point.
RadialFunction read_table(const std::filesystem::path& path, DecayHint hint, double domain_lo);

}  // namespace weber_orr::cli
