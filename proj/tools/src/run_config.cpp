#include "run_config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "weber_orr/errors.hpp"

namespace weber_orr::cli {

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
    RunConfig rc;
    try {
        rc.doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config '" + path.string() + "' is not valid JSON: " + e.what());
    }
    if (!rc.doc.is_object()) throw ConfigError("config must be a JSON object");
    rc.base_dir = path.parent_path();
    return rc;
}

const json& require(const json& obj, const std::string& key) {
    if (!obj.is_object() || !obj.contains(key)) throw ConfigError("missing key '" + key + "'");
    return obj.at(key);
}

double get_number(const json& obj, const std::string& key, double fallback) {
    if (!obj.is_object() || !obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) throw ConfigError("'" + key + "' must be a number");
    return v.get<double>();
}

int get_int(const json& obj, const std::string& key, int fallback) {
    if (!obj.is_object() || !obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) throw ConfigError("'" + key + "' must be an integer");
    return v.get<int>();
}

std::string get_string(const json& obj, const std::string& key, const std::string& fallback) {
    if (!obj.is_object() || !obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_string()) throw ConfigError("'" + key + "' must be a string");
    return v.get<std::string>();
}

TransformConfig parse_params(const json& doc) {
    const json empty = json::object();
    const json& p = doc.contains("params") ? doc.at("params") : empty;
    if (!p.is_object()) throw ConfigError("'params' must be an object");
    TransformConfig cfg;
    cfg.a = get_number(p, "a", cfg.a);
    cfg.nu = get_number(p, "nu", cfg.nu);
    cfg.line.mu = get_number(p, "mu", cfg.line.mu);
    cfg.line.t_height = get_number(p, "t_height", cfg.line.t_height);
    cfg.policy.tol = get_number(p, "tol", cfg.policy.tol);
    cfg.policy.n_cut = get_number(p, "n_cut", cfg.policy.n_cut);
    cfg.policy.t_height = cfg.line.t_height;
    if (p.contains("strict")) {
        if (!p.at("strict").is_boolean()) throw ConfigError("'strict' must be true or false");
        cfg.strict = p.at("strict").get<bool>();
    }
    return cfg;
}

namespace {

DecayHint parse_hint(const json& spec) {
    DecayHint h;
    h.origin_exponent = get_number(spec, "origin_exponent", h.origin_exponent);
    const std::string tail = get_string(spec, "tail", "exponential");
    if (tail == "exponential") {
        h.tail = DecayHint::Tail::exponential;
    } else if (tail == "algebraic") {
        h.tail = DecayHint::Tail::algebraic;
    } else {
        throw ConfigError("'tail' must be \"exponential\" or \"algebraic\"");
    }
    h.infinity_rate = get_number(spec, "rate", h.infinity_rate);
    return h;
}

}  // namespace

RadialFunction parse_function(const json& spec, const RunConfig& rc, double domain_lo) {
    if (!spec.is_object()) throw ConfigError("function spec must be an object");
    if (spec.contains("zero")) return RadialFunction::zero(domain_lo);
    const DecayHint hint = parse_hint(spec);
    if (spec.contains("expr")) {
        // ParseError propagates with its offset.
        return RadialFunction::from_expression(get_string(spec, "expr", ""), hint, domain_lo);
    }
    if (spec.contains("table")) {
        std::filesystem::path p = get_string(spec, "table", "");
        if (p.is_relative()) p = rc.base_dir / p;
        return read_table(p, hint, domain_lo);
    }
    throw ConfigError("function spec needs one of 'expr', 'table' or 'zero'");
}

std::vector<double> parse_grid(const json& spec) {
    if (!spec.is_object()) throw ConfigError("'grid' must be an object");
    std::vector<double> xs;
    if (spec.contains("points")) {
        const json& pts = spec.at("points");
        if (!pts.is_array()) throw ConfigError("'points' must be an array");
        for (const auto& v : pts) {
            if (!v.is_number()) throw ConfigError("grid points must be numbers");
            xs.push_back(v.get<double>());
        }
        return xs;
    }
    require(spec, "start");
    require(spec, "stop");
    const double lo = get_number(spec, "start", 0.0);
    const double hi = get_number(spec, "stop", 0.0);
    const int n = get_int(spec, "count", 0);
    const std::string spacing = get_string(spec, "spacing", "linear");
    if (n < 1) throw ConfigError("'count' must be at least 1");
    if (!(hi >= lo)) throw ConfigError("grid needs start <= stop");
    if (spacing == "log" && !(lo > 0.0)) throw ConfigError("log grid needs start > 0");
    if (spacing != "linear" && spacing != "log") throw ConfigError("'spacing' must be \"linear\" or \"log\"");
    for (int i = 0; i < n; ++i) {
        const double f = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
        xs.push_back(spacing == "log" ? lo * std::pow(hi / lo, f) : lo + f * (hi - lo));
    }
    return xs;
}

RadialFunction read_table(const std::filesystem::path& path, DecayHint hint, double domain_lo) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open table '" + path.string() + "'");
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("table '" + path.string() + "' is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (line != "x,value") throw ConfigError("table '" + path.string() + "': header must be \"x,value\"");
    std::vector<double> xs;
    std::vector<double> ys;
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw ConfigError("table '" + path.string() + "' row " + std::to_string(row) + ": expected two columns");
        }
        try {
            std::size_t used = 0;
            const std::string a = line.substr(0, comma);
            const std::string b = line.substr(comma + 1);
            xs.push_back(std::stod(a, &used));
            if (used != a.size()) throw std::invalid_argument(a);
            ys.push_back(std::stod(b, &used));
            if (used != b.size()) throw std::invalid_argument(b);
        } catch (const std::logic_error&) {
            throw ConfigError("table '" + path.string() + "' row " + std::to_string(row) + ": not a number");
        }
    }
    return RadialFunction::from_table(std::move(xs), std::move(ys), hint, domain_lo);
}

}  // namespace weber_orr::cli
