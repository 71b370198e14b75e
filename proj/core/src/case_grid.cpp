#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "weber_orr/case_grid.hpp"
#include "weber_orr/errors.hpp"

namespace weber_orr {
namespace {

using json = nlohmann::ordered_json;

double real_field(const json& v, const std::string& key) {
    if (!v.is_number()) throw ParameterError("case grid: '" + key + "' must be a number");
    return v.get<double>();
}

cplx complex_field(const json& v, const std::string& key) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return {v[0].get<double>(), v[1].get<double>()};
    }
    throw ParameterError("case grid: '" + key + "' must be a number or a [re, im] pair");
}

std::vector<double> list_field(const json& v, const std::string& key) {
    if (!v.is_array()) throw ParameterError("case grid: '" + key + "' must be an array of numbers");
    std::vector<double> out;
    for (const auto& e : v) out.push_back(real_field(e, key));
    return out;
}

IdentityCase parse_case(const json& j, std::size_t index) {
    if (!j.is_object()) throw ParameterError("case grid: case " + std::to_string(index) + " is not an object");
    IdentityCase c;
    c.label = "case-" + std::to_string(index);
    for (const auto& [key, v] : j.items()) {
        if (key == "label") {
            if (!v.is_string()) throw ParameterError("case grid: 'label' must be a string");
            c.label = v.get<std::string>();
        } else if (key == "nu") {
            c.nu = real_field(v, key);
        } else if (key == "a") {
            c.a = real_field(v, key);
        } else if (key == "x") {
            c.x = real_field(v, key);
        } else if (key == "s") {
            c.s = complex_field(v, key);
        } else if (key == "w") {
            c.w = complex_field(v, key);
        } else if (key == "gamma") {
            c.gamma_abscissa = real_field(v, key);
        } else if (key == "n_cut") {
            c.n_cut = real_field(v, key);
        } else if (key == "n_values") {
            c.n_values = list_field(v, key);
        } else if (key == "t_grid") {
            c.t_grid = list_field(v, key);
        } else if (key == "tau_min") {
            c.tau_min = real_field(v, key);
        } else if (key == "tau_max") {
            c.tau_max = real_field(v, key);
        } else {
            throw ParameterError("case grid: unknown key '" + key + "' in case " + std::to_string(index));
        }
    }
    return c;
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json case_json(const IdentityCase& c) {
    json j;
    j["label"] = c.label;
    j["nu"] = c.nu;
    j["a"] = c.a;
    j["x"] = c.x;
    j["s"] = complex_json(c.s);
    j["w"] = complex_json(c.w);
    if (!std::isnan(c.gamma_abscissa)) j["gamma"] = c.gamma_abscissa;
    j["n_cut"] = c.n_cut;
    j["n_values"] = c.n_values;
    j["t_grid"] = c.t_grid;
    j["tau_min"] = c.tau_min;
    j["tau_max"] = c.tau_max;
    return j;
}

// JSON has no inf/nan; those become strings.
json number_json(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

}  // namespace

CaseGrid parse_case_grid(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParameterError(std::string("case grid: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("suite") || !doc["suite"].is_string()) {
        throw ParameterError("case grid: expected an object with a string 'suite'");
    }
    CaseGrid grid;
    grid.suite = doc["suite"].get<std::string>();
    const auto& names = identity_suites();
    if (std::find(names.begin(), names.end(), grid.suite) == names.end()) {
        throw ParameterError("case grid: unknown suite '" + grid.suite + "'");
    }
    if (doc.contains("cases")) {
        if (!doc["cases"].is_array()) throw ParameterError("case grid: 'cases' must be an array");
        std::set<std::string> labels;
        for (std::size_t i = 0; i < doc["cases"].size(); ++i) {
            IdentityCase c = parse_case(doc["cases"][i], i);
            if (!labels.insert(c.label).second) throw ParameterError("case grid: duplicate label '" + c.label + "'");
            check_constraints(grid.suite, c);
            grid.cases.push_back(std::move(c));
        }
    }
    for (const auto& [key, v] : doc.items()) {
        if (key != "suite" && key != "cases" && key != "description") {
            throw ParameterError("case grid: unknown top-level key '" + key + "'");
        }
    }
    return grid;
}

CaseGrid load_case_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("case grid: cannot open '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return parse_case_grid(text.str());
    } catch (const ConstraintError& e) {
        throw ConstraintError(e.constraint(), path + ", " + e.detail());
    }
}

std::string case_to_json(const IdentityCase& c) { return case_json(c).dump(); }

std::string reports_to_json(const std::vector<IdentityReport>& reports, int indent) {
    json out = json::array();
    for (const auto& r : reports) {
        json j;
        j["suite"] = r.suite;
        j["label"] = r.label;
        j["lhs"] = json::array({number_json(r.lhs.real()), number_json(r.lhs.imag())});
        j["rhs"] = json::array({number_json(r.rhs.real()), number_json(r.rhs.imag())});
        j["abs_diff"] = number_json(r.abs_diff);
        j["rel_diff"] = number_json(r.rel_diff);
        j["lhs_error_estimate"] = number_json(r.lhs_error_estimate);
        j["imaginary_residue"] = number_json(r.imaginary_residue);
        if (r.has_cross_check) {
            j["cross_check"] = json::array({number_json(r.cross_check.real()), number_json(r.cross_check.imag())});
            j["cross_check_diff"] = number_json(r.cross_check_diff);
        }
        j["tolerance"] = number_json(r.tolerance);
        j["criterion"] = r.criterion;
        j["passed"] = r.passed;
        j["note"] = r.note;
        out.push_back(std::move(j));
    }
    return out.dump(indent);
}

}  // namespace weber_orr
