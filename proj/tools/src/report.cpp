#include "report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>

#include "weber_orr/version.hpp"

namespace weber_orr::cli {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double residual(const Row& r) {
    if (!r.reference) return std::numeric_limits<double>::quiet_NaN();
    return std::abs(cplx(r.value, r.value_im) - *r.reference) / (1.0 + std::fabs(*r.reference));
}

namespace {

// Status messages may contain commas or quotes.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c == '\n' ? ' ' : c;
    }
    return out + "\"";
}

}  // namespace

void write_csv(const std::filesystem::path& path, const std::vector<Row>& rows, const CsvLayout& layout) {
    std::string text = layout.x_name + (layout.complex_values ? ",value_re,value_im" : ",value") +
                       ",error_estimate,status";
    if (layout.with_reference) text += ",reference,residual";
    text += '\n';
    for (const Row& r : rows) {
        text += format_double(r.x) + ',' + format_double(r.value);
        if (layout.complex_values) text += ',' + format_double(r.value_im);
        text += ',' + format_double(r.error_estimate) + ',' + csv_field(r.status);
        if (layout.with_reference) {
            text += ',' + (r.reference ? format_double(*r.reference) : std::string("nan"));
            text += ',' + format_double(residual(r));
        }
        text += '\n';
    }
    write_text(path, text);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    out << text;
}

void write_manifest(const std::filesystem::path& path, const std::string& command, const json& config,
                    const json& summary) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    json m;
    m["command"] = command;
    m["version"] = kVersion;
    m["timestamp"] = stamp;
    m["config"] = config;
    m["summary"] = summary;
    write_text(path, m.dump(2) + "\n");
}

}  // namespace weber_orr::cli
