#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "run_config.hpp"

namespace weber_orr::cli {

// One output row. status is "ok" or the error message of a failed point.
struct Row {
    double x = 0.0;
    double value = 0.0;
    double value_im = 0.0;
    double error_estimate = 0.0;
    std::string status = "ok";
    std::optional<double> reference;
};

struct CsvLayout {
    std::string x_name = "x";
    bool complex_values = false;
    bool with_reference = false;
};

// Residual |value - reference| / (1 + |reference|).
double residual(const Row& r);

void write_csv(const std::filesystem::path& path, const std::vector<Row>& rows, const CsvLayout& layout);
void write_text(const std::filesystem::path& path, const std::string& text);

// Manifest: command, library version, timestamp, config echo, summary.
void write_manifest(const std::filesystem::path& path, const std::string& command, const json& config,
                    const json& summary);

// Applies fn to every index on `workers` threads; results keep index order.
template <class T>
std::vector<T> parallel_map(std::size_t n, int workers, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(n);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) out[i] = fn(i);
    };
    const int k = std::max(1, std::min<int>(workers, static_cast<int>(n)));
    std::vector<std::thread> pool;
    for (int i = 1; i < k; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return out;
}

std::string format_double(double v);

}  // namespace weber_orr::cli
