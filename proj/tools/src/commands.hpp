#pragma once

#include <filesystem>

#include "run_config.hpp"

namespace weber_orr::cli {

// Each command validates the whole config before computing and returns the
// process exit code: 0 success, 1 numeric failure or tolerance breach.
// Config problems throw (ConfigError, ParameterError, ParseError).
int cmd_transform(const RunConfig& rc, const std::filesystem::path& out_dir);
int cmd_solve_weber(const RunConfig& rc, const std::filesystem::path& out_dir);
int cmd_verify(const RunConfig& rc, const std::filesystem::path& out_dir);
int cmd_mellin(const RunConfig& rc, const std::filesystem::path& out_dir);

}  // namespace weber_orr::cli
