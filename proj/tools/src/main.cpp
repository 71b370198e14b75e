#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "weber_orr/errors.hpp"
#include "weber_orr/version.hpp"

namespace fs = std::filesystem;
using namespace weber_orr;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNumeric = 1;
constexpr int kExitConfig = 2;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weber integral equation and Weber-Orr transforms"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string config;
    std::string out_dir = ".";
    auto add = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--config", config, "JSON run configuration")->required();
        sub->add_option("--output-dir", out_dir, "Directory for CSV/JSON reports");
        return sub;
    };
    CLI::App* transform = add("transform", "Evaluate a forward transform or roundtrip over an x-grid");
    CLI::App* solve = add("solve-weber", "Invert the Weber integral equation over an x-grid");
    CLI::App* verify = add("verify", "Run an identity suite over its case grid");
    CLI::App* mellin = add("mellin", "Forward or inverse Mellin transform over a grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        const cli::RunConfig rc = cli::load_config(config);
        fs::create_directories(out_dir);
        if (*transform) return cli::cmd_transform(rc, out_dir);
        if (*solve) return cli::cmd_solve_weber(rc, out_dir);
        if (*verify) return cli::cmd_verify(rc, out_dir);
        if (*mellin) return cli::cmd_mellin(rc, out_dir);
    } catch (const ParseError& e) {
        std::cerr << "weber-orr: expression error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ParameterError& e) {
        std::cerr << "weber-orr: " << e.what() << '\n';
        return kExitConfig;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "weber-orr: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "weber-orr: numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    }
    return kExitConfig;
}
