// Command-line front end: run <config>, plotdata <rundir>, validate <config>.
// Exit codes: 0 success, 2 invalid configuration, 3 numerical divergence.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "capwave/errors.hpp"
#include "capwave/io.hpp"

namespace {

const char* thread_env = "CAPWAVE_THREADS";  // reserved; all kernels run serial

int do_run(const std::string& config) {
    capwave::RunManifest mf = capwave::run_scenario(config);
    for (const auto& c : mf.checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "  measured=" << c.measured
                  << "  (" << c.detail << ")\n";
    }
    std::cout << (mf.all_pass() ? "all checks passed\n" : "some checks failed\n");
    return 0;
}

int do_validate(const std::string& config) {
    capwave::ScenarioConfig cfg = capwave::load_config(config);
    capwave::validate_config(cfg);
    std::cout << "config ok; wraparound time " << cfg.wraparound_time() << "\n";
    return 0;
}

int do_plotdata(const std::string& rundir) {
    auto files = capwave::emit_plotdata(rundir);
    for (const auto& f : files) std::cout << f << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"capillary wave laboratory"};
    app.require_subcommand(1);

    std::string config, rundir;
    auto* run_cmd = app.add_subcommand("run", "execute a scenario config");
    run_cmd->add_option("config", config, "scenario JSON file")->required();
    auto* val_cmd = app.add_subcommand("validate", "validate a scenario config");
    val_cmd->add_option("config", config, "scenario JSON file")->required();
    auto* plot_cmd = app.add_subcommand("plotdata", "emit plot CSVs for a run directory");
    plot_cmd->add_option("rundir", rundir, "completed run directory")->required();

    if (const char* threads = std::getenv(thread_env); threads && *threads) {
        std::cerr << "note: " << thread_env << " is reserved; kernels run serial\n";
    }

    try {
        CLI11_PARSE(app, argc, argv);
        if (run_cmd->parsed()) return do_run(config);
        if (val_cmd->parsed()) return do_validate(config);
        if (plot_cmd->parsed()) return do_plotdata(rundir);
    } catch (const capwave::config_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const capwave::divergence_error& e) {
        std::cerr << "numerical divergence: " << e.what() << "\n";
        if (!e.residual_history.empty()) {
            std::cerr << "residual history:";
            for (double r : e.residual_history) std::cerr << " " << r;
            std::cerr << "\n";
        }
        return 3;
    } catch (const capwave::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
