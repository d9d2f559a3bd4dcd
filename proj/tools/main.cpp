// alphagauge — α-gauge toy models of one or two anharmonic dipoles coupled to a
// single mode: ground-state sweeps, gauge-relative subsystem observables,
// CSV output, and SVG figure rendering.

#include "alphagauge/cli.hpp"

#include <CLI11.hpp>

int main(int argc, char** argv) {
    CLI::App app{"alpha-gauge dipole-mode toy models"};
    app.require_subcommand(1);

    std::string sweep_config;
    auto* sweep = app.add_subcommand("sweep", "run an (eta, alpha) sweep and write a CSV");
    sweep->add_option("config", sweep_config, "sweep config JSON")->required();

    std::string plot_csv, plot_spec;
    auto* plot = app.add_subcommand("plot", "render an SVG line chart from a sweep CSV");
    plot->add_option("csv", plot_csv, "input CSV")->required();
    plot->add_option("plotspec", plot_spec, "plot spec JSON")->required();

    std::string converge_config;
    auto* converge = app.add_subcommand("converge", "emit a cutoff-convergence report");
    converge->add_option("config", converge_config, "sweep config JSON")->required();

    std::string oracle_point;
    auto* oracle = app.add_subcommand("oracle", "print weak-coupling closed forms for one point");
    oracle->add_option("point", oracle_point, "point JSON with eta, omega, omega_m, alpha")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : alphagauge::cli::kExitConfig;
    }

    if (sweep->parsed()) return alphagauge::cli::run_sweep_verb(sweep_config);
    if (plot->parsed()) return alphagauge::cli::run_plot_verb(plot_csv, plot_spec);
    if (converge->parsed()) return alphagauge::cli::run_converge_verb(converge_config);
    if (oracle->parsed()) return alphagauge::cli::run_oracle_verb(oracle_point);
    return alphagauge::cli::kExitConfig;
}
