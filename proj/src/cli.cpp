#include "alphagauge/cli.hpp"

#include "alphagauge/eig.hpp"
#include "alphagauge/perturbation.hpp"
#include "alphagauge/svg_plot.hpp"
#include "alphagauge/sweep.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace alphagauge::cli {

namespace {

// Config/validation problems -> 2, numerics -> 3, I/O -> 4.
int classify(const std::exception& e) {
    if (dynamic_cast<const IoError*>(&e)) return kExitIo;
    if (dynamic_cast<const ConvergenceError*>(&e)) return kExitConvergence;
    if (dynamic_cast<const eig::EigError*>(&e)) return kExitConvergence;
    if (dynamic_cast<const std::invalid_argument*>(&e)) return kExitConfig;
    return kExitConfig;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify(e);
    }
}

} // namespace

int run_sweep_verb(const std::string& config_path) {
    return guarded([&] {
        const SweepConfig config = load_sweep_config(config_path);
        if (config.csv_path.empty()) {
            throw std::invalid_argument("config: output.csv is required for the sweep verb");
        }
        const SweepResult result = run_sweep(config);
        write_csv(result, config.csv_path);
        size_t failed = 0;
        for (const auto& r : result.records) {
            if (!r.converged) ++failed;
        }
        std::cout << "sweep: " << result.records.size() << " points, " << failed
                  << " unconverged, csv written to " << config.csv_path << "\n";
        return failed == 0 ? kExitOk : kExitConvergence;
    });
}

int run_plot_verb(const std::string& csv_path, const std::string& spec_path) {
    return guarded([&] {
        const PlotSpec spec = load_plot_spec(spec_path);
        render_plot(csv_path, spec);
        std::cout << "plot: svg written to " << spec.output << "\n";
        return kExitOk;
    });
}

int run_converge_verb(const std::string& config_path) {
    return guarded([&] {
        const SweepConfig config = load_sweep_config(config_path);
        const SweepResult result = run_sweep(config);
        const std::string report = convergence_report(result);
        if (config.report_path.empty()) {
            std::cout << report;
        } else {
            std::ofstream out(config.report_path, std::ios::binary);
            if (!out) throw IoError("cannot open output file '" + config.report_path + "'");
            out << report;
            if (!out) throw IoError("failed writing '" + config.report_path + "'");
            std::cout << "converge: report written to " << config.report_path << "\n";
        }
        size_t failed = 0;
        for (const auto& r : result.records) {
            if (!r.converged) ++failed;
        }
        return failed == 0 ? kExitOk : kExitConvergence;
    });
}

int run_oracle_verb(const std::string& point_path) {
    return guarded([&] {
        std::ifstream in(point_path);
        if (!in) throw IoError("cannot open point file '" + point_path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(ss.str());
        } catch (const nlohmann::json::parse_error& e) {
            throw std::invalid_argument(std::string("point: invalid JSON: ") + e.what());
        }
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string k = it.key();
            if (k != "eta" && k != "omega" && k != "omega_m" && k != "alpha") {
                throw std::invalid_argument("point: unknown key '" + k + "'");
            }
        }
        for (const char* req : {"eta", "omega", "omega_m", "alpha"}) {
            if (!j.contains(req)) {
                throw std::invalid_argument(std::string("point: missing key '") + req + "'");
            }
        }
        const PerturbativePoint p = beta_alpha(j["eta"].get<double>(), j["omega"].get<double>(),
                                               j["omega_m"].get<double>(), j["alpha"].get<double>());
        auto line = [](const char* name, double v) {
            std::printf("%s=%s\n", name, format_csv_double(v).c_str());
        };
        line("eta", p.eta);
        line("omega", p.omega);
        line("omega_m", p.omega_m);
        line("alpha", p.alpha);
        line("beta_alpha", p.beta);
        line("beta_local", p.beta_local);
        line("s_static", p.s_static);
        line("p_excited", p.p);
        line("population_difference", 2.0 * p.p - 1.0);
        if (p.p <= 1.0) line("entanglement_entropy", binary_entropy(p.p));
        line("alpha_jc", jc_gauge(p.omega, p.omega_m));
        return kExitOk;
    });
}

} // namespace alphagauge::cli
