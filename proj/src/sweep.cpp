#include "alphagauge/sweep.hpp"

#include "alphagauge/perturbation.hpp"
#include "alphagauge/quantum_info.hpp"

#include <json.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace alphagauge {

using nlohmann::json;

namespace {

const std::vector<std::string> kObservableCatalog = {
    "energy", "energy_shift", "population_difference", "entanglement_entropy",
    "negativity", "bell_fidelity", "purity", "perturbative_overlay", "two_level_truncation"};

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (allowed.find(it.key()) == allowed.end()) {
            throw std::invalid_argument("config: unknown key '" + it.key() + "' in " + where);
        }
    }
}

std::vector<double> default_grid(double lo, double hi, double step) {
    std::vector<double> g;
    const int n = static_cast<int>(std::lround((hi - lo) / step));
    for (int i = 0; i <= n; ++i) g.push_back(lo + i * step);
    return g;
}

void validate_grid(const std::vector<double>& g, const std::string& name) {
    if (g.empty()) throw std::invalid_argument("config: " + name + " must be non-empty");
    for (double v : g) {
        if (!std::isfinite(v)) throw std::invalid_argument("config: " + name + " has non-finite value");
    }
}

json canonical_json(const SweepConfig& c) {
    json j;
    j["model"] = {{"iota", c.model.iota},
                  {"energy_scale", c.model.energy_scale},
                  {"grid_halfwidth", c.model.grid_halfwidth},
                  {"grid_points", c.model.grid_points},
                  {"levels", c.levels}};
    if (c.resonance) j["mode"] = {{"resonance", true}};
    else j["mode"] = {{"omega", c.omega}};
    j["n_dipoles"] = c.n_dipoles;
    j["eta_grid"] = c.eta_grid;
    j["alpha_grid"] = c.alpha_grid;
    j["observables"] = c.observables;
    j["tolerances"] = {{"energy", c.tolerances.energy}, {"entanglement", c.tolerances.entanglement}};
    j["cutoffs"] = {{"photon_start", c.cutoffs.photon_start}, {"level_start", c.cutoffs.level_start},
                    {"photon_step", c.cutoffs.photon_step},   {"level_step", c.cutoffs.level_step},
                    {"photon_max", c.cutoffs.photon_max},     {"level_max", c.cutoffs.level_max}};
    j["workers"] = c.workers;
    j["output"] = {{"csv", c.csv_path}, {"report", c.report_path}};
    return j;
}

} // namespace

SweepConfig parse_sweep_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
    reject_unknown_keys(j, {"model", "mode", "n_dipoles", "eta_grid", "alpha_grid", "observables",
                            "tolerances", "cutoffs", "workers", "output"}, "top level");

    SweepConfig c;
    if (j.contains("model")) {
        const json& m = j["model"];
        reject_unknown_keys(m, {"iota", "energy_scale", "grid_halfwidth", "grid_points", "levels"},
                            "model");
        c.model.iota = m.value("iota", c.model.iota);
        c.model.energy_scale = m.value("energy_scale", c.model.energy_scale);
        c.model.grid_halfwidth = m.value("grid_halfwidth", c.model.grid_halfwidth);
        c.model.grid_points = m.value("grid_points", c.model.grid_points);
        c.levels = m.value("levels", 0);
    }
    if (j.contains("mode")) {
        const json& m = j["mode"];
        reject_unknown_keys(m, {"resonance", "omega"}, "mode");
        const bool has_res = m.contains("resonance") && m["resonance"].get<bool>();
        if (m.contains("omega") && has_res) {
            throw std::invalid_argument("config: mode cannot set both resonance and omega");
        }
        if (m.contains("omega")) {
            c.resonance = false;
            c.omega = m["omega"].get<double>();
            if (!(c.omega > 0.0)) throw std::invalid_argument("config: mode.omega must be > 0");
        } else if (has_res) {
            c.resonance = true;
        } else {
            throw std::invalid_argument("config: mode must set resonance or omega");
        }
    }
    c.n_dipoles = j.value("n_dipoles", 1);
    if (c.n_dipoles != 1 && c.n_dipoles != 2) {
        throw std::invalid_argument("config: n_dipoles must be 1 or 2");
    }

    c.eta_grid = j.contains("eta_grid") ? j["eta_grid"].get<std::vector<double>>()
                                        : default_grid(0.0, 1.5, 0.05);
    c.alpha_grid = j.contains("alpha_grid") ? j["alpha_grid"].get<std::vector<double>>()
                                            : default_grid(0.0, 1.0, 0.05);
    validate_grid(c.eta_grid, "eta_grid");
    validate_grid(c.alpha_grid, "alpha_grid");
    for (double e : c.eta_grid) {
        if (e < 0.0) throw std::invalid_argument("config: eta_grid values must be >= 0");
    }

    if (j.contains("observables")) {
        c.observables = j["observables"].get<std::vector<std::string>>();
        std::set<std::string> seen;
        for (const auto& o : c.observables) {
            if (std::find(kObservableCatalog.begin(), kObservableCatalog.end(), o) ==
                kObservableCatalog.end()) {
                throw std::invalid_argument("config: unknown observable '" + o + "'");
            }
            if (!seen.insert(o).second) {
                throw std::invalid_argument("config: duplicate observable '" + o + "'");
            }
        }
    }
    if (c.n_dipoles == 2) {
        for (const auto& o : c.observables) {
            if (o == "population_difference" || o == "perturbative_overlay") {
                throw std::invalid_argument("config: observable '" + o + "' requires n_dipoles = 1");
            }
        }
    } else {
        for (const auto& o : c.observables) {
            if (o == "negativity" || o == "bell_fidelity") {
                throw std::invalid_argument("config: observable '" + o + "' requires n_dipoles = 2");
            }
        }
    }

    if (j.contains("tolerances")) {
        const json& t = j["tolerances"];
        reject_unknown_keys(t, {"energy", "entanglement"}, "tolerances");
        c.tolerances.energy = t.value("energy", c.tolerances.energy);
        c.tolerances.entanglement = t.value("entanglement", c.tolerances.entanglement);
        if (!(c.tolerances.energy > 0.0) || !(c.tolerances.entanglement > 0.0)) {
            throw std::invalid_argument("config: tolerances must be > 0");
        }
    }

    // Desk-scale ceilings; two dipoles cap lower so dense solves stay tractable.
    c.cutoffs.photon_max = c.n_dipoles == 2 ? 60 : 200;
    c.cutoffs.level_max = c.n_dipoles == 2 ? 8 : 16;
    if (j.contains("cutoffs")) {
        const json& k = j["cutoffs"];
        reject_unknown_keys(k, {"photon_start", "level_start", "photon_step", "level_step",
                                "photon_max", "level_max"}, "cutoffs");
        c.cutoffs.photon_start = k.value("photon_start", c.cutoffs.photon_start);
        c.cutoffs.level_start = k.value("level_start", c.cutoffs.level_start);
        c.cutoffs.photon_step = k.value("photon_step", c.cutoffs.photon_step);
        c.cutoffs.level_step = k.value("level_step", c.cutoffs.level_step);
        c.cutoffs.photon_max = k.value("photon_max", c.cutoffs.photon_max);
        c.cutoffs.level_max = k.value("level_max", c.cutoffs.level_max);
        if (c.cutoffs.photon_start < 2 || c.cutoffs.level_start < 2 || c.cutoffs.photon_step < 1 ||
            c.cutoffs.level_step < 1 || c.cutoffs.photon_max < c.cutoffs.photon_start ||
            c.cutoffs.level_max < c.cutoffs.level_start) {
            throw std::invalid_argument("config: invalid cutoffs block");
        }
    }
    if (c.levels == 0) c.levels = c.cutoffs.level_max;
    if (c.levels < c.cutoffs.level_max) {
        throw std::invalid_argument("config: model.levels below cutoffs.level_max");
    }

    c.workers = j.value("workers", 1);
    if (c.workers < 1) throw std::invalid_argument("config: workers must be >= 1");

    if (j.contains("output")) {
        const json& o = j["output"];
        reject_unknown_keys(o, {"csv", "report"}, "output");
        c.csv_path = o.value("csv", std::string{});
        c.report_path = o.value("report", std::string{});
    }
    return c;
}

SweepConfig load_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_sweep_config(ss.str());
}

std::string config_hash(const SweepConfig& config) {
    const std::string dump = canonical_json(config).dump();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : dump) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string format_csv_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

namespace {

bool wants(const SweepConfig& c, const std::string& name) {
    return std::find(c.observables.begin(), c.observables.end(), name) != c.observables.end();
}

std::vector<std::string> observable_columns_for(const SweepConfig& c) {
    std::vector<std::string> cols;
    if (wants(c, "energy_shift")) cols.push_back("energy_shift");
    if (wants(c, "population_difference")) cols.push_back("population_difference");
    if (wants(c, "entanglement_entropy")) {
        cols.push_back("entanglement_entropy");
        cols.push_back("schmidt_discrepancy");
    }
    if (wants(c, "negativity")) cols.push_back("negativity");
    if (wants(c, "bell_fidelity")) cols.push_back("bell_fidelity");
    if (wants(c, "purity")) cols.push_back("purity");
    if (wants(c, "perturbative_overlay")) {
        cols.push_back("beta_alpha_sq");
        cols.push_back("population_difference_pert");
        cols.push_back("entanglement_entropy_pert");
    }
    if (wants(c, "two_level_truncation")) {
        cols.push_back("energy_trunc2");
        if (wants(c, "population_difference")) cols.push_back("population_difference_trunc2");
        if (wants(c, "entanglement_entropy")) cols.push_back("entanglement_entropy_trunc2");
        if (wants(c, "negativity")) cols.push_back("negativity_trunc2");
        if (wants(c, "bell_fidelity")) cols.push_back("bell_fidelity_trunc2");
        if (wants(c, "purity")) cols.push_back("purity_trunc2");
    }
    return cols;
}

std::vector<std::string> dipole_labels(int n_dipoles) {
    return n_dipoles == 2 ? std::vector<std::string>{kDipole1Label, kDipole2Label}
                          : std::vector<std::string>{kDipoleLabel};
}

Vector embedded_bell_psi(int levels) {
    Vector v = Vector::Zero(static_cast<long>(levels) * levels);
    const double r = 1.0 / std::sqrt(2.0);
    v(0) = r;
    v(static_cast<long>(levels) + 1) = r;
    return v;
}

struct PointContext {
    const SweepConfig* config;
    const DipoleModel* model;
    double omega;
    double baseline_energy;   // converged E_G at eta = 0 (NaN if unused)
};

// Observables of one solved ground state; used for the full and the
// two-level-truncated model alike.
void fill_state_observables(const PointContext& ctx, const HermitianOperator& h,
                            const GroundStateResult& gs, const std::string& suffix,
                            SweepRecord& rec) {
    const SweepConfig& c = *ctx.config;
    const auto dips = dipole_labels(c.n_dipoles);
    const bool need_rho_m = wants(c, "population_difference") || wants(c, "negativity") ||
                            wants(c, "bell_fidelity") || wants(c, "purity");

    if (wants(c, "entanglement_entropy")) {
        const auto s = entanglement_entropy(h.space, gs.state, dips);
        rec.observables["entanglement_entropy" + suffix] = s.value;
        if (suffix.empty()) rec.observables["schmidt_discrepancy"] = s.discrepancy;
    }
    if (need_rho_m) {
        const DensityMatrix rho_m = partial_trace(h.space, gs.state, dips);
        if (wants(c, "population_difference")) {
            rec.observables["population_difference" + suffix] = population_difference(rho_m, *ctx.model);
        }
        if (wants(c, "negativity")) {
            rec.observables["negativity" + suffix] = negativity(rho_m, kDipole1Label);
        }
        if (wants(c, "bell_fidelity")) {
            const int lv = rho_m.space.dim(0);
            rec.observables["bell_fidelity" + suffix] = fidelity_pure(rho_m, embedded_bell_psi(lv));
        }
        if (wants(c, "purity")) rec.observables["purity" + suffix] = purity(rho_m);
    }
}

SweepRecord compute_point(const PointContext& ctx, double eta, double alpha) {
    const SweepConfig& c = *ctx.config;
    SweepRecord rec;
    rec.eta = eta;
    rec.alpha = alpha;

    ModelConfig mc;
    mc.omega = ctx.omega;
    mc.eta = eta;
    mc.alpha = alpha;
    mc.n_dipoles = c.n_dipoles;

    GroundStateResult gs;
    HermitianOperator h;
    try {
        gs = converge_cutoffs(
            [&](int n_ph, int lv) {
                ModelConfig probe = mc;
                probe.photon_cutoff = n_ph;
                probe.dipole_levels = lv;
                h = build_alpha_gauge(*ctx.model, probe);
                return h;
            },
            c.tolerances.energy, c.cutoffs);
    } catch (const CutoffCeilingError& e) {
        rec.converged = false;
        rec.trace = e.trace;
        if (!e.trace.empty()) {
            rec.photon_final = e.trace.back().photon_cutoff;
            rec.level_final = e.trace.back().dipole_levels;
        }
        return rec;
    }

    rec.converged = true;
    rec.energy = gs.energy;
    rec.gap = gs.gap;
    rec.degeneracy_warning = gs.degeneracy_warning;
    rec.trace = gs.cutoff_trace;
    rec.photon_final = gs.cutoff_trace.back().photon_cutoff;
    rec.level_final = gs.cutoff_trace.back().dipole_levels;

    mc.photon_cutoff = rec.photon_final;
    mc.dipole_levels = rec.level_final;

    if (wants(c, "energy_shift")) {
        rec.observables["energy_shift"] = gs.energy - ctx.baseline_energy;
    }
    fill_state_observables(ctx, h, gs, "", rec);

    if (wants(c, "perturbative_overlay")) {
        const PerturbativePoint pp = beta_alpha(eta, ctx.omega, ctx.model->omega_m, alpha);
        rec.observables["beta_alpha_sq"] = pp.p;
        rec.observables["population_difference_pert"] = 2.0 * pp.p - 1.0;
        rec.observables["entanglement_entropy_pert"] =
            pp.p <= 1.0 ? binary_entropy(pp.p) : std::nan("");
    }
    if (wants(c, "two_level_truncation")) {
        const HermitianOperator h_t = truncate_two_level(h, mc);
        const GroundStateResult gs_t = ground_state(h_t);
        rec.observables["energy_trunc2"] = gs_t.energy;
        fill_state_observables(ctx, h_t, gs_t, "_trunc2", rec);
    }
    return rec;
}

} // namespace

SweepResult run_sweep(const SweepConfig& config) {
    SweepResult result;
    result.config = config;

    const DipoleModel model = solve_double_well(config.model, config.levels);
    result.omega_m = model.omega_m;
    result.omega = config.resonance ? model.omega_m : config.omega;
    result.observable_columns = observable_columns_for(config);

    PointContext ctx{&config, &model, result.omega, std::nan("")};
    if (wants(config, "energy_shift")) {
        ModelConfig zero;
        zero.omega = result.omega;
        zero.eta = 0.0;
        zero.alpha = 1.0;
        zero.n_dipoles = config.n_dipoles;
        ctx.baseline_energy =
            converge_cutoffs(
                [&](int n_ph, int lv) {
                    ModelConfig probe = zero;
                    probe.photon_cutoff = n_ph;
                    probe.dipole_levels = lv;
                    return build_alpha_gauge(model, probe);
                },
                config.tolerances.energy, config.cutoffs)
                .energy;
    }

    struct Point {
        double eta, alpha;
    };
    std::vector<Point> points;
    for (double e : config.eta_grid)
        for (double a : config.alpha_grid) points.push_back({e, a});

    result.records.resize(points.size());
    std::atomic<size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;

    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= points.size()) return;
            try {
                result.records[i] = compute_point(ctx, points[i].eta, points[i].alpha);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    const int n_workers = std::min<int>(config.workers, static_cast<int>(points.size()));
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n_workers; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return result;
}

namespace {

std::vector<std::string> header_comments(const SweepResult& r) {
    const SweepConfig& c = r.config;
    std::vector<std::string> out;
    out.push_back("alphagauge sweep");
    out.push_back("config_hash: " + config_hash(c));
    {
        std::ostringstream os;
        os << "model: iota=" << format_csv_double(c.model.iota)
           << " energy_scale=" << format_csv_double(c.model.energy_scale)
           << " grid_halfwidth=" << format_csv_double(c.model.grid_halfwidth)
           << " grid_points=" << c.model.grid_points << " levels=" << c.levels;
        out.push_back(os.str());
    }
    {
        std::ostringstream os;
        os << "mode: " << (c.resonance ? "resonance" : "fixed") << " omega="
           << format_csv_double(r.omega) << " omega_m=" << format_csv_double(r.omega_m);
        out.push_back(os.str());
    }
    out.push_back("n_dipoles: " + std::to_string(c.n_dipoles));
    {
        std::ostringstream os;
        os << "tolerances: energy=" << format_csv_double(c.tolerances.energy)
           << " entanglement=" << format_csv_double(c.tolerances.entanglement);
        out.push_back(os.str());
    }
    {
        std::ostringstream os;
        os << "cutoffs: photon_start=" << c.cutoffs.photon_start
           << " level_start=" << c.cutoffs.level_start << " photon_step=" << c.cutoffs.photon_step
           << " level_step=" << c.cutoffs.level_step << " photon_max=" << c.cutoffs.photon_max
           << " level_max=" << c.cutoffs.level_max;
        out.push_back(os.str());
    }
    out.push_back("conventions: entropy=natural-log(nats) bell_fidelity=squared-overlap"
                  " floats=%.11e");
    return out;
}

} // namespace

std::string csv_to_string(const SweepResult& result) {
    std::ostringstream os;
    for (const auto& line : header_comments(result)) os << "# " << line << "\n";
    os << "eta,alpha,E_G,gap,converged,N_final,L_final,degeneracy_warning";
    for (const auto& col : result.observable_columns) os << "," << col;
    os << "\n";
    for (const auto& rec : result.records) {
        os << format_csv_double(rec.eta) << "," << format_csv_double(rec.alpha) << ",";
        if (rec.converged) {
            os << format_csv_double(rec.energy) << "," << format_csv_double(rec.gap);
        } else {
            os << ",";
        }
        os << "," << (rec.converged ? 1 : 0) << "," << rec.photon_final << "," << rec.level_final
           << "," << (rec.degeneracy_warning ? 1 : 0);
        for (const auto& col : result.observable_columns) {
            os << ",";
            const auto it = rec.observables.find(col);
            if (it != rec.observables.end() && std::isfinite(it->second)) {
                os << format_csv_double(it->second);
            }
        }
        os << "\n";
    }
    return os.str();
}

void write_csv(const SweepResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file '" + path + "'");
    out << csv_to_string(result);
    if (!out) throw IoError("failed writing '" + path + "'");
}

int CsvTable::column_index(const std::string& name) const {
    for (size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) return static_cast<int>(i);
    }
    return -1;
}

CsvTable parse_csv_string(const std::string& text) {
    CsvTable t;
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string c = line.substr(1);
            if (!c.empty() && c[0] == ' ') c = c.substr(1);
            t.comments.push_back(c);
            continue;
        }
        std::vector<std::string> fields;
        std::string cur;
        for (char ch : line) {
            if (ch == ',') {
                fields.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        fields.push_back(cur);
        if (!have_header) {
            t.columns = fields;
            have_header = true;
            continue;
        }
        std::vector<std::optional<double>> row;
        for (const auto& f : fields) {
            if (f.empty()) {
                row.push_back(std::nullopt);
            } else {
                size_t pos = 0;
                const double v = std::stod(f, &pos);
                if (pos != f.size()) throw std::invalid_argument("csv: bad numeric field '" + f + "'");
                row.push_back(v);
            }
        }
        if (row.size() != t.columns.size()) {
            throw std::invalid_argument("csv: row width does not match header");
        }
        t.rows.push_back(std::move(row));
    }
    if (!have_header) throw std::invalid_argument("csv: missing header row");
    return t;
}

CsvTable parse_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open csv file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_csv_string(ss.str());
}

std::vector<SweepRecord> records_from_csv(const CsvTable& table) {
    const std::vector<std::string> core = {"eta", "alpha", "E_G", "gap", "converged",
                                           "N_final", "L_final", "degeneracy_warning"};
    for (const auto& c : core) {
        if (table.column_index(c) < 0) throw std::invalid_argument("csv: missing column '" + c + "'");
    }
    std::vector<SweepRecord> out;
    for (const auto& row : table.rows) {
        SweepRecord r;
        auto get = [&](const std::string& name) {
            return row[static_cast<size_t>(table.column_index(name))];
        };
        r.eta = *get("eta");
        r.alpha = *get("alpha");
        r.converged = *get("converged") != 0.0;
        r.energy = get("E_G").value_or(std::nan(""));
        r.gap = get("gap").value_or(std::nan(""));
        r.photon_final = static_cast<int>(*get("N_final"));
        r.level_final = static_cast<int>(*get("L_final"));
        r.degeneracy_warning = *get("degeneracy_warning") != 0.0;
        for (size_t i = 0; i < table.columns.size(); ++i) {
            const auto& name = table.columns[i];
            if (std::find(core.begin(), core.end(), name) != core.end()) continue;
            if (row[i].has_value()) r.observables[name] = *row[i];
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string convergence_report(const SweepResult& result) {
    std::ostringstream os;
    os << "# alphagauge convergence report\n";
    os << "# config_hash: " << config_hash(result.config) << "\n";
    os << "eta,alpha,converged,N_final,L_final,gap,degeneracy_warning,trace\n";
    for (const auto& rec : result.records) {
        os << format_csv_double(rec.eta) << "," << format_csv_double(rec.alpha) << ","
           << (rec.converged ? 1 : 0) << "," << rec.photon_final << "," << rec.level_final << ",";
        if (rec.converged) os << format_csv_double(rec.gap);
        os << "," << (rec.degeneracy_warning ? 1 : 0) << ",\"";
        for (size_t i = 0; i < rec.trace.size(); ++i) {
            const auto& p = rec.trace[i];
            if (i) os << ";";
            os << "(" << p.photon_cutoff << "," << p.dipole_levels << ","
               << format_csv_double(p.energy) << ")";
        }
        os << "\"\n";
    }
    return os.str();
}

} // namespace alphagauge
