#include "alphagauge/svg_plot.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace alphagauge {

using nlohmann::json;

namespace {

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Round a raw step to 1/2/5 times a power of ten.
double nice_step(double range, int target_ticks) {
    const double raw = range / target_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double r = raw / mag;
    double step = 10.0;
    if (r <= 1.0) step = 1.0;
    else if (r <= 2.0) step = 2.0;
    else if (r <= 5.0) step = 5.0;
    return step * mag;
}

struct Series {
    double key = 0.0;
    std::vector<std::pair<double, double>> points;
    std::vector<std::pair<double, double>> overlay;
};

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

} // namespace

PlotSpec parse_plot_spec(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("plot spec: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("plot spec: top level must be an object");
    const std::set<std::string> allowed = {"x", "y", "series_by", "series_values", "overlay",
                                           "title", "x_label", "y_label", "output",
                                           "width", "height"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (allowed.find(it.key()) == allowed.end()) {
            throw std::invalid_argument("plot spec: unknown key '" + it.key() + "'");
        }
    }
    PlotSpec s;
    for (const char* req : {"x", "y", "series_by", "output"}) {
        if (!j.contains(req)) {
            throw std::invalid_argument(std::string("plot spec: missing required key '") + req + "'");
        }
    }
    s.x = j["x"].get<std::string>();
    s.y = j["y"].get<std::string>();
    s.series_by = j["series_by"].get<std::string>();
    s.output = j["output"].get<std::string>();
    if (j.contains("series_values")) s.series_values = j["series_values"].get<std::vector<double>>();
    s.overlay = j.value("overlay", std::string{});
    s.title = j.value("title", std::string{});
    s.x_label = j.value("x_label", s.x);
    s.y_label = j.value("y_label", s.y);
    s.width = j.value("width", s.width);
    s.height = j.value("height", s.height);
    if (s.width < 100 || s.height < 100) throw std::invalid_argument("plot spec: size too small");
    return s;
}

PlotSpec load_plot_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open plot spec '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_plot_spec(ss.str());
}

std::string render_plot_svg(const CsvTable& table, const PlotSpec& spec) {
    const int xi = table.column_index(spec.x);
    const int yi = table.column_index(spec.y);
    const int si = table.column_index(spec.series_by);
    if (xi < 0) throw std::invalid_argument("plot: missing column '" + spec.x + "'");
    if (yi < 0) throw std::invalid_argument("plot: missing column '" + spec.y + "'");
    if (si < 0) throw std::invalid_argument("plot: missing column '" + spec.series_by + "'");
    int oi = -1;
    if (!spec.overlay.empty()) {
        oi = table.column_index(spec.overlay);
        if (oi < 0) throw std::invalid_argument("plot: missing overlay column '" + spec.overlay + "'");
    }

    std::vector<double> keys = spec.series_values;
    if (keys.empty()) {
        std::set<double> distinct;
        for (const auto& row : table.rows) {
            if (row[static_cast<size_t>(si)].has_value()) distinct.insert(*row[static_cast<size_t>(si)]);
        }
        keys.assign(distinct.begin(), distinct.end());
    }
    if (keys.empty()) throw std::invalid_argument("plot: no series values");

    std::vector<Series> series;
    for (double key : keys) {
        Series s;
        s.key = key;
        for (const auto& row : table.rows) {
            const auto& sv = row[static_cast<size_t>(si)];
            const auto& xv = row[static_cast<size_t>(xi)];
            const auto& yv = row[static_cast<size_t>(yi)];
            if (!sv.has_value() || !xv.has_value() || *sv != key) continue;
            if (yv.has_value()) s.points.push_back({*xv, *yv});
            if (oi >= 0 && row[static_cast<size_t>(oi)].has_value()) {
                s.overlay.push_back({*xv, *row[static_cast<size_t>(oi)]});
            }
        }
        std::stable_sort(s.points.begin(), s.points.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::stable_sort(s.overlay.begin(), s.overlay.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        if (s.points.empty()) {
            throw std::invalid_argument("plot: empty series for " + spec.series_by + " = " +
                                        fmt_tick(key));
        }
        series.push_back(std::move(s));
    }

    double xmin = series[0].points[0].first, xmax = xmin;
    double ymin = series[0].points[0].second, ymax = ymin;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            xmin = std::min(xmin, x); xmax = std::max(xmax, x);
            ymin = std::min(ymin, y); ymax = std::max(ymax, y);
        }
        for (const auto& [x, y] : s.overlay) {
            xmin = std::min(xmin, x); xmax = std::max(xmax, x);
            ymin = std::min(ymin, y); ymax = std::max(ymax, y);
        }
    }
    if (xmax == xmin) { xmin -= 0.5; xmax += 0.5; }
    if (ymax == ymin) { ymin -= 0.5; ymax += 0.5; }
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const double ml = 72, mr = 24, mt = spec.title.empty() ? 24 : 44, mb = 52;
    const double pw = spec.width - ml - mr;
    const double ph = spec.height - mt - mb;
    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return mt + ph - (y - ymin) / (ymax - ymin) * ph; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width
       << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width << " "
       << spec.height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!spec.title.empty()) {
        os << "<text x=\"" << fmt2(ml + pw / 2) << "\" y=\"24\" text-anchor=\"middle\""
           << " font-family=\"sans-serif\" font-size=\"15\">" << spec.title << "</text>\n";
    }

    // Axes frame
    os << "<rect x=\"" << fmt2(ml) << "\" y=\"" << fmt2(mt) << "\" width=\"" << fmt2(pw)
       << "\" height=\"" << fmt2(ph) << "\" fill=\"none\" stroke=\"#333333\"/>\n";

    const double xstep = nice_step(xmax - xmin, 6);
    for (double t = std::ceil(xmin / xstep) * xstep; t <= xmax + 1e-12 * xstep; t += xstep) {
        os << "<line x1=\"" << fmt2(px(t)) << "\" y1=\"" << fmt2(mt + ph) << "\" x2=\""
           << fmt2(px(t)) << "\" y2=\"" << fmt2(mt + ph + 5) << "\" stroke=\"#333333\"/>\n";
        os << "<text x=\"" << fmt2(px(t)) << "\" y=\"" << fmt2(mt + ph + 18)
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
           << fmt_tick(t) << "</text>\n";
    }
    const double ystep = nice_step(ymax - ymin, 6);
    for (double t = std::ceil(ymin / ystep) * ystep; t <= ymax + 1e-12 * ystep; t += ystep) {
        os << "<line x1=\"" << fmt2(ml - 5) << "\" y1=\"" << fmt2(py(t)) << "\" x2=\"" << fmt2(ml)
           << "\" y2=\"" << fmt2(py(t)) << "\" stroke=\"#333333\"/>\n";
        os << "<text x=\"" << fmt2(ml - 8) << "\" y=\"" << fmt2(py(t) + 4)
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
           << fmt_tick(t) << "</text>\n";
    }
    os << "<text x=\"" << fmt2(ml + pw / 2) << "\" y=\"" << fmt2(mt + ph + 38)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
       << spec.x_label << "</text>\n";
    os << "<text x=\"18\" y=\"" << fmt2(mt + ph / 2)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\""
       << " transform=\"rotate(-90 18 " << fmt2(mt + ph / 2) << ")\">" << spec.y_label
       << "</text>\n";

    const int n_palette = static_cast<int>(sizeof(kPalette) / sizeof(kPalette[0]));
    for (size_t k = 0; k < series.size(); ++k) {
        const char* color = kPalette[k % static_cast<size_t>(n_palette)];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.8\" points=\"";
        for (const auto& [x, y] : series[k].points) {
            os << fmt2(px(x)) << "," << fmt2(py(y)) << " ";
        }
        os << "\"/>\n";
        if (!series[k].overlay.empty()) {
            os << "<polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"1.2\""
               << " stroke-dasharray=\"2,3\" points=\"";
            for (const auto& [x, y] : series[k].overlay) {
                os << fmt2(px(x)) << "," << fmt2(py(y)) << " ";
            }
            os << "\"/>\n";
        }
        const double ly = mt + 16 + 16 * static_cast<double>(k);
        os << "<line x1=\"" << fmt2(ml + pw - 130) << "\" y1=\"" << fmt2(ly) << "\" x2=\""
           << fmt2(ml + pw - 105) << "\" y2=\"" << fmt2(ly) << "\" stroke=\"" << color
           << "\" stroke-width=\"1.8\"/>\n";
        os << "<text x=\"" << fmt2(ml + pw - 100) << "\" y=\"" << fmt2(ly + 4)
           << "\" font-family=\"sans-serif\" font-size=\"11\">" << spec.series_by << " = "
           << fmt_tick(series[k].key) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void render_plot(const std::string& csv_path, const PlotSpec& spec) {
    const CsvTable table = parse_csv_file(csv_path);
    const std::string svg = render_plot_svg(table, spec);
    std::ofstream out(spec.output, std::ios::binary);
    if (!out) throw IoError("cannot open output file '" + spec.output + "'");
    out << svg;
    if (!out) throw IoError("failed writing '" + spec.output + "'");
}

} // namespace alphagauge
