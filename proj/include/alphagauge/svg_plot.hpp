// svg_plot.hpp — Deterministic SVG line charts from sweep CSV files.

#pragma once

#include "alphagauge/sweep.hpp"

#include <string>
#include <vector>

namespace alphagauge {

struct PlotSpec {
    std::string x;                      // column for the x axis ("eta" or "alpha")
    std::string y;                      // column for the y axis
    std::string series_by;              // column whose distinct values define series
    std::vector<double> series_values;  // optional filter; empty -> all distinct values
    std::string overlay;                // optional column drawn dotted per series
    std::string title;
    std::string x_label;
    std::string y_label;
    std::string output;                 // output SVG path
    int width = 860;
    int height = 560;
};

PlotSpec parse_plot_spec(const std::string& json_text);
PlotSpec load_plot_spec(const std::string& path);

// Pure renderer; throws on missing columns or empty series.
std::string render_plot_svg(const CsvTable& table, const PlotSpec& spec);

// Reads the CSV, renders, writes spec.output. No file is written on error.
void render_plot(const std::string& csv_path, const PlotSpec& spec);

} // namespace alphagauge
