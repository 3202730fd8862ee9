#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cburg/experiments.hpp"

namespace cburg {

/// Flat key = value configuration with per-command schemas; command-line
/// overrides are applied on top of file values.
struct Config {
    std::map<std::string, std::string> values;

    bool has(const std::string& key) const { return values.count(key) != 0; }
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    long get_long(const std::string& key, long fallback) const;
    std::vector<int> get_int_list(const std::string& key, std::vector<int> fallback) const;
};

/// Parse `key = value` lines ('#' comments, blank lines allowed), then apply
/// overrides. Keys outside `schema` are errors naming the key, as are
/// malformed numbers when the typed getters run.
Config parse_config(const std::string& text,
                    const std::map<std::string, std::string>& overrides,
                    const std::vector<std::string>& schema);

/// Series CSV: header row, one data row per sample, 17 significant digits.
void emit_csv(const Series& series, const std::string& path);
/// Inverse of emit_csv; round-trips bit-exactly.
Series read_csv(const std::string& path);

/// Plot styling of one series on the shared axes.
struct PlotStyle {
    std::string label;
    std::string color = "#000000";
    double width = 1.0;     // stroke width; thick numerical vs thin reference
    bool crosses = false;   // x-glyph markers instead of a polyline
    int x_column = 0;
    int y_column = 1;
};

/// Hand-emitted static SVG: fixed 800x600 viewBox, linear axes with ~10
/// ticks, one polyline (or cross set) per styled series, legend labels.
void emit_svg(const std::vector<Series>& series, const std::vector<PlotStyle>& styles,
              const std::string& title, const std::string& path);

}  // namespace cburg
