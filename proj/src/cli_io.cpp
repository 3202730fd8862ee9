#include "cburg/cli_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cburg {

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size())
        throw std::invalid_argument("malformed number for key \"" + key + "\": " + text);
    return v;
}

long parse_long(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    char* end = nullptr;
    const long v = std::strtol(t.c_str(), &end, 10);
    if (t.empty() || end != t.c_str() + t.size())
        throw std::invalid_argument("malformed integer for key \"" + key + "\": " + text);
    return v;
}

}  // namespace

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    auto it = values.find(key);
    return it == values.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key, double fallback) const {
    auto it = values.find(key);
    return it == values.end() ? fallback : parse_double(key, it->second);
}

long Config::get_long(const std::string& key, long fallback) const {
    auto it = values.find(key);
    return it == values.end() ? fallback : parse_long(key, it->second);
}

std::vector<int> Config::get_int_list(const std::string& key, std::vector<int> fallback) const {
    auto it = values.find(key);
    if (it == values.end()) return fallback;
    std::vector<int> out;
    std::istringstream is(it->second);
    std::string item;
    while (std::getline(is, item, ','))
        out.push_back(static_cast<int>(parse_long(key, item)));
    if (out.empty()) throw std::invalid_argument("empty list for key \"" + key + "\"");
    return out;
}

Config parse_config(const std::string& text, const std::map<std::string, std::string>& overrides,
                    const std::vector<std::string>& schema) {
    Config cfg;
    auto check = [&](const std::string& key) {
        if (std::find(schema.begin(), schema.end(), key) == schema.end())
            throw std::invalid_argument("unknown key \"" + key + "\"");
    };
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("malformed config line: " + line);
        const std::string key = trim(t.substr(0, eq));
        check(key);
        cfg.values[key] = trim(t.substr(eq + 1));
    }
    for (const auto& [key, value] : overrides) {
        check(key);
        cfg.values[key] = value;
    }
    return cfg;
}

void emit_csv(const Series& series, const std::string& path) {
    if (series.columns.empty()) throw std::invalid_argument("emit_csv: empty series");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("emit_csv: cannot open " + path);
    for (std::size_t i = 0; i < series.columns.size(); ++i)
        out << (i ? "," : "") << series.columns[i];
    out << "\n";
    for (const auto& row : series.rows) {
        if (row.size() != series.columns.size())
            throw std::invalid_argument("emit_csv: ragged row in " + series.name);
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << fmt_double(row[i]);
        out << "\n";
    }
    if (!out) throw std::runtime_error("emit_csv: write failed for " + path);
}

Series read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_csv: cannot open " + path);
    Series s;
    s.name = path;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("read_csv: empty file " + path);
    std::istringstream hs(trim(line));
    std::string cell;
    while (std::getline(hs, cell, ',')) s.columns.push_back(cell);
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        std::istringstream rs(trim(line));
        std::vector<double> row;
        while (std::getline(rs, cell, ',')) row.push_back(parse_double("csv", cell));
        if (row.size() != s.columns.size())
            throw std::runtime_error("read_csv: ragged row in " + path);
        s.rows.push_back(std::move(row));
    }
    return s;
}

namespace {

struct Axis {
    double lo = 0.0, hi = 1.0;

    void grow(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    double tick_step() const {
        const double raw = (hi - lo) / 9.0;
        const double mag = std::pow(10.0, std::floor(std::log10(raw)));
        const double norm = raw / mag;
        return mag * (norm < 1.5 ? 1.0 : norm < 3.5 ? 2.0 : norm < 7.5 ? 5.0 : 10.0);
    }
};

constexpr double kWidth = 800.0, kHeight = 600.0;
constexpr double kLeft = 70.0, kRight = 30.0, kTop = 40.0, kBottom = 55.0;

std::string fmt_tick(double v) {
    if (std::abs(v) < 1e-12) v = 0.0;  // avoid a "-0" label from rounding
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

}  // namespace

void emit_svg(const std::vector<Series>& series, const std::vector<PlotStyle>& styles,
              const std::string& title, const std::string& path) {
    if (series.empty() || styles.size() != series.size())
        throw std::invalid_argument("emit_svg: need one style per series");
    for (const Series& s : series)
        if (s.rows.empty()) throw std::invalid_argument("emit_svg: empty series " + s.name);

    Axis xa{series[0].rows[0][static_cast<std::size_t>(styles[0].x_column)],
            series[0].rows[0][static_cast<std::size_t>(styles[0].x_column)]};
    Axis ya{series[0].rows[0][static_cast<std::size_t>(styles[0].y_column)],
            series[0].rows[0][static_cast<std::size_t>(styles[0].y_column)]};
    for (std::size_t i = 0; i < series.size(); ++i) {
        for (const auto& row : series[i].rows) {
            xa.grow(row[static_cast<std::size_t>(styles[i].x_column)]);
            ya.grow(row[static_cast<std::size_t>(styles[i].y_column)]);
        }
    }
    if (xa.hi == xa.lo) xa.hi = xa.lo + 1.0;
    if (ya.hi == ya.lo) ya.hi = ya.lo + 1.0;
    const double xpad = 0.04 * (xa.hi - xa.lo), ypad = 0.04 * (ya.hi - ya.lo);
    xa.lo -= xpad;
    xa.hi += xpad;
    ya.lo -= ypad;
    ya.hi += ypad;

    auto px = [&](double x) {
        return kLeft + (x - xa.lo) / (xa.hi - xa.lo) * (kWidth - kLeft - kRight);
    };
    auto py = [&](double y) {
        return kHeight - kBottom - (y - ya.lo) / (ya.hi - ya.lo) * (kHeight - kTop - kBottom);
    };

    std::ofstream out(path);
    if (!out) throw std::runtime_error("emit_svg: cannot open " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\">\n";
    out << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
        << title << "</text>\n";

    // frame
    out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kWidth - kLeft - kRight
        << "\" height=\"" << kHeight - kTop - kBottom
        << "\" fill=\"none\" stroke=\"#333333\"/>\n";

    const double xs = xa.tick_step();
    for (double v = std::ceil(xa.lo / xs) * xs; v <= xa.hi + 1e-12 * xs; v += xs) {
        const double p = px(v);
        out << "<line x1=\"" << p << "\" y1=\"" << kHeight - kBottom << "\" x2=\"" << p
            << "\" y2=\"" << kHeight - kBottom + 5 << "\" stroke=\"#333333\"/>\n";
        out << "<text x=\"" << p << "\" y=\"" << kHeight - kBottom + 20
            << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt_tick(v) << "</text>\n";
    }
    const double ys = ya.tick_step();
    for (double v = std::ceil(ya.lo / ys) * ys; v <= ya.hi + 1e-12 * ys; v += ys) {
        const double p = py(v);
        out << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << p << "\" x2=\"" << kLeft << "\" y2=\""
            << p << "\" stroke=\"#333333\"/>\n";
        out << "<text x=\"" << kLeft - 8 << "\" y=\"" << p + 4
            << "\" text-anchor=\"end\" font-size=\"11\">" << fmt_tick(v) << "</text>\n";
    }

    for (std::size_t i = 0; i < series.size(); ++i) {
        const PlotStyle& st = styles[i];
        if (st.crosses) {
            for (const auto& row : series[i].rows) {
                const double cx = px(row[static_cast<std::size_t>(st.x_column)]);
                const double cy = py(row[static_cast<std::size_t>(st.y_column)]);
                out << "<line x1=\"" << cx - 4 << "\" y1=\"" << cy - 4 << "\" x2=\"" << cx + 4
                    << "\" y2=\"" << cy + 4 << "\" stroke=\"" << st.color << "\" stroke-width=\""
                    << st.width << "\"/>\n";
                out << "<line x1=\"" << cx - 4 << "\" y1=\"" << cy + 4 << "\" x2=\"" << cx + 4
                    << "\" y2=\"" << cy - 4 << "\" stroke=\"" << st.color << "\" stroke-width=\""
                    << st.width << "\"/>\n";
            }
        } else {
            out << "<polyline fill=\"none\" stroke=\"" << st.color << "\" stroke-width=\""
                << st.width << "\" points=\"";
            for (const auto& row : series[i].rows)
                out << px(row[static_cast<std::size_t>(st.x_column)]) << ","
                    << py(row[static_cast<std::size_t>(st.y_column)]) << " ";
            out << "\"/>\n";
        }
        const double ly = kTop + 16.0 + 16.0 * static_cast<double>(i);
        out << "<line x1=\"" << kWidth - 190 << "\" y1=\"" << ly - 4 << "\" x2=\""
            << kWidth - 165 << "\" y2=\"" << ly - 4 << "\" stroke=\"" << st.color
            << "\" stroke-width=\"" << st.width << "\"/>\n";
        out << "<text x=\"" << kWidth - 160 << "\" y=\"" << ly
            << "\" font-size=\"12\">" << st.label << "</text>\n";
    }
    out << "</svg>\n";
    if (!out) throw std::runtime_error("emit_svg: write failed for " + path);
}

}  // namespace cburg
