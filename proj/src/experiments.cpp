#include "cburg/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cburg {

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Envelope with the exponent clamped so horizon-length tables stay finite.
double clamped_envelope(int N, const CcParams& params, double t) {
    const double gp = std::min(cc_exponent(N, params, t), 700.0);
    const double gm = std::min(cc_exponent(-N, params, t), 700.0);
    return 0.5 * (std::exp(gp) - std::exp(gm));
}

CaseResult run_case(CaseSpec spec) {
    CaseResult r;
    SchemeConfig cfg;
    cfg.J = spec.J;
    cfg.sigma = spec.sigma;
    cfg.record_every = spec.record_every;

    r.eps = effective_viscosity(cfg);
    r.n_min = smallest_mode(spec);
    r.t_cc_4pi = 4.0 * pi * r.eps * static_cast<double>(r.n_min);
    r.t_cc_8pi = 2.0 * r.t_cc_4pi;
    if (spec.t_max <= 0.0) spec.t_max = 2.0 * r.t_cc_8pi;  // safety horizon
    cfg.t_max = spec.t_max;

    r.trace = run(make_datum(spec), cfg);
    r.t_f = r.trace.t_f;
    r.spec = std::move(spec);
    return r;
}

ExperimentReport run_sweep(std::string figure, const FigureConfig& cfg,
                           std::vector<CaseSpec> specs) {
    ExperimentReport report;
    report.figure = std::move(figure);
    report.metadata["preset"] = cfg.preset == Preset::paper ? "paper" : "ci";

    std::vector<std::future<CaseResult>> jobs;
    jobs.reserve(specs.size());
    for (CaseSpec& s : specs)
        jobs.push_back(std::async(std::launch::async, run_case, std::move(s)));
    for (auto& j : jobs) report.cases.push_back(j.get());
    std::sort(report.cases.begin(), report.cases.end(),
              [](const CaseResult& a, const CaseResult& b) { return a.spec.key < b.spec.key; });
    return report;
}

std::string padded(const std::string& prefix, int value, int width) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s%0*d", prefix.c_str(), width, value);
    return buf;
}

}  // namespace

ComplexField make_datum(const CaseSpec& spec) {
    bool live = false;
    for (const DatumMode& m : spec.modes) {
        if (m.N < 0) throw std::invalid_argument("make_datum: negative frequency");
        if (m.a != 0.0) live = true;
    }
    if (!live) throw std::invalid_argument("make_datum: all amplitudes vanish");
    return ComplexField::sample(spec.J, [&](double x) {
        double s = 0.0;
        for (const DatumMode& m : spec.modes)
            s += m.a * std::sin(static_cast<double>(m.N) * two_pi * x);
        return cplx(s, 0.0);
    });
}

int smallest_mode(const CaseSpec& spec) {
    int n_min = 0;
    for (const DatumMode& m : spec.modes) {
        if (m.a == 0.0 || m.N == 0) continue;
        if (n_min == 0 || m.N < n_min) n_min = m.N;
    }
    if (n_min == 0) throw std::invalid_argument("smallest_mode: no oscillating mode");
    return n_min;
}

std::size_t preset_grid(const FigureConfig& cfg) {
    if (cfg.J) return *cfg.J;
    return cfg.preset == Preset::paper ? 2000 : 1024;
}

double preset_sigma(const FigureConfig& cfg, std::size_t J) {
    if (cfg.sigma) return *cfg.sigma;
    return cfg.preset == Preset::paper ? 5e-5 : 1.0 / (10.0 * static_cast<double>(J));
}

ExperimentReport fig1(const FigureConfig& cfg) {
    const std::size_t J = preset_grid(cfg);
    const double sigma = preset_sigma(cfg, J);
    const std::vector<int> ns = cfg.n_list ? *cfg.n_list : std::vector<int>{8, 16, 24};
    std::vector<CaseSpec> specs;
    for (int N : ns)
        specs.push_back({padded("N=", N, 2), {{N, 1.0}}, J, sigma, 0.0, cfg.record_every});
    ExperimentReport report = run_sweep("fig1", cfg, std::move(specs));
    report.metadata["J"] = std::to_string(J);
    report.metadata["sigma"] = fmt_double(sigma);
    return report;
}

ExperimentReport fig4(const FigureConfig& cfg) {
    const std::size_t J = preset_grid(cfg);
    const double sigma = preset_sigma(cfg, J);
    std::vector<int> ns;
    if (cfg.n_list) {
        ns = *cfg.n_list;
    } else {
        for (int N = 2; N <= 16; N += 2) ns.push_back(N);
    }
    std::vector<CaseSpec> specs;
    for (int N : ns)
        specs.push_back({padded("N=", N, 2), {{N, 1.0}}, J, sigma, 0.0, cfg.record_every});
    ExperimentReport report = run_sweep("fig4", cfg, std::move(specs));
    report.metadata["J"] = std::to_string(J);
    report.metadata["sigma"] = fmt_double(sigma);
    return report;
}

ExperimentReport fig5(const FigureConfig& cfg) {
    const std::size_t J = preset_grid(cfg);
    const double sigma = preset_sigma(cfg, J);
    const std::vector<std::vector<DatumMode>> data = {
        {{4, 1.0}},
        {{4, 1.0}, {6, 1.0}},
        {{4, 1.0}, {8, 1.0}},
        {{4, 1.0}, {10, 1.0}},
        {{4, 1.0}, {12, 1.0}},
        {{4, 1.0}, {6, 1.0}, {8, 1.0}},
        {{4, 1.0}, {6, 2.0}, {8, 1.0}},
        {{4, 1.0}, {6, 2.0}, {8, -1.0}},
    };
    std::vector<CaseSpec> specs;
    for (std::size_t i = 0; i < data.size(); ++i)
        specs.push_back({padded("case=", static_cast<int>(i + 1), 1), data[i], J, sigma, 0.0,
                         cfg.record_every});
    ExperimentReport report = run_sweep("fig5", cfg, std::move(specs));
    report.metadata["J"] = std::to_string(J);
    report.metadata["sigma"] = fmt_double(sigma);
    return report;
}

ExperimentReport fig6(const FigureConfig& cfg) {
    std::vector<CaseSpec> specs;
    for (std::size_t J = 600; J <= 2000; J += 200) {
        const double sigma = 1.0 / (10.0 * static_cast<double>(J));
        specs.push_back({padded("J=", static_cast<int>(J), 4), {{10, 1.0}}, J, sigma, 0.0,
                         cfg.record_every});
    }
    ExperimentReport report = run_sweep("fig6", cfg, std::move(specs));
    report.metadata["datum"] = "sin(10 2 pi x)";
    report.metadata["sigma"] = "h/10";
    return report;
}

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("linear_fit: need >= 2 matched samples");
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("linear_fit: degenerate abscissa");
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (syy == 0.0) {
        fit.r2 = 1.0;
    } else {
        double ss_res = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double r = y[i] - (fit.slope * x[i] + fit.intercept);
            ss_res += r * r;
        }
        fit.r2 = 1.0 - ss_res / syy;
    }
    return fit;
}

double fig1_gap(const CaseResult& result, CcConvention convention, double im_cap, double floor) {
    if (result.spec.modes.size() != 1)
        throw std::invalid_argument("fig1_gap: single-mode cases only");
    CcParams params;
    params.eps = result.eps;
    params.k0 = result.n_min;
    params.convention = convention;
    double gap = 0.0;
    for (std::size_t i = 0; i < result.trace.times.size(); ++i) {
        if (result.trace.max_im[i] > im_cap) break;
        const double t = result.trace.times[i];
        const double pred = t + clamped_envelope(result.n_min, params, t);
        if (pred < floor) continue;
        gap = std::max(gap, std::abs(result.trace.max_im[i] - pred) / pred);
    }
    return gap;
}

std::vector<Series> fig1_series(const ExperimentReport& report) {
    std::vector<Series> out;
    for (const CaseResult& c : report.cases) {
        Series s;
        s.name = report.figure + "_" + c.spec.key;
        s.columns = {"t", "max_im", "max_im_shifted", "env_torus", "env_fig1"};
        CcParams torus{c.eps, c.n_min, CcConvention::torus};
        CcParams fig1c{c.eps, c.n_min, CcConvention::paper_fig1};
        for (std::size_t i = 0; i < c.trace.times.size(); ++i) {
            const double t = c.trace.times[i];
            s.rows.push_back({t, c.trace.max_im[i], c.trace.max_im_shifted[i],
                              t + clamped_envelope(c.n_min, torus, t),
                              t + clamped_envelope(c.n_min, fig1c, t)});
        }
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

Series sweep_series(const ExperimentReport& report, const std::string& abscissa_name,
                    bool with_eps) {
    Series s;
    s.name = report.figure;
    s.columns = {abscissa_name};
    if (with_eps) s.columns.push_back("eps");
    s.columns.insert(s.columns.end(), {"t_f", "t_cc_4pi", "t_cc_8pi"});
    double abscissa = 0.0;
    for (const CaseResult& c : report.cases) {
        if (!c.t_f) continue;
        if (abscissa_name == "N") {
            abscissa = static_cast<double>(c.n_min);
        } else if (abscissa_name == "J") {
            abscissa = static_cast<double>(c.spec.J);
        } else {
            abscissa += 1.0;  // case index
        }
        std::vector<double> row{abscissa};
        if (with_eps) row.push_back(c.eps);
        row.insert(row.end(), {*c.t_f, c.t_cc_4pi, c.t_cc_8pi});
        s.rows.push_back(std::move(row));
    }
    return s;
}

}  // namespace

Series fig4_series(const ExperimentReport& report) { return sweep_series(report, "N", false); }
Series fig5_series(const ExperimentReport& report) { return sweep_series(report, "case", false); }
Series fig6_series(const ExperimentReport& report) { return sweep_series(report, "J", true); }

std::string report_manifest(const ExperimentReport& report) {
    std::ostringstream os;
    os << "figure=" << report.figure << "\n";
    for (const auto& [k, v] : report.metadata) os << "meta." << k << "=" << v << "\n";
    for (const CaseResult& c : report.cases) {
        const std::string p = "case." + c.spec.key + ".";
        os << p << "J=" << c.spec.J << "\n";
        os << p << "sigma=" << fmt_double(c.spec.sigma) << "\n";
        os << p << "eps=" << fmt_double(c.eps) << "\n";
        os << p << "n_min=" << c.n_min << "\n";
        os << p << "t_cc_4pi=" << fmt_double(c.t_cc_4pi) << "\n";
        os << p << "t_cc_8pi=" << fmt_double(c.t_cc_8pi) << "\n";
        if (c.t_f) os << p << "t_f=" << fmt_double(*c.t_f) << "\n";
        os << p << "termination="
           << (c.trace.termination == Termination::horizon_reached ? "horizon_reached"
               : c.trace.termination == Termination::cfl_break     ? "cfl_break"
                                                                   : "non_finite")
           << "\n";
    }
    return os.str();
}

}  // namespace cburg
