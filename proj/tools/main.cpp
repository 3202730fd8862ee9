// cburg: command-line laboratory for the complex-forced Burgers equation.
//
// Subcommands: simulate, cc, spectral, check {pw|theorem1|theorem2|errfn|energy},
// figure {fig1|fig4|fig5|fig6}. Exit 0 on success, 1 on a failed check, 2 on
// usage/configuration errors. Logs go to stderr; data only to files.

#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cburg/cc_propagator.hpp"
#include "cburg/cli_io.hpp"
#include "cburg/experiments.hpp"
#include "cburg/lax_friedrichs.hpp"
#include "cburg/spectral_burgers.hpp"
#include "cburg/theory_checks.hpp"
#include "cburg/torus_field.hpp"

namespace fs = std::filesystem;
using namespace cburg;

namespace {

class RunDirectory {
public:
    explicit RunDirectory(std::string root) : root_(std::move(root)) {
        fs::create_directories(root_);
    }

    std::string path(const std::string& name) {
        files_.push_back(name);
        return (fs::path(root_) / name).string();
    }

    void write_text(const std::string& name, const std::string& text) {
        std::ofstream out(path(name));
        if (!out) throw std::runtime_error("cannot open " + name + " under " + root_);
        out << text;
    }

    void finalize() {
        std::ofstream out((fs::path(root_) / "manifest.txt").string());
        out << "manifest.txt\n";
        for (const std::string& f : files_) out << f << "\n";
    }

private:
    std::string root_;
    std::vector<std::string> files_;
};

double clamped_envelope(int N, const CcParams& p, double t) {
    const double gp = std::min(cc_exponent(N, p, t), 700.0);
    const double gm = std::min(cc_exponent(-N, p, t), 700.0);
    return 0.5 * (std::exp(gp) - std::exp(gm));
}

ModeSpectrum sine_datum(int K, double amp) {
    ModeSpectrum d(K, 1);
    d.at(1) = cplx(0.0, -0.5 * amp);
    d.at(-1) = cplx(0.0, 0.5 * amp);
    return d;
}

int report_and_exit(RunDirectory& dir, const CheckReport& report) {
    dir.write_text("check_" + report.name + ".txt", to_kv(report));
    dir.finalize();
    std::cerr << to_kv(report);
    std::cerr << (report.passed ? "PASS" : "FAIL") << " " << report.name << "\n";
    return report.passed ? 0 : 1;
}

CheckReport merge(const std::string& name, const std::vector<CheckReport>& parts) {
    CheckReport out;
    out.name = name;
    out.passed = true;
    for (const CheckReport& p : parts) {
        out.passed = out.passed && p.passed;
        out.margin = std::max(out.margin, p.margin);
        for (const CheckOffender& d : p.details) out.details.push_back(d);
    }
    if (out.details.size() > 8) out.details.resize(8);
    return out;
}

// ---------------------------------------------------------------- simulate

int cmd_simulate(long J, double sigma, int N, double amp, double t_max, long record_every,
                 const std::string& out) {
    RunDirectory dir(out);
    CaseSpec spec{"simulate", {{N, amp}}, static_cast<std::size_t>(J),
                  sigma > 0.0 ? sigma : 1.0 / (10.0 * static_cast<double>(J)), t_max,
                  static_cast<std::size_t>(record_every)};
    SchemeConfig cfg;
    cfg.J = spec.J;
    cfg.sigma = spec.sigma;
    cfg.record_every = spec.record_every;
    const double eps = effective_viscosity(cfg);
    const double t_cc = 4.0 * pi * eps * static_cast<double>(smallest_mode(spec));
    cfg.t_max = t_max > 0.0 ? t_max : 4.0 * t_cc;

    const RunTrace trace = run(make_datum(spec), cfg);

    Series s;
    s.name = "simulate";
    s.columns = {"t", "max_im", "max_re", "max_im_shifted"};
    for (std::size_t i = 0; i < trace.times.size(); ++i)
        s.rows.push_back({trace.times[i], trace.max_im[i], trace.max_re[i],
                          trace.max_im_shifted[i]});
    emit_csv(s, dir.path("simulate.csv"));

    std::ostringstream manifest;
    manifest << "J=" << spec.J << "\nsigma=" << spec.sigma << "\nN=" << N << "\neps=" << eps
             << "\nt_cc_4pi=" << t_cc << "\nt_cc_8pi=" << 2.0 * t_cc << "\n";
    if (trace.t_f) manifest << "t_f=" << *trace.t_f << "\n";
    dir.write_text("report.txt", manifest.str());
    dir.finalize();
    std::cerr << "simulate: " << trace.times.size() << " records";
    if (trace.t_f) std::cerr << ", t_f = " << *trace.t_f;
    std::cerr << "\n";
    return 0;
}

// ---------------------------------------------------------------------- cc

int cmd_cc(double eps, int k0, int N, double t_end, long points, const std::string& out) {
    if (eps <= 0.0 || k0 < 1 || N < 1 || points < 2) throw CLI::ValidationError("cc", "bad arguments");
    RunDirectory dir(out);
    CcParams torus{eps, k0, CcConvention::torus};
    CcParams fig1c{eps, k0, CcConvention::paper_fig1};
    if (t_end <= 0.0) t_end = 2.0 * amplification_time(CcParams{eps, N, CcConvention::torus});

    Series s;
    s.name = "cc";
    s.columns = {"t", "exp_torus", "exp_fig1", "env_torus", "env_fig1"};
    for (long i = 0; i <= points; ++i) {
        const double t = t_end * static_cast<double>(i) / static_cast<double>(points);
        s.rows.push_back({t, cc_exponent(N, torus, t), cc_exponent(N, fig1c, t),
                          clamped_envelope(N, torus, t), clamped_envelope(N, fig1c, t)});
    }
    emit_csv(s, dir.path("cc.csv"));

    std::ostringstream manifest;
    manifest << "eps=" << eps << "\nk0=" << k0 << "\nN=" << N
             << "\ntransition_time=" << transition_time(torus)
             << "\namplification_time=" << amplification_time(torus) << "\n";
    dir.write_text("report.txt", manifest.str());

    std::vector<PlotStyle> styles = {
        {"exp torus", "#1f5fbf", 2.0, false, 0, 1},
        {"exp printed", "#bf3f1f", 1.0, false, 0, 2},
    };
    emit_svg({s, s}, styles, "mode exponent, N=" + std::to_string(N), dir.path("cc.svg"));
    dir.finalize();
    std::cerr << "cc: table with " << s.rows.size() << " rows written\n";
    return 0;
}

// ---------------------------------------------------------------- spectral

int cmd_spectral(double eps, double alpha, double abar, int k0, int K, double dt, double t_end,
                 long record_every, double amp, const std::string& out) {
    RunDirectory dir(out);
    RescaledParams p;
    p.eps = eps;
    p.alpha = alpha;
    p.abar = abar;
    p.k0 = k0;
    p.K = K;
    p.dt = dt;
    p.t_end = t_end > 0.0 ? t_end : 4.0 * pi * static_cast<double>(k0) / eps + 1.0;
    p.record_every = static_cast<std::size_t>(record_every);

    const RescaledTrajectory traj = run_rescaled(sine_datum(K, amp), p);

    Series s;
    s.name = "spectral";
    s.columns = {"t", "re_lambda1", "log_abs_v1", "tilde_w_l2", "l2", "hs", "hs_im", "hs_re",
                 "linf"};
    for (const RescaledSample& r : traj.samples)
        s.rows.push_back({r.t, r.re_lambda1, r.log_abs_v1, r.tilde_w_l2, r.l2, r.hs, r.hs_im,
                          r.hs_re, r.linf});
    emit_csv(s, dir.path("spectral.csv"));

    std::ostringstream manifest;
    manifest << "eps=" << eps << "\nalpha=" << alpha << "\nabar=" << abar << "\nk0=" << k0
             << "\nK=" << K << "\ndt=" << dt << "\nt_end=" << p.t_end
             << "\ndatum_l2=" << traj.datum_l2 << "\nlog_abs_v1_0=" << traj.log_abs_v1_0 << "\n";
    dir.write_text("report.txt", manifest.str());

    std::vector<PlotStyle> styles = {
        {"log |v1|", "#1f5fbf", 2.0, false, 0, 2},
        {"Re lambda1 + log |v1(0)|", "#bf3f1f", 1.0, false, 0, 1},
    };
    emit_svg({s, s}, styles, "leading-mode amplitude", dir.path("spectral.svg"));
    dir.finalize();
    std::cerr << "spectral: " << traj.samples.size() << " records written\n";
    return 0;
}

// ------------------------------------------------------------------ checks

int cmd_check_pw(const std::string& out) {
    RunDirectory dir(out);
    std::vector<CheckReport> parts;
    // equality on a single eigenmode
    ModeSpectrum eigen(8, 1);
    eigen.at(3) = cplx(0.7, -0.2);
    parts.push_back(check_pw(eigen));
    // 100 random zero-mean spectra, fixed seed
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        ModeSpectrum s(16, 1);
        for (int k = -16; k <= 16; ++k) {
            if (k == 0) continue;
            s.at(k) = cplx(u(rng), u(rng));
        }
        parts.push_back(check_pw(s));
    }
    return report_and_exit(dir, merge("pw_suite", parts));
}

RescaledTrajectory theorem1_trajectory(double eps, double amp, int K, double dt, double t_end) {
    RescaledParams p;
    p.eps = eps;
    p.alpha = 0.0;
    p.K = K;
    p.dt = dt;
    p.t_end = t_end;
    p.record_every = 10;
    return run_rescaled(sine_datum(K, amp), p);
}

int cmd_check_theorem1(double eps, double amp, int K, double dt, double t_end,
                       const std::string& out) {
    RunDirectory dir(out);
    const RescaledTrajectory a = theorem1_trajectory(eps, amp, K, dt, t_end);
    const RescaledTrajectory b = theorem1_trajectory(0.5 * eps, amp, K, dt, t_end);
    const double c_check = default_calibration().at("theorem1_c_check");
    return report_and_exit(dir, check_theorem1(a, b, c_check));
}

int cmd_check_theorem2(double eps, double alpha, int K, double dt, const std::string& out) {
    RunDirectory dir(out);
    RescaledParams p;
    p.eps = eps;
    p.alpha = alpha;
    p.K = K;
    p.dt = dt;
    const double t_star = 4.0 * pi / eps;
    p.t_end = t_star + 1.0;
    p.record_every = 100;
    const RescaledTrajectory traj = run_rescaled(sine_datum(K, 1.0), p);

    CheckReport bound = check_theorem2(traj);

    // modulus recovery at the amplification time: Re lambda_1(t*) = 0, so
    // |v_1(t*)| = |tilde v_1(t*)|, read off the record closest to t*.
    const RescaledSample* nearest = &traj.samples.front();
    for (const RescaledSample& s : traj.samples)
        if (std::abs(s.t - t_star) < std::abs(nearest->t - t_star)) nearest = &s;
    const double recovery =
        std::exp((nearest->log_abs_v1 - nearest->re_lambda1) - traj.log_abs_v1_0);
    CheckReport rec;
    rec.name = "theorem2_recovery";
    rec.margin = std::max(recovery / 2.0, 0.5 / recovery);
    rec.passed = rec.margin <= 1.0;
    rec.details.push_back({nearest->t, recovery, 2.0});
    return report_and_exit(dir, merge("theorem2_suite", {bound, rec}));
}

int cmd_check_errfn(double eps, int k0, const std::string& out) {
    RunDirectory dir(out);
    const double c = two_pi * static_cast<double>(k0) / eps;
    std::vector<double> grid;
    for (int i = 1; i <= 20; ++i) grid.push_back(c * static_cast<double>(i) / 21.0);
    return report_and_exit(dir, check_errfn(eps, k0, grid));
}

int cmd_check_energy(double eps, double amp, int K, double dt, double t_end,
                     const std::string& out) {
    RunDirectory dir(out);
    return report_and_exit(dir, check_energy_decay(theorem1_trajectory(eps, amp, K, dt, t_end)));
}

// ------------------------------------------------------------------ figure

void write_fig1_outputs(const ExperimentReport& report, RunDirectory& dir) {
    const std::vector<Series> series = fig1_series(report);
    for (const Series& s : series) {
        emit_csv(s, dir.path(s.name + ".csv"));
        std::vector<PlotStyle> styles = {
            {"numerical max Im u", "#1f5fbf", 2.5, false, 0, 1},
            {"t + envelope (torus)", "#bf3f1f", 1.0, false, 0, 3},
            {"t + envelope (printed)", "#3f9f3f", 1.0, false, 0, 4},
        };
        emit_svg({s, s, s}, styles, s.name, dir.path(s.name + ".svg"));
    }
}

void write_sweep_outputs(const ExperimentReport& report, const Series& s, RunDirectory& dir) {
    emit_csv(s, dir.path(s.name + ".csv"));
    const int x = 0;
    const int base = s.columns.size() == 5 ? 1 : 0;  // fig6 carries an eps column
    std::vector<PlotStyle> styles = {
        {"t_f", "#1f5fbf", 1.5, true, s.columns.size() == 5 ? 1 : x, base + 1},
        {"t_cc = 4 pi eps N", "#bf3f1f", 1.5, false, s.columns.size() == 5 ? 1 : x, base + 2},
        {"t_cc doubled", "#3f9f3f", 1.0, false, s.columns.size() == 5 ? 1 : x, base + 3},
    };
    emit_svg({s, s, s}, styles, report.figure, dir.path(s.name + ".svg"));
}

int cmd_figure(const std::string& name, const FigureConfig& cfg, const std::string& out) {
    ExperimentReport report;
    if (name == "fig1") {
        report = fig1(cfg);
    } else if (name == "fig4") {
        report = fig4(cfg);
    } else if (name == "fig5") {
        report = fig5(cfg);
    } else if (name == "fig6") {
        report = fig6(cfg);
    } else {
        throw std::invalid_argument("unknown figure \"" + name + "\"");
    }

    RunDirectory dir(out);
    if (name == "fig1") {
        write_fig1_outputs(report, dir);
    } else {
        const Series s = name == "fig4"   ? fig4_series(report)
                         : name == "fig5" ? fig5_series(report)
                                          : fig6_series(report);
        write_sweep_outputs(report, s, dir);
    }
    dir.write_text("report.txt", report_manifest(report));
    dir.finalize();
    std::cerr << "figure " << name << ": " << report.cases.size() << " cases written to " << out
              << "\n";
    return 0;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file \"" + path + "\"");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for the complex-forced Burgers equation"};
    app.require_subcommand(1);

    // simulate
    auto* sim = app.add_subcommand("simulate", "single Lax-Friedrichs run");
    long sim_J = 1024, sim_rec = 20;
    double sim_sigma = 0.0, sim_amp = 1.0, sim_tmax = 0.0;
    int sim_N = 8;
    std::string sim_out = "out/simulate";
    sim->add_option("--J", sim_J, "grid size");
    sim->add_option("--sigma", sim_sigma, "time step (default h/10)");
    sim->add_option("--N", sim_N, "datum frequency");
    sim->add_option("--amp", sim_amp, "datum amplitude");
    sim->add_option("--t-max", sim_tmax, "horizon (default 4x the 4 pi eps N prediction)");
    sim->add_option("--record-every", sim_rec, "record stride");
    sim->add_option("--out", sim_out, "output directory");

    // cc
    auto* cc = app.add_subcommand("cc", "closed-form envelope tables");
    double cc_eps = 2.5e-3, cc_tend = 0.0;
    int cc_k0 = 1, cc_N = 8;
    long cc_points = 400;
    std::string cc_out = "out/cc";
    cc->add_option("--eps", cc_eps, "viscosity");
    cc->add_option("--k0", cc_k0, "smallest datum mode");
    cc->add_option("--N", cc_N, "tabulated mode");
    cc->add_option("--t-end", cc_tend, "table end time");
    cc->add_option("--points", cc_points, "table resolution");
    cc->add_option("--out", cc_out, "output directory");

    // spectral
    auto* sp = app.add_subcommand("spectral", "rescaled Galerkin run");
    double sp_eps = 1e-2, sp_alpha = 0.4, sp_abar = 0.0, sp_dt = 1e-3, sp_tend = 0.0,
           sp_amp = 1.0;
    int sp_k0 = 1, sp_K = 16;
    long sp_rec = 100;
    std::string sp_out = "out/spectral";
    sp->add_option("--eps", sp_eps, "viscosity");
    sp->add_option("--alpha", sp_alpha, "nonlinearity scale exponent");
    sp->add_option("--abar", sp_abar, "datum mean of the original profile");
    sp->add_option("--k0", sp_k0, "base frequency");
    sp->add_option("--K", sp_K, "Galerkin truncation");
    sp->add_option("--dt", sp_dt, "time step");
    sp->add_option("--t-end", sp_tend, "horizon (default 4 pi k0 / eps + 1)");
    sp->add_option("--record-every", sp_rec, "record stride");
    sp->add_option("--amp", sp_amp, "datum amplitude");
    sp->add_option("--out", sp_out, "output directory");

    // check
    auto* check = app.add_subcommand("check", "runtime verification suites");
    check->require_subcommand(1);
    std::string ck_out = "out/check";
    double ck_eps = 1e-2, ck_alpha = 0.4, ck_amp = 0.05, ck_dt = 2e-4, ck_tend = 1.0;
    int ck_k0 = 1, ck_K = 16;
    for (const char* name : {"pw", "theorem1", "theorem2", "errfn", "energy"}) {
        auto* c = check->add_subcommand(name);
        c->add_option("--eps", ck_eps, "viscosity");
        c->add_option("--alpha", ck_alpha, "nonlinearity scale exponent (theorem2)");
        c->add_option("--amp", ck_amp, "datum amplitude");
        c->add_option("--k0", ck_k0, "base frequency");
        c->add_option("--K", ck_K, "Galerkin truncation");
        c->add_option("--dt", ck_dt, "time step");
        c->add_option("--t-end", ck_tend, "horizon (theorem1/energy)");
        c->add_option("--out", ck_out, "output directory");
    }

    // figure
    auto* fig = app.add_subcommand("figure", "reproduce a figure data set");
    std::string fig_name, fig_preset, fig_out = "out/figure", fig_config;
    long fig_J = 0, fig_rec = 0;
    double fig_sigma = 0.0;
    std::string fig_nlist;
    fig->add_option("name", fig_name, "one of fig1, fig4, fig5, fig6");
    fig->add_option("--preset", fig_preset, "paper or ci");
    fig->add_option("--J", fig_J, "grid size override");
    fig->add_option("--sigma", fig_sigma, "time step override");
    fig->add_option("--n-list", fig_nlist, "comma-separated frequency list override");
    fig->add_option("--record-every", fig_rec, "record stride override");
    fig->add_option("--config", fig_config, "key = value config file");
    fig->add_option("--out", fig_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sim->parsed())
            return cmd_simulate(sim_J, sim_sigma, sim_N, sim_amp, sim_tmax, sim_rec, sim_out);
        if (cc->parsed()) return cmd_cc(cc_eps, cc_k0, cc_N, cc_tend, cc_points, cc_out);
        if (sp->parsed())
            return cmd_spectral(sp_eps, sp_alpha, sp_abar, sp_k0, sp_K, sp_dt, sp_tend, sp_rec,
                                sp_amp, sp_out);
        if (check->parsed()) {
            CLI::App* sub = check->get_subcommands().front();
            const std::string which = sub->get_name();
            const bool eps_set = sub->count("--eps") > 0;
            const bool dt_set = sub->count("--dt") > 0;
            if (which == "pw") return cmd_check_pw(ck_out);
            if (which == "theorem1")
                return cmd_check_theorem1(eps_set ? ck_eps : 2e-2, ck_amp, ck_K, ck_dt, ck_tend,
                                          ck_out);
            if (which == "theorem2")
                return cmd_check_theorem2(ck_eps, ck_alpha, ck_K, dt_set ? ck_dt : 1e-3, ck_out);
            if (which == "errfn") return cmd_check_errfn(ck_eps, ck_k0, ck_out);
            if (which == "energy")
                return cmd_check_energy(eps_set ? ck_eps : 2e-2, ck_amp, ck_K, ck_dt, ck_tend,
                                        ck_out);
        }
        if (fig->parsed()) {
            std::map<std::string, std::string> overrides;
            if (!fig_name.empty()) overrides["figure"] = fig_name;
            if (!fig_preset.empty()) overrides["preset"] = fig_preset;
            if (fig_J > 0) overrides["J"] = std::to_string(fig_J);
            if (fig_sigma > 0.0) {
                std::ostringstream os;
                os.precision(17);
                os << fig_sigma;
                overrides["sigma"] = os.str();
            }
            if (!fig_nlist.empty()) overrides["n_list"] = fig_nlist;
            if (fig_rec > 0) overrides["record_every"] = std::to_string(fig_rec);
            if (fig_out != "out/figure") overrides["out"] = fig_out;

            const std::vector<std::string> schema = {"figure", "preset",       "J",  "sigma",
                                                     "n_list", "record_every", "out"};
            const Config cfg = parse_config(fig_config.empty() ? "" : slurp(fig_config),
                                            overrides, schema);
            const std::string name = cfg.get_string("figure", "");
            if (name.empty()) throw std::invalid_argument("missing figure name");
            const std::string preset = cfg.get_string("preset", "ci");
            if (preset != "paper" && preset != "ci")
                throw std::invalid_argument("preset must be paper or ci, got \"" + preset + "\"");

            FigureConfig fc;
            fc.preset = preset == "paper" ? Preset::paper : Preset::ci;
            if (cfg.has("J")) fc.J = static_cast<std::size_t>(cfg.get_long("J", 0));
            if (cfg.has("sigma")) fc.sigma = cfg.get_double("sigma", 0.0);
            if (cfg.has("n_list")) fc.n_list = cfg.get_int_list("n_list", {});
            if (cfg.has("record_every"))
                fc.record_every = static_cast<std::size_t>(cfg.get_long("record_every", 20));
            return cmd_figure(name, fc, cfg.get_string("out", fig_out));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
