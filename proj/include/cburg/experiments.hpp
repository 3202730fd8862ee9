#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cburg/cc_propagator.hpp"
#include "cburg/lax_friedrichs.hpp"

namespace cburg {

struct DatumMode {
    int N = 0;      // frequency, >= 0
    double a = 0.0; // amplitude
};

/// One sweep case: datum sum_j a_j sin(N_j 2 pi x) run through the
/// Lax-Friedrichs solver on a J-point grid with time step sigma.
struct CaseSpec {
    std::string key;  // sort / label key, unique within a sweep
    std::vector<DatumMode> modes;
    std::size_t J = 1024;
    double sigma = 1e-4;
    double t_max = 1.0;
    std::size_t record_every = 20;
};

/// Samples of the case datum; requires every N_j >= 0 and some a_j != 0.
ComplexField make_datum(const CaseSpec& spec);

/// Smallest nonzero frequency carried by the datum (the mode that sets the
/// amplification-time prediction).
int smallest_mode(const CaseSpec& spec);

struct CaseResult {
    CaseSpec spec;
    RunTrace trace;
    double eps = 0.0;      // effective scheme viscosity h^2 / (2 sigma)
    int n_min = 0;         // smallest nonzero datum frequency
    double t_cc_4pi = 0.0; // 4 pi eps n_min
    double t_cc_8pi = 0.0; // 8 pi eps n_min, the doubled-normalization variant
    std::optional<double> t_f;
};

struct ExperimentReport {
    std::string figure;
    std::map<std::string, std::string> metadata;
    std::vector<CaseResult> cases;  // sorted by case key
};

enum class Preset { paper, ci };

/// Shared figure configuration. Fields left unset fall back to the preset:
///   paper: J = 2000, sigma = 5e-5;  ci: J = 1024, sigma = h / 10.
struct FigureConfig {
    Preset preset = Preset::ci;
    std::optional<std::size_t> J;
    std::optional<double> sigma;
    std::optional<std::vector<int>> n_list;  // fig1 / fig4 frequency sweep
    std::size_t record_every = 20;
};

std::size_t preset_grid(const FigureConfig& cfg);
double preset_sigma(const FigureConfig& cfg, std::size_t J);

/// Single-mode data sin(N 2 pi x), N in {8, 16, 24} by default; emits the
/// measured max-Im history next to the linearized envelope t + max Im v.
ExperimentReport fig1(const FigureConfig& cfg);
/// Frequency sweep N in {2, 4, ..., 16}: final computing time vs prediction.
ExperimentReport fig4(const FigureConfig& cfg);
/// The eight multi-mode cases sharing smallest frequency 4.
ExperimentReport fig5(const FigureConfig& cfg);
/// Viscosity sweep via grid refinement: J in {600, ..., 2000} at sigma = h/10,
/// datum sin(10 2 pi x), so eps = 5 / J.
ExperimentReport fig6(const FigureConfig& cfg);

/// Ordinary least squares y ~ slope x + intercept.
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

/// Worst relative gap between the measured max-Im curve and the envelope
/// t + linearized_max_im over samples with max Im <= im_cap; samples whose
/// envelope is below `floor` (both curves near zero) are skipped.
double fig1_gap(const CaseResult& result, CcConvention convention, double im_cap = 0.5,
                double floor = 0.02);

/// Named data series: a header row plus numeric rows, the unit of CSV / SVG
/// emission.
struct Series {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Per-case series (t, max_im, max_im_shifted, env_torus, env_fig1) where the
/// env columns are t + linearized envelope under each exponent convention.
std::vector<Series> fig1_series(const ExperimentReport& report);
/// (N, t_f, t_cc_4pi, t_cc_8pi); rows without a t_f are skipped.
Series fig4_series(const ExperimentReport& report);
/// (case, t_f, t_cc_4pi, t_cc_8pi).
Series fig5_series(const ExperimentReport& report);
/// (J, eps, t_f, t_cc_4pi, t_cc_8pi).
Series fig6_series(const ExperimentReport& report);

/// Key-value text manifest of a report (figure, metadata, per-case summary).
std::string report_manifest(const ExperimentReport& report);

}  // namespace cburg
