#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "cburg/spectral_burgers.hpp"
#include "cburg/torus_field.hpp"

namespace cburg {

struct CheckOffender {
    double t = 0.0;
    double value = 0.0;
    double bound = 0.0;
};

/// Verdict of one runtime verification. margin is the worst achieved/allowed
/// ratio, so margin <= 1 iff passed.
struct CheckReport {
    std::string name;
    bool passed = false;
    double margin = 0.0;
    std::vector<CheckOffender> details;  // sampled worst offenders
};

/// Line-oriented key=value rendering of a report.
std::string to_kv(const CheckReport& report);

/// Frozen calibration constants, serialized as key=value lines.
struct CalibrationManifest {
    std::map<std::string, double> constants;

    double at(const std::string& key) const;
    std::string to_text() const;
    static CalibrationManifest from_text(const std::string& text);
};

/// Constants frozen after one-off calibration runs; shared by the CLI checks
/// and the acceptance suite.
CalibrationManifest default_calibration();

/// Poincare-Wirtinger: |v - mean|_{L2} <= |d_x v|_{L2} / (2 pi k_min) with
/// k_min the smallest populated nonzero physical frequency. Equality on a
/// single mode.
CheckReport check_pw(const ModeSpectrum& spectrum);

struct Theorem1Fit {
    double c_im = 0.0;  // max_t |Im v(t)|_{H^s} / (eps t |a - abar|_{H^{s+1}})
    double c_re = 0.0;  // max_t |Re v(t)|_{H^s} / |a - abar|_{H^{s+1}}
};

/// Fit the implicit constants of the linear-growth estimate on one recorded
/// trajectory (alpha = 0 regime). Times below delta = 10 dt are skipped.
Theorem1Fit theorem1_fit(const RescaledTrajectory& trajectory);

/// Linear-growth check across an eps-halving pair: both fitted constants
/// bounded by c_check, and the ratio of the Im-constants within [0.75, 1.33].
CheckReport check_theorem1(const RescaledTrajectory& traj_eps,
                           const RescaledTrajectory& traj_eps_half, double c_check);

/// Exponential lower bound |v_1(t)| >= (1/2) e^{Re lambda_1(t)} |v_1(0)|,
/// verified in log-space at every recorded time. Rejects trajectories with
/// alpha <= 1/3 or a vanishing first mode.
CheckReport check_theorem2(const RescaledTrajectory& trajectory);

/// Error-function estimate: for t < 2 pi k0 / eps,
///   int_0^t e^{-pi k0 eps (tau - c)^2} dtau <= e^{-pi k0 eps (t - c)^2} / (2 pi k0 (2 pi k0 - eps t)),
/// c = 2 pi k0 / eps, checked by adaptive quadrature of the equivalent
/// rescaled integrand (both sides divided by the right-hand exponential).
CheckReport check_errfn(double eps, int k0, std::span<const double> t_grid);

/// Gaussian-tail primitive: int_x^inf e^{-z^2} dz <= e^{-x^2} / (2x).
CheckReport check_gauss_tail(std::span<const double> xs);

/// Energy decay |v(t)|_{H^s} <= |v(0)|_{H^s} while the proxy condition
/// eps t / (2 pi k0) + |v|_{Linf} <= 1 holds (alpha = 0 regime). Times past
/// the condition window are skipped, not failed.
CheckReport check_energy_decay(const RescaledTrajectory& trajectory);

}  // namespace cburg
