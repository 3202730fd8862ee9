#pragma once

#include <cstddef>
#include <vector>

#include "cburg/torus_field.hpp"

namespace cburg {

/// Parameters of the rescaled equation
///   d_t v + (i eps t + abar + eps^alpha v) d_x v - d_x^2 v = 0,   mean v = 0,
/// posed for x-dependence through k0 x. alpha = 0 is the linear-growth
/// regime, alpha > 1/3 the small-data exponential-growth regime.
struct RescaledParams {
    int k0 = 1;
    double eps = 1e-2;
    double alpha = 0.0;
    double abar = 0.0;
    int K = 16;                // Galerkin truncation, modes in [-K, K]
    double dt = 1e-3;          // fast-time step
    double t_end = 1.0;        // fast-time horizon
    std::size_t record_every = 100;
    int sobolev_s = 2;         // s used for the recorded H^s diagnostics
    bool nonlinearity_enabled = true;  // test hook for linear-exactness checks
};

/// Exact linear propagator exponent of mode k:
///   lambda_k(t) = -2 i pi k0 k abar t + pi k0 k (eps t^2 - 4 pi k0 k t).
cplx lambda_k(int k, double t, const RescaledParams& params);

/// Re lambda_1(t) = pi k0 t (eps t - 4 pi k0); the common log-scale factored
/// out of the integrated state.
double re_lambda1(double t, const RescaledParams& params);

/// mu_k = lambda_k - Re lambda_1, with
///   Re mu_k(t) = pi k0 (k-1) t (eps t - 4 pi k0 (k+1)).
cplx mu_k(int k, double t, const RescaledParams& params);

/// State of the truncated mode system. Modes are stored in the frame scaled
/// by e^{-Re lambda_1(t)}, which keeps every populated mode representable
/// across the e^{4 (pi k0)^3 / eps} dynamic range of the run. Accessors give
/// both frames; mode 0 is pinned to zero.
class RescaledState {
public:
    /// Start state at t = 0 from a zero-mean datum spectrum (truncated to K).
    RescaledState(const ModeSpectrum& datum, const RescaledParams& params);
    RescaledState(double t, std::vector<cplx> tilde, int k0);

    double t() const { return t_; }
    int truncation() const { return static_cast<int>((tilde_.size() - 1) / 2); }

    cplx mode_tilde(int k) const { return tilde_[index(k)]; }
    /// Actual v_k = e^{Re lambda_1(t)} * tilde; may underflow to 0 mid-window.
    cplx mode(int k, const RescaledParams& params) const;
    /// log |v_k| = Re lambda_1(t) + log |tilde_k|; -inf for a zero mode.
    double log_abs_mode(int k, const RescaledParams& params) const;

    const std::vector<cplx>& tilde_modes() const { return tilde_; }
    /// Actual-frame spectrum (base frequency k0).
    ModeSpectrum spectrum(const RescaledParams& params) const;

private:
    std::size_t index(int k) const { return static_cast<std::size_t>(k + truncation()); }

    double t_;
    std::vector<cplx> tilde_;
};

/// Truncated Fourier coefficients of -eps^alpha d_x (v^2/2) in the actual
/// frame: N_k = -eps^alpha (i pi k0 k) sum_{k1+k2=k} v_{k1} v_{k2}, N_0 = 0.
std::vector<cplx> nonlinear_rhs(const RescaledState& state, const RescaledParams& params);

/// One integrating-factor midpoint step: the linear part is advanced exactly
/// through the two-time propagator e^{mu_k(t+dt) - mu_k(t)}, the nonlinear
/// remainder by explicit midpoint. Throws on non-finite state (overflow past
/// the validity window).
RescaledState step(const RescaledState& state, const RescaledParams& params);

struct RescaledSample {
    double t = 0.0;
    double re_lambda1 = 0.0;
    double log_abs_v1 = 0.0;   // log |v_1(t)|
    double tilde_w_l2 = 0.0;   // l2 of scaled modes k not in {0, 1}
    double abs_mode0 = 0.0;    // |v_0|, mean-preservation diagnostic (tilde frame)
    double l2 = 0.0;           // |v|_{L2}, actual frame
    double hs = 0.0;           // |v|_{H^s}
    double hs_im = 0.0;        // |Im v|_{H^s}
    double hs_re = 0.0;        // |Re v|_{H^s}
    double linf = 0.0;         // max_x |v|
};

struct RescaledTrajectory {
    RescaledParams params;
    double datum_l2 = 0.0;
    double datum_hs = 0.0;       // |a(k0 .) - abar|_{H^s}
    double datum_hs1 = 0.0;      // |a(k0 .) - abar|_{H^{s+1}}
    double log_abs_v1_0 = 0.0;   // log |v_1(0)|
    std::vector<RescaledSample> samples;
};

/// Integrate to t_end, recording every record_every steps (and at the final
/// step). The datum must be band-limited to K and have zero mean.
RescaledTrajectory run_rescaled(const ModeSpectrum& datum, const RescaledParams& params);

}  // namespace cburg
