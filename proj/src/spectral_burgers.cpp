#include "cburg/spectral_burgers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cburg {

cplx lambda_k(int k, double t, const RescaledParams& p) {
    const double kd = static_cast<double>(k);
    const double k0 = static_cast<double>(p.k0);
    const double re = pi * k0 * kd * t * (p.eps * t - 4.0 * pi * k0 * kd);
    const double im = -two_pi * k0 * kd * p.abar * t;
    return cplx(re, im);
}

double re_lambda1(double t, const RescaledParams& p) {
    const double k0 = static_cast<double>(p.k0);
    return pi * k0 * t * (p.eps * t - 4.0 * pi * k0);
}

cplx mu_k(int k, double t, const RescaledParams& p) {
    return lambda_k(k, t, p) - re_lambda1(t, p);
}

namespace {

// e^{mu_k(t2) - mu_k(t1)}, with the real part in factored two-time form:
//   Re = pi k0 (k-1)(t2 - t1)(eps (t2 + t1) - 4 pi k0 (k+1)).
// Non-positive for every populated mode inside the observation window.
cplx exp_mu_diff(int k, double t1, double t2, const RescaledParams& p) {
    const double kd = static_cast<double>(k);
    const double k0 = static_cast<double>(p.k0);
    const double re =
        pi * k0 * (kd - 1.0) * (t2 - t1) * (p.eps * (t2 + t1) - 4.0 * pi * k0 * (kd + 1.0));
    if (re > 700.0)
        throw std::overflow_error("spectral_burgers: propagator exponent overflow past validity window");
    const double im = -two_pi * k0 * kd * p.abar * (t2 - t1);
    return std::exp(re) * cplx(std::cos(im), std::sin(im));
}

// C_k = sum_{k1+k2=k, |k1|,|k2|<=K} y_{k1} y_{k2}
std::vector<cplx> convolution(const std::vector<cplx>& y, int K) {
    std::vector<cplx> c(y.size(), cplx{0.0, 0.0});
    for (int k1 = -K; k1 <= K; ++k1) {
        const cplx a = y[static_cast<std::size_t>(k1 + K)];
        if (a == cplx{0.0, 0.0}) continue;
        const int lo = std::max(-K, -K + k1);
        const int hi = std::min(K, K + k1);
        for (int k = lo; k <= hi; ++k)
            c[static_cast<std::size_t>(k + K)] += a * y[static_cast<std::size_t>(k - k1 + K)];
    }
    return c;
}

// Nonlinear source in the scaled frame: e^{Re lambda_1(t)} N_k(y).
std::vector<cplx> tilde_source(const std::vector<cplx>& y, double t, const RescaledParams& p) {
    const int K = static_cast<int>((y.size() - 1) / 2);
    std::vector<cplx> out = convolution(y, K);
    const double amp = std::exp(re_lambda1(t, p)) * std::pow(p.eps, p.alpha);
    const double coeff = pi * static_cast<double>(p.k0) * amp;
    for (int k = -K; k <= K; ++k) {
        const cplx c = out[static_cast<std::size_t>(k + K)];
        out[static_cast<std::size_t>(k + K)] = cplx(0.0, -coeff * static_cast<double>(k)) * c;
    }
    out[static_cast<std::size_t>(K)] = cplx{0.0, 0.0};  // mean stays zero
    return out;
}

bool all_finite(const std::vector<cplx>& y) {
    for (const cplx& v : y)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

}  // namespace

RescaledState::RescaledState(const ModeSpectrum& datum, const RescaledParams& params)
    : t_(0.0), tilde_(static_cast<std::size_t>(2 * params.K + 1), cplx{0.0, 0.0}) {
    if (params.K < 4) throw std::invalid_argument("RescaledState: K must be >= 4");
    double l2 = 0.0;
    for (int k = -datum.truncation(); k <= datum.truncation(); ++k) l2 += std::norm(datum.at(k));
    l2 = std::sqrt(l2);
    if (std::abs(datum.mean()) > 1e-12 * std::max(1.0, l2))
        throw std::invalid_argument("RescaledState: datum must have zero mean");
    for (int k = -datum.truncation(); k <= datum.truncation(); ++k) {
        if (k == 0) continue;
        if (std::abs(k) > params.K) {
            if (datum.at(k) != cplx{0.0, 0.0})
                throw std::invalid_argument("RescaledState: datum not band-limited to K");
            continue;
        }
        tilde_[static_cast<std::size_t>(k + params.K)] = datum.at(k);
    }
}

RescaledState::RescaledState(double t, std::vector<cplx> tilde, int /*k0*/)
    : t_(t), tilde_(std::move(tilde)) {}

cplx RescaledState::mode(int k, const RescaledParams& params) const {
    return tilde_[index(k)] * std::exp(re_lambda1(t_, params));
}

double RescaledState::log_abs_mode(int k, const RescaledParams& params) const {
    const double m = std::abs(tilde_[index(k)]);
    if (m == 0.0) return -std::numeric_limits<double>::infinity();
    return re_lambda1(t_, params) + std::log(m);
}

ModeSpectrum RescaledState::spectrum(const RescaledParams& params) const {
    const int K = truncation();
    ModeSpectrum out(K, params.k0);
    const double scale = std::exp(re_lambda1(t_, params));
    for (int k = -K; k <= K; ++k) out.at(k) = tilde_[index(k)] * scale;
    return out;
}

std::vector<cplx> nonlinear_rhs(const RescaledState& state, const RescaledParams& params) {
    const int K = state.truncation();
    std::vector<cplx> v(static_cast<std::size_t>(2 * K + 1));
    for (int k = -K; k <= K; ++k) v[static_cast<std::size_t>(k + K)] = state.mode(k, params);
    std::vector<cplx> out = convolution(v, K);
    const double coeff = pi * static_cast<double>(params.k0) * std::pow(params.eps, params.alpha);
    for (int k = -K; k <= K; ++k) {
        const cplx c = out[static_cast<std::size_t>(k + K)];
        out[static_cast<std::size_t>(k + K)] = cplx(0.0, -coeff * static_cast<double>(k)) * c;
    }
    out[static_cast<std::size_t>(K)] = cplx{0.0, 0.0};
    return out;
}

RescaledState step(const RescaledState& state, const RescaledParams& params) {
    const int K = state.truncation();
    const double t = state.t();
    const double dt = params.dt;
    const double th = t + 0.5 * dt;
    const double tn = t + dt;
    const std::vector<cplx>& y = state.tilde_modes();
    const std::size_t n = y.size();

    std::vector<cplx> g1(n, cplx{0.0, 0.0});
    if (params.nonlinearity_enabled) g1 = tilde_source(y, t, params);

    std::vector<cplx> a(n, cplx{0.0, 0.0});
    for (int k = -K; k <= K; ++k) {
        if (k == 0) continue;
        const std::size_t i = static_cast<std::size_t>(k + K);
        a[i] = exp_mu_diff(k, t, th, params) * (y[i] + 0.5 * dt * g1[i]);
    }

    std::vector<cplx> g2(n, cplx{0.0, 0.0});
    if (params.nonlinearity_enabled) g2 = tilde_source(a, th, params);

    std::vector<cplx> out(n, cplx{0.0, 0.0});
    for (int k = -K; k <= K; ++k) {
        if (k == 0) continue;
        const std::size_t i = static_cast<std::size_t>(k + K);
        out[i] = exp_mu_diff(k, t, tn, params) * y[i] +
                 dt * exp_mu_diff(k, th, tn, params) * g2[i];
    }
    if (!all_finite(out))
        throw std::overflow_error("spectral_burgers: non-finite state (overflow past validity window)");
    return RescaledState(tn, std::move(out), params.k0);
}

namespace {

RescaledSample make_sample(const RescaledState& state, const RescaledParams& p) {
    RescaledSample s;
    const int K = state.truncation();
    s.t = state.t();
    s.re_lambda1 = re_lambda1(s.t, p);
    s.log_abs_v1 = state.log_abs_mode(1, p);
    double w2 = 0.0;
    for (int k = -K; k <= K; ++k) {
        if (k == 0 || k == 1) continue;
        w2 += std::norm(state.mode_tilde(k));
    }
    s.tilde_w_l2 = std::sqrt(w2);
    s.abs_mode0 = std::abs(state.mode_tilde(0));

    const ModeSpectrum v = state.spectrum(p);
    s.l2 = l2_norm(v);
    s.hs = sobolev_norm(v, p.sobolev_s);
    ModeSpectrum im_part(K, p.k0), re_part(K, p.k0);
    for (int k = -K; k <= K; ++k) {
        const cplx vk = v.at(k);
        const cplx vmkc = std::conj(v.at(-k));
        im_part.at(k) = (vk - vmkc) / cplx(0.0, 2.0);
        re_part.at(k) = 0.5 * (vk + vmkc);
    }
    s.hs_im = sobolev_norm(im_part, p.sobolev_s);
    s.hs_re = sobolev_norm(re_part, p.sobolev_s);
    const std::size_t J = std::max<std::size_t>(64, static_cast<std::size_t>(4 * K));
    s.linf = linf_max_abs(idft(v, J));
    return s;
}

}  // namespace

RescaledTrajectory run_rescaled(const ModeSpectrum& datum, const RescaledParams& params) {
    RescaledTrajectory traj;
    traj.params = params;
    ModeSpectrum d(datum.truncation(), params.k0);
    for (int k = -datum.truncation(); k <= datum.truncation(); ++k) d.at(k) = datum.at(k);
    traj.datum_l2 = l2_norm(d);
    traj.datum_hs = sobolev_norm(d, params.sobolev_s);
    traj.datum_hs1 = sobolev_norm(d, params.sobolev_s + 1);

    RescaledState state(datum, params);
    traj.log_abs_v1_0 = state.log_abs_mode(1, params);
    traj.samples.push_back(make_sample(state, params));

    const long long n_steps = std::llround(params.t_end / params.dt);
    for (long long i = 1; i <= n_steps; ++i) {
        state = step(state, params);
        if (i % static_cast<long long>(params.record_every) == 0 || i == n_steps)
            traj.samples.push_back(make_sample(state, params));
    }
    return traj;
}

}  // namespace cburg
