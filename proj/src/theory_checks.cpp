#include "cburg/theory_checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace cburg {

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void note_offender(CheckReport& r, double t, double value, double bound) {
    r.details.push_back({t, value, bound});
    if (r.details.size() > 8) {
        // keep the worst entries by value/bound ratio
        std::sort(r.details.begin(), r.details.end(), [](const auto& a, const auto& b) {
            const double ra = (a.bound != 0.0) ? a.value / a.bound : a.value;
            const double rb = (b.bound != 0.0) ? b.value / b.bound : b.value;
            return ra > rb;
        });
        r.details.resize(8);
    }
}

constexpr double kMarginSlack = 1e-10;

}  // namespace

std::string to_kv(const CheckReport& report) {
    std::ostringstream os;
    os << "name=" << report.name << "\n";
    os << "passed=" << (report.passed ? 1 : 0) << "\n";
    os << "margin=" << fmt_double(report.margin) << "\n";
    for (std::size_t i = 0; i < report.details.size(); ++i) {
        os << "detail." << i << ".t=" << fmt_double(report.details[i].t) << "\n";
        os << "detail." << i << ".value=" << fmt_double(report.details[i].value) << "\n";
        os << "detail." << i << ".bound=" << fmt_double(report.details[i].bound) << "\n";
    }
    return os.str();
}

double CalibrationManifest::at(const std::string& key) const {
    auto it = constants.find(key);
    if (it == constants.end())
        throw std::out_of_range("CalibrationManifest: missing constant " + key);
    return it->second;
}

std::string CalibrationManifest::to_text() const {
    std::ostringstream os;
    for (const auto& [k, v] : constants) os << k << "=" << fmt_double(v) << "\n";
    return os.str();
}

CalibrationManifest CalibrationManifest::from_text(const std::string& text) {
    CalibrationManifest m;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("CalibrationManifest: malformed line: " + line);
        m.constants[line.substr(0, eq)] = std::stod(line.substr(eq + 1));
    }
    return m;
}

CalibrationManifest default_calibration() {
    CalibrationManifest m;
    // Ceiling for both fitted linear-growth constants, frozen at roughly
    // 1.5x the worst value measured across the eps-halving pairs
    // (measured: c_im ~ 4.7e-3, c_re ~ 0.16 at s = 2, amp 0.05).
    m.constants["theorem1_c_check"] = 0.25;
    return m;
}

CheckReport check_pw(const ModeSpectrum& spectrum) {
    CheckReport r;
    r.name = "poincare_wirtinger";
    const int K = spectrum.truncation();
    const int k0 = spectrum.base_frequency();

    double max_abs = 0.0;
    for (int k = -K; k <= K; ++k) max_abs = std::max(max_abs, std::abs(spectrum.at(k)));
    const double populated_tol = 1e-13 * max_abs;

    double centered_l2 = 0.0, deriv_l2 = 0.0;
    int k_min = 0;
    for (int k = -K; k <= K; ++k) {
        if (k == 0) continue;
        const double m = std::norm(spectrum.at(k));
        centered_l2 += m;
        const double freq = two_pi * static_cast<double>(k * k0);
        deriv_l2 += freq * freq * m;
        if (std::abs(spectrum.at(k)) > populated_tol) {
            const int ak = std::abs(k * k0);
            if (k_min == 0 || ak < k_min) k_min = ak;
        }
    }
    if (k_min == 0) {  // nothing populated outside the mean
        r.passed = true;
        r.margin = 0.0;
        return r;
    }
    centered_l2 = std::sqrt(centered_l2);
    deriv_l2 = std::sqrt(deriv_l2);
    const double bound = deriv_l2 / (two_pi * static_cast<double>(k_min));
    r.margin = centered_l2 / bound / (1.0 + kMarginSlack);
    r.passed = r.margin <= 1.0;
    note_offender(r, 0.0, centered_l2, bound);
    return r;
}

Theorem1Fit theorem1_fit(const RescaledTrajectory& traj) {
    if (traj.params.alpha != 0.0)
        throw std::invalid_argument("theorem1_fit: trajectory must be in the alpha = 0 regime");
    Theorem1Fit fit;
    if (traj.datum_hs1 == 0.0) return fit;
    const double delta = 10.0 * traj.params.dt;
    for (const RescaledSample& s : traj.samples) {
        if (s.t < delta) continue;
        fit.c_im = std::max(fit.c_im, s.hs_im / (traj.params.eps * s.t * traj.datum_hs1));
        fit.c_re = std::max(fit.c_re, s.hs_re / traj.datum_hs1);
    }
    return fit;
}

CheckReport check_theorem1(const RescaledTrajectory& traj_eps,
                           const RescaledTrajectory& traj_eps_half, double c_check) {
    CheckReport r;
    r.name = "theorem1_linear_growth";
    const double e1 = traj_eps.params.eps;
    const double e2 = traj_eps_half.params.eps;
    if (std::abs(e1 - 2.0 * e2) > 1e-12 * e1)
        throw std::invalid_argument("check_theorem1: second trajectory must halve eps");

    const Theorem1Fit f1 = theorem1_fit(traj_eps);
    const Theorem1Fit f2 = theorem1_fit(traj_eps_half);
    const double ratio = (f2.c_im != 0.0) ? f1.c_im / f2.c_im : 1.0;

    double margin = 0.0;
    for (double c : {f1.c_im, f2.c_im, f1.c_re, f2.c_re}) margin = std::max(margin, c / c_check);
    margin = std::max(margin, ratio / 1.33);
    margin = std::max(margin, 0.75 / ratio);
    r.margin = margin;
    r.passed = margin <= 1.0;
    note_offender(r, e1, f1.c_im, c_check);
    note_offender(r, e2, f2.c_im, c_check);
    note_offender(r, 0.0, ratio, 1.33);
    return r;
}

CheckReport check_theorem2(const RescaledTrajectory& traj) {
    if (traj.params.alpha <= 1.0 / 3.0)
        throw std::invalid_argument("check_theorem2: requires alpha > 1/3");
    if (!std::isfinite(traj.log_abs_v1_0))
        throw std::invalid_argument("check_theorem2: datum first mode vanishes (hypothesis violated)");
    CheckReport r;
    r.name = "theorem2_lower_bound";
    double worst = -std::numeric_limits<double>::infinity();
    for (const RescaledSample& s : traj.samples) {
        const double log_bound = std::log(0.5) + s.re_lambda1 + traj.log_abs_v1_0;
        const double diff = log_bound - s.log_abs_v1;
        if (diff > worst) worst = diff;
        if (diff > 0.0) note_offender(r, s.t, log_bound, s.log_abs_v1);
    }
    r.margin = std::exp(worst);
    r.passed = worst <= 0.0;
    if (r.details.empty() && !traj.samples.empty()) {
        const RescaledSample& last = traj.samples.back();
        note_offender(r, last.t, std::log(0.5) + last.re_lambda1 + traj.log_abs_v1_0,
                      last.log_abs_v1);
    }
    return r;
}

CheckReport check_errfn(double eps, int k0, std::span<const double> t_grid) {
    if (eps <= 0.0 || k0 < 1) throw std::invalid_argument("check_errfn: need eps > 0, k0 >= 1");
    CheckReport r;
    r.name = "errfn_estimate";
    const double k0d = static_cast<double>(k0);
    const double c = two_pi * k0d / eps;
    double margin = 0.0;
    for (double t : t_grid) {
        if (!(t < c)) throw std::invalid_argument("check_errfn: t must be < 2 pi k0 / eps");
        // both sides of the printed inequality divided by e^{-pi k0 eps (t-c)^2};
        // the scaled integrand stays in [0, 1] for every eps
        auto integrand = [&](double tau) {
            return std::exp(-pi * k0d * eps * (tau - t) * (tau + t - 2.0 * c));
        };
        const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            integrand, 0.0, t, 12, 1e-12);
        const double bound = 1.0 / (two_pi * k0d * (two_pi * k0d - eps * t));
        const double ratio = integral / bound;
        margin = std::max(margin, ratio);
        if (ratio > 1.0) note_offender(r, t, integral, bound);
    }
    r.margin = margin;
    r.passed = margin <= 1.0;
    return r;
}

CheckReport check_gauss_tail(std::span<const double> xs) {
    CheckReport r;
    r.name = "gauss_tail_primitive";
    double margin = 0.0;
    for (double x : xs) {
        if (x <= 0.0) throw std::invalid_argument("check_gauss_tail: x must be > 0");
        auto integrand = [](double z) { return std::exp(-z * z); };
        // e^{-z^2} below x+30 already underflows; a finite window is exact here
        const double tail = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            integrand, x, x + 30.0, 12, 1e-12);
        const double bound = std::exp(-x * x) / (2.0 * x);
        const double ratio = tail / bound;
        margin = std::max(margin, ratio);
        if (ratio > 1.0) note_offender(r, x, tail, bound);
    }
    r.margin = margin;
    r.passed = margin <= 1.0;
    return r;
}

CheckReport check_energy_decay(const RescaledTrajectory& traj) {
    if (traj.params.alpha != 0.0)
        throw std::invalid_argument("check_energy_decay: requires the alpha = 0 regime");
    CheckReport r;
    r.name = "energy_decay";
    if (traj.samples.empty()) {
        r.passed = true;
        return r;
    }
    const double hs0 = traj.samples.front().hs;
    const double k0d = static_cast<double>(traj.params.k0);
    double margin = 0.0;
    double window_end = 0.0;
    for (const RescaledSample& s : traj.samples) {
        const double condition = traj.params.eps * s.t / (two_pi * k0d) + s.linf;
        if (condition > 1.0) break;  // past the proxy window: skipped, not failed
        window_end = s.t;
        if (hs0 == 0.0) {
            if (s.hs > 0.0) note_offender(r, s.t, s.hs, hs0);
            margin = std::max(margin, s.hs > 0.0 ? 2.0 : 0.0);
            continue;
        }
        const double ratio = s.hs / hs0 / (1.0 + kMarginSlack);
        margin = std::max(margin, ratio);
        if (ratio > 1.0) note_offender(r, s.t, s.hs, hs0);
    }
    r.margin = margin;
    r.passed = margin <= 1.0;
    note_offender(r, window_end, 0.0, 0.0);  // last time inside the condition window
    return r;
}

}  // namespace cburg
