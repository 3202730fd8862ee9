#include "cburg/lax_friedrichs.hpp"

#include <cmath>
#include <stdexcept>

namespace cburg {

double effective_viscosity(const SchemeConfig& cfg) {
    return cfg.h() * cfg.h() / (2.0 * cfg.sigma);
}

ComplexField lf_step(const ComplexField& u, const SchemeConfig& cfg) {
    const std::size_t J = u.size();
    const double quarter_lambda = 0.25 * cfg.cfl_ratio();  // (sigma/2h) * (1/2) from F = u^2/2
    const cplx force = cfg.forcing_enabled ? cplx(0.0, cfg.sigma) : cplx(0.0, 0.0);
    ComplexField out(J);
    for (std::size_t j = 0; j < J; ++j) {
        const cplx up = u[j + 1 == J ? 0 : j + 1];
        const cplx um = u[j == 0 ? J - 1 : j - 1];
        out[j] = 0.5 * (up + um) - quarter_lambda * (up * up - um * um) + force;
    }
    return out;
}

bool cfl_ok(const ComplexField& u, const SchemeConfig& cfg) {
    const double m = std::max(linf_max_abs_re(u), linf_max_im(u));
    if (m <= 0.0) return true;
    return cfg.cfl_ratio() < cfg.cfl_cap / m;
}

namespace {

bool all_finite(const ComplexField& u) {
    for (const cplx& v : u.samples())
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

}  // namespace

RunTrace run(const ComplexField& datum, const SchemeConfig& cfg) {
    if (datum.size() != cfg.J) throw std::invalid_argument("run: datum length does not match cfg.J");
    RunTrace trace;
    ComplexField u = datum;
    std::size_t n = 0;

    auto record = [&]() {
        const double t = static_cast<double>(n) * cfg.sigma;
        trace.times.push_back(t);
        trace.max_im.push_back(linf_max_im(u));
        trace.max_re.push_back(linf_max_abs_re(u));
        double shifted = u[0].imag() - t;
        for (const cplx& v : u.samples()) shifted = std::max(shifted, v.imag() - t);
        trace.max_im_shifted.push_back(shifted);
    };

    record();
    while (true) {
        if (!all_finite(u)) {
            trace.termination = Termination::non_finite;
            break;
        }
        if (!cfl_ok(u, cfg)) {
            trace.termination = Termination::cfl_break;
            trace.t_f = (n == 0) ? 0.0 : static_cast<double>(n - 1) * cfg.sigma;
            break;
        }
        if (static_cast<double>(n) * cfg.sigma >= cfg.t_max) {
            trace.termination = Termination::horizon_reached;
            break;
        }
        u = lf_step(u, cfg);
        ++n;
        if (n % cfg.record_every == 0) record();
    }
    if (trace.times.back() != static_cast<double>(n) * cfg.sigma) record();
    return trace;
}

}  // namespace cburg
