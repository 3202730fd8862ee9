#include "cburg/cc_propagator.hpp"

#include <cmath>
#include <stdexcept>

namespace cburg {

double cc_exponent(int k, const CcParams& params, double t2, double t1) {
    const double kd = static_cast<double>(k);
    switch (params.convention) {
        case CcConvention::torus:
            return pi * kd * (t2 - t1) * (t2 + t1 - 4.0 * pi * params.eps * kd);
        case CcConvention::paper_fig1:
            return 0.5 * kd * (t2 - t1) * (t2 + t1 - 2.0 * params.eps * kd);
    }
    return 0.0;
}

cplx cc_mode(cplx a_k, int k, const CcParams& params, double t, double t_from) {
    if (t < 0.0 || t_from < 0.0) throw std::invalid_argument("cc_mode: negative time");
    return a_k * std::exp(cc_exponent(k, params, t, t_from));
}

ModeSpectrum cc_evolve(const ModeSpectrum& spectrum, const CcParams& params, double t,
                       double t_from) {
    ModeSpectrum out(spectrum.truncation(), spectrum.base_frequency());
    for (int k = -spectrum.truncation(); k <= spectrum.truncation(); ++k)
        out.at(k) = cc_mode(spectrum.at(k), k * spectrum.base_frequency(), params, t, t_from);
    return out;
}

double symbol_re(double eps, double t, double xi) {
    return -two_pi * xi * (t - two_pi * eps * xi);
}

double transition_time(const CcParams& params, bool rescaled) {
    const double scale = rescaled ? 1.0 : params.eps;
    return two_pi * scale * static_cast<double>(params.k0);
}

double amplification_time(const CcParams& params, bool rescaled) {
    return 2.0 * transition_time(params, rescaled);
}

double linearized_max_im(int N, const CcParams& params, double t) {
    if (N < 1) throw std::invalid_argument("linearized_max_im: N must be >= 1");
    return 0.5 * (std::exp(cc_exponent(N, params, t)) - std::exp(cc_exponent(-N, params, t)));
}

}  // namespace cburg
