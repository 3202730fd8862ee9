#pragma once

#include "cburg/torus_field.hpp"

namespace cburg {

/// Exponent normalization of the degenerate Cauchy-Riemann propagator.
/// torus is canonical (frequency 2 pi k on the unit torus); paper_fig1
/// drops the 2 pi factors and is kept only to overlay the published
/// envelope curves exactly as printed.
enum class CcConvention { torus, paper_fig1 };

struct CcParams {
    double eps = 2.5e-3;  // viscosity, > 0
    int k0 = 1;           // smallest positive mode in the datum
    CcConvention convention = CcConvention::torus;
};

/// Accumulated real exponent of mode k between times t1 and t2:
///   torus:      pi k (t2 - t1)(t2 + t1 - 4 pi eps k)
///   paper_fig1: (k/2)(t2 - t1)(t2 + t1 - 2 eps k)
/// The factored form vanishes exactly at the amplification time.
double cc_exponent(int k, const CcParams& params, double t2, double t1 = 0.0);

/// Closed-form mode solution a_k -> a_k e^{exponent}; the two-time form makes
/// chained evolution exact.
cplx cc_mode(cplx a_k, int k, const CcParams& params, double t, double t_from = 0.0);

/// cc_mode applied to every coefficient; physical frequency is k * base_frequency.
ModeSpectrum cc_evolve(const ModeSpectrum& spectrum, const CcParams& params, double t,
                       double t_from = 0.0);

/// Real part of the symbol: -2 pi xi (t - 2 pi eps xi).
double symbol_re(double eps, double t, double xi);

/// 2 pi eps k0; with rescaled data a(k0 x / eps) the eps drops out: 2 pi k0.
double transition_time(const CcParams& params, bool rescaled = false);
/// 4 pi eps k0 (or 4 pi k0 rescaled); always twice the transition time.
double amplification_time(const CcParams& params, bool rescaled = false);

/// max_x Im v(t,x) for the solution issued from sin(N 2 pi x):
///   (1/2)(e^{g(N)} - e^{g(-N)}) with g the convention's exponent.
double linearized_max_im(int N, const CcParams& params, double t);

}  // namespace cburg
