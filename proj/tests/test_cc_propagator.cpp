#include <cmath>
#include <stdexcept>

#include "cburg/cc_propagator.hpp"
#include "oracles.hpp"
#include "doctest.h"

using namespace cburg;

TEST_CASE("exponent vanishes exactly at the amplification time") {
    for (int k = 1; k <= 32; ++k) {
        CcParams torus{2.5e-3, k, CcConvention::torus};
        CHECK(cc_exponent(k, torus, 4.0 * pi * torus.eps * k) == 0.0);
        CcParams printed{2.5e-3, k, CcConvention::paper_fig1};
        CHECK(cc_exponent(k, printed, 2.0 * printed.eps * k) == 0.0);
    }
}

TEST_CASE("exponent matches the unfactored closed form") {
    CcParams p{1e-2, 1, CcConvention::torus};
    for (int k : {-7, -1, 2, 11}) {
        for (double t : {0.05, 0.3, 0.9}) {
            const double kd = k;
            const double direct = pi * kd * t * t - 4.0 * pi * pi * p.eps * kd * kd * t;
            CHECK(cc_exponent(k, p, t) == doctest::Approx(direct).epsilon(1e-13));
        }
    }
    CcParams q{1e-2, 1, CcConvention::paper_fig1};
    const double direct = 0.5 * 3.0 * 0.4 * 0.4 - q.eps * 9.0 * 0.4;
    CHECK(cc_exponent(3, q, 0.4) == doctest::Approx(direct).epsilon(1e-13));
}

TEST_CASE("two-time chaining is exact") {
    CcParams p{5e-3, 1, CcConvention::torus};
    const cplx a(0.4, -0.9);
    const cplx direct = cc_mode(a, 5, p, 0.8);
    const cplx chained = cc_mode(cc_mode(a, 5, p, 0.3), 5, p, 0.8, 0.3);
    CHECK(std::abs(direct - chained) <= 1e-14 * std::abs(direct));
    CHECK_THROWS_AS(cc_mode(a, 5, p, -0.1), std::invalid_argument);
}

TEST_CASE("cc_evolve uses the physical frequency k * k0") {
    CcParams p{1e-2, 1, CcConvention::torus};
    ModeSpectrum s(2, 3);  // base frequency 3
    s.at(1) = cplx(1.0, 0.0);
    ModeSpectrum e = cc_evolve(s, p, 0.2);
    CHECK(std::abs(e.at(1)) == doctest::Approx(std::exp(cc_exponent(3, p, 0.2))).epsilon(1e-13));
}

TEST_CASE("symbol real part changes sign at the transition time") {
    const double eps = 2.5e-3;
    const double xi = 4.0;
    const double t_star = two_pi * eps * xi;
    CHECK(symbol_re(eps, 0.5 * t_star, xi) > 0.0);
    CHECK(symbol_re(eps, t_star, xi) == doctest::Approx(0.0));
    CHECK(symbol_re(eps, 2.0 * t_star, xi) < 0.0);
}

TEST_CASE("transition and amplification times") {
    CcParams p{2.5e-3, 8, CcConvention::torus};
    CHECK(transition_time(p) == doctest::Approx(two_pi * 2.5e-3 * 8.0).epsilon(1e-15));
    CHECK(amplification_time(p) == doctest::Approx(2.0 * transition_time(p)).epsilon(1e-15));
    CHECK(transition_time(p, true) == doctest::Approx(two_pi * 8.0).epsilon(1e-15));
    CHECK(amplification_time(p, true) == doctest::Approx(2.0 * two_pi * 8.0).epsilon(1e-15));
}

TEST_CASE("linearized envelope") {
    CcParams p{2.5e-3, 8, CcConvention::torus};
    CHECK_THROWS_AS(linearized_max_im(0, p, 0.1), std::invalid_argument);
    // at the amplification time the +N exponent is zero and the -N mode decayed
    const double t_amp = 4.0 * pi * p.eps * 8.0;
    const double env = linearized_max_im(8, p, t_amp);
    CHECK(env > 0.0);
    CHECK(env < 0.5);
    CHECK(env == doctest::Approx(0.5 * (1.0 - std::exp(cc_exponent(-8, p, t_amp)))).epsilon(1e-13));
}

TEST_CASE("closed form agrees with an adaptive ODE oracle") {
    for (double eps : {2.5e-3, 1e-2}) {
        CcParams p{eps, 1, CcConvention::torus};
        for (int k : {-8, -2, 1, 5, 12}) {
            const double exact = std::exp(cc_exponent(k, p, 0.7));
            const double numeric = oracles::integrate_mode({k, eps}, 1.0, 0.7);
            CHECK(std::abs(numeric - exact) <= 1e-9 * std::abs(exact));
        }
    }
}
