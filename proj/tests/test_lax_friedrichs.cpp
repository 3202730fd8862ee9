#include <cmath>

#include "cburg/lax_friedrichs.hpp"
#include "doctest.h"

using namespace cburg;

namespace {

SchemeConfig small_cfg() {
    SchemeConfig cfg;
    cfg.J = 64;
    cfg.sigma = 1.0 / 640.0;  // sigma = h/10
    cfg.t_max = 0.1;
    return cfg;
}

}  // namespace

TEST_CASE("effective viscosity is h^2 / (2 sigma)") {
    SchemeConfig cfg = small_cfg();
    CHECK(effective_viscosity(cfg) ==
          doctest::Approx(cfg.h() * cfg.h() / (2.0 * cfg.sigma)).epsilon(1e-15));
    // sigma = h/10 gives eps = 5 h = 5 / J
    CHECK(effective_viscosity(cfg) == doctest::Approx(5.0 / 64.0).epsilon(1e-15));
}

TEST_CASE("constant data ride the forcing exactly") {
    SchemeConfig cfg = small_cfg();
    ComplexField u(cfg.J);
    for (std::size_t j = 0; j < cfg.J; ++j) u[j] = cplx(0.3, 0.0);
    for (int n = 0; n < 100; ++n) u = lf_step(u, cfg);
    const cplx expected(0.3, 100.0 * cfg.sigma);
    for (std::size_t j = 0; j < cfg.J; ++j) CHECK(std::abs(u[j] - expected) < 1e-13);
}

TEST_CASE("with forcing disabled a constant is a fixed point") {
    SchemeConfig cfg = small_cfg();
    cfg.forcing_enabled = false;
    ComplexField u(cfg.J);
    for (std::size_t j = 0; j < cfg.J; ++j) u[j] = cplx(-1.2, 0.4);
    ComplexField v = lf_step(u, cfg);
    for (std::size_t j = 0; j < cfg.J; ++j) CHECK(std::abs(v[j] - u[j]) < 1e-15);
}

TEST_CASE("grid mean follows the forcing (conservative flux)") {
    SchemeConfig cfg = small_cfg();
    ComplexField u = ComplexField::sample(cfg.J, [](double x) {
        return cplx(0.5 * std::sin(two_pi * x), 0.0);
    });
    cplx mean0{0.0, 0.0};
    for (std::size_t j = 0; j < cfg.J; ++j) mean0 += u[j];
    mean0 /= static_cast<double>(cfg.J);
    for (int n = 0; n < 200; ++n) u = lf_step(u, cfg);
    cplx mean{0.0, 0.0};
    for (std::size_t j = 0; j < cfg.J; ++j) mean += u[j];
    mean /= static_cast<double>(cfg.J);
    CHECK(std::abs(mean - (mean0 + cplx(0.0, 200.0 * cfg.sigma))) < 1e-12);
}

TEST_CASE("CFL monitor thresholds") {
    SchemeConfig cfg = small_cfg();  // ratio 0.1, so the cap is magnitude 4
    CHECK(cfg.blowup_threshold() == doctest::Approx(4.0));
    ComplexField ok(cfg.J), bad(cfg.J);
    for (std::size_t j = 0; j < cfg.J; ++j) {
        ok[j] = cplx(3.9, 0.0);
        bad[j] = cplx(0.0, 4.1);
    }
    CHECK(cfl_ok(ok, cfg));
    CHECK_FALSE(cfl_ok(bad, cfg));
    // negative imaginary part and small real part: unconditionally fine
    ComplexField neg(cfg.J);
    for (std::size_t j = 0; j < cfg.J; ++j) neg[j] = cplx(0.0, -100.0);
    CHECK(cfl_ok(neg, cfg));
}

TEST_CASE("run reaches the horizon on tame data") {
    SchemeConfig cfg = small_cfg();
    cfg.record_every = 10;
    ComplexField u = ComplexField::sample(cfg.J, [](double x) {
        return cplx(0.1 * std::sin(two_pi * x), 0.0);
    });
    RunTrace tr = run(u, cfg);
    CHECK(tr.termination == Termination::horizon_reached);
    CHECK(tr.times.size() == tr.max_im.size());
    CHECK(tr.times.size() == tr.max_im_shifted.size());
    CHECK(tr.times.front() == 0.0);
    CHECK(tr.times.back() == doctest::Approx(cfg.t_max).epsilon(1e-9));
    CHECK_FALSE(tr.t_f.has_value());  // t_f only reported on a CFL break
    // the shifted curve subtracts the forcing drift i t
    CHECK(tr.max_im.back() - tr.max_im_shifted.back() ==
          doctest::Approx(tr.times.back()).epsilon(1e-9));
}

TEST_CASE("run stops at the CFL break and reports the final computing time") {
    SchemeConfig cfg = small_cfg();
    cfg.t_max = 1e9;  // never reached: the forcing alone drives Im u past 4
    ComplexField u(cfg.J);
    for (std::size_t j = 0; j < cfg.J; ++j) u[j] = cplx(0.0, 0.0);
    RunTrace tr = run(u, cfg);
    CHECK(tr.termination == Termination::cfl_break);
    REQUIRE(tr.t_f.has_value());
    // Im u = t crosses the threshold 4 at t = 4; t_f is just before
    CHECK(*tr.t_f == doctest::Approx(4.0).epsilon(1e-2));
    CHECK(*tr.t_f < 4.0 + cfg.sigma);
}
