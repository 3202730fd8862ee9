#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cburg/torus_field.hpp"

namespace cburg {

/// Run contract for the explicit Lax-Friedrichs solver of
///   d_t u + u d_x u = i
/// on the periodic grid. The scheme's numerical diffusion makes it a
/// second-order-consistent discretization of the viscous equation with
/// effective viscosity h^2 / (2 sigma).
struct SchemeConfig {
    std::size_t J = 2;           // grid size, h = 1/J
    double sigma = 1e-4;         // time step
    double cfl_cap = 0.4;
    double t_max = 1.0;
    std::size_t record_every = 20;
    bool forcing_enabled = true;  // test hook; production runs keep the forcing on

    double h() const { return 1.0 / static_cast<double>(J); }
    double cfl_ratio() const { return sigma * static_cast<double>(J); }
    /// Solution magnitude at which the CFL condition fails (0.4 / ratio; 4 at ratio 0.1).
    double blowup_threshold() const { return cfl_cap / cfl_ratio(); }
};

/// Effective viscosity of the scheme, eps = h^2 / (2 sigma).
double effective_viscosity(const SchemeConfig& cfg);

/// One conservative-flux Lax-Friedrichs step with flux F(u) = u^2/2 and the
/// complex forcing added after the flux update:
///   u'_j = (u_{j+1} + u_{j-1})/2 - (sigma/2h)(F(u_{j+1}) - F(u_{j-1})) + i sigma.
ComplexField lf_step(const ComplexField& u, const SchemeConfig& cfg);

/// CFL monitor: sigma/h < cap / max(max_j |Re u_j|, max_j Im u_j).
/// A zero (or negative) max is unconditionally fine.
bool cfl_ok(const ComplexField& u, const SchemeConfig& cfg);

enum class Termination { horizon_reached, cfl_break, non_finite };

struct RunTrace {
    std::vector<double> times;
    std::vector<double> max_im;          // max_j Im u
    std::vector<double> max_re;          // max_j |Re u|
    std::vector<double> max_im_shifted;  // max_j Im (u - i t)
    std::optional<double> t_f;           // last time at which the CFL condition held
    Termination termination = Termination::horizon_reached;
};

/// Step until t_max or CFL break, recording every record_every steps.
RunTrace run(const ComplexField& datum, const SchemeConfig& cfg);

}  // namespace cburg
