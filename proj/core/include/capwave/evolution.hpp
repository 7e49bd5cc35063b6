#pragma once

#include <functional>
#include <optional>

#include "capwave/field.hpp"
#include "capwave/norms.hpp"

namespace capwave {

enum class Scheme { IFRK4, ETDRK4 };
enum class DnMode { Series2, Series3, Oracle };

// Two algebraically equivalent-through-cubic forms of the phi equation:
// the literal water-wave right side, and the variational gradient of the
// series-truncated energy (used for long conservation runs).
enum class RhsForm { CpwExact, Variational3 };

struct WaveState {
    double t = 0.0;
    SpectralField h;    // real surface elevation
    SpectralField phi;  // real boundary potential, mean projected to zero
};

struct IntegratorConfig {
    double dt = 0.01;
    Scheme scheme = Scheme::ETDRK4;
    double dealias = 2.0 / 3.0;
    DnMode dn_mode = DnMode::Series3;
    RhsForm rhs_form = RhsForm::CpwExact;
    bool nonlinear = true;
    double t_end = 1.0;
    double oracle_tol = 1e-11;
};

// G(h)phi through the configured route.
SpectralField dn_apply(const SpectralField& h, const SpectralField& phi, DnMode mode,
                       double oracle_tol = 1e-11);

// Right side of the (h, phi) system; products dealiased at cfg.dealias.
struct HPhiRhs {
    SpectralField dh_dt;
    SpectralField dphi_dt;
    double v_inf = 0.0;   // max |V| over the grid, for the CFL check
    double hx_inf = 0.0;  // max |h_x|: the solver validity region needs < 1
};
HPhiRhs rhs_hphi(const WaveState& state, const IntegratorConfig& cfg);

// Complex energy variable U = |d_x| h - i |d_x|^{1/2} phi and its inverse
// (the zero mode of h is carried separately and phi is mean-free).
SpectralField state_to_U(const WaveState& state);
WaveState U_to_state(const SpectralField& U, double h_mean, double t);

// Q_U + C_U of the semilinear U-equation, evaluated with the closed-form
// quadratic symbols and the cubic combinations of the generator symbols
// (exact lattice sums; meant for verification at modest N).
SpectralField rhs_U_semilinear(const SpectralField& U);
// Same cubic terms through the physical product form (dual route).
SpectralField cubic_terms_physical(const SpectralField& U);

// One time step; throws divergence_error on CFL violation.
WaveState step(const WaveState& state, const IntegratorConfig& cfg);

// Conserved energy: (1/2) int G(h)phi phi dx + int h_x^2/(1+sqrt(1+h_x^2)) dx.
double hamiltonian(const WaveState& state, DnMode mode, double oracle_tol = 1e-11);

// Integrate to cfg.t_end, invoking the callback after every step whose time
// crosses the next entry of `snapshot_times` (always called at t_end).
using SnapshotCallback =
    std::function<void(const WaveState&, const SpectralField& U, const NormReport&)>;
WaveState run(WaveState state, const IntegratorConfig& cfg,
              const std::vector<double>& snapshot_times, const SnapshotCallback& cb,
              double norm_N = 3.0, double norm_b = 0.0, double norm_N2 = 5.0);

}  // namespace capwave
