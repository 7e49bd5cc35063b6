#include "capwave/evolution.hpp"

#include <algorithm>
#include <cmath>

#include "capwave/cubic.hpp"
#include "capwave/dirichlet_neumann.hpp"
#include "capwave/errors.hpp"
#include "capwave/ops.hpp"
#include "capwave/symbols.hpp"

namespace capwave {

namespace {

constexpr cplx I(0.0, 1.0);

SpectralField abs_dx(const SpectralField& f, double s = 1.0) {
    return fractional_derivative(f, s, true);
}

}  // namespace

SpectralField dn_apply(const SpectralField& h, const SpectralField& phi, DnMode mode,
                       double oracle_tol) {
    switch (mode) {
        case DnMode::Series2: return dn_series(h, phi, 2).sum();
        case DnMode::Series3: return dn_series(h, phi, 3).sum();
        case DnMode::Oracle: return dn_boundary_integral(h, phi, oracle_tol).first;
    }
    throw config_error("dn_apply: unknown mode");
}

HPhiRhs rhs_hphi(const WaveState& state, const IntegratorConfig& cfg) {
    const FrequencyLattice& lat = state.h.lattice;
    const std::size_t n = lat.size();
    HPhiRhs out;

    std::vector<double> hx = grid_values_real(derivative(state.h));
    std::vector<double> phx = grid_values_real(derivative(state.phi));
    for (double v : hx) out.hx_inf = std::max(out.hx_inf, std::abs(v));

    if (!cfg.nonlinear) {
        out.dh_dt = abs_dx(state.phi);
        SpectralField d2h = derivative(derivative(state.h));
        out.dphi_dt = d2h;
        out.v_inf = 0.0;
        return out;
    }

    SpectralField G = dn_apply(state.h, state.phi, cfg.dn_mode, cfg.oracle_tol);
    dealias(G, cfg.dealias);
    out.dh_dt = G;

    std::vector<double> gv = grid_values_real(G);
    std::vector<double> dphi(n);
    double v_inf = 0.0;

    if (cfg.rhs_form == RhsForm::CpwExact) {
        std::vector<double> hv2 = grid_values_real(derivative(derivative(state.h)));
        for (std::size_t i = 0; i < n; ++i) {
            const double m = 1.0 + hx[i] * hx[i];
            const double curv = hv2[i] / (m * std::sqrt(m));
            const double q = gv[i] + hx[i] * phx[i];
            dphi[i] = curv - 0.5 * phx[i] * phx[i] + 0.5 * q * q / m;
            const double b = q / m;
            v_inf = std::max(v_inf, std::abs(phx[i] - b * hx[i]));
        }
    } else {
        // Gradient of the series-truncated energy: curvature term exact,
        // quadratic and cubic terms from the DN2/DN3 quadratic forms.
        std::vector<double> hv2 = grid_values_real(derivative(derivative(state.h)));
        std::vector<double> dp = grid_values_real(abs_dx(state.phi));
        std::vector<double> inner;
        if (cfg.dn_mode != DnMode::Series2) {
            SpectralField hdp = product(state.h, abs_dx(state.phi), cfg.dealias);
            inner = grid_values_real(abs_dx(hdp));
        }
        std::vector<double> d2p = grid_values_real(abs_dx(state.phi, 2.0));
        std::vector<double> hv = grid_values_real(state.h);
        for (std::size_t i = 0; i < n; ++i) {
            const double m = 1.0 + hx[i] * hx[i];
            const double curv = hv2[i] / (m * std::sqrt(m));
            dphi[i] = curv - 0.5 * phx[i] * phx[i] + 0.5 * dp[i] * dp[i];
            if (cfg.dn_mode != DnMode::Series2) {
                dphi[i] += -dp[i] * inner[i] - hv[i] * dp[i] * d2p[i];
            }
            const double q = gv[i] + hx[i] * phx[i];
            v_inf = std::max(v_inf, std::abs(phx[i] - (q / m) * hx[i]));
        }
    }

    out.dphi_dt = forward_transform(lat, dphi);
    dealias(out.dphi_dt, cfg.dealias);
    out.dphi_dt.project_zero_mean();
    out.v_inf = v_inf;
    return out;
}

SpectralField state_to_U(const WaveState& state) {
    SpectralField U = abs_dx(state.h);
    U -= I * fractional_derivative(state.phi, 0.5, true);
    return U;
}

WaveState U_to_state(const SpectralField& U, double h_mean, double t) {
    const FrequencyLattice& lat = U.lattice;
    WaveState st;
    st.t = t;
    st.h = SpectralField(lat, true);
    st.phi = SpectralField(lat, true);
    const std::size_t n = lat.size();
    for (std::size_t i = 1; i < n; ++i) {
        const double xi = lat.xi(i);
        const cplx up = U.coeffs[i];
        const std::size_t im = lat.slot(-lat.mode(i));
        const cplx um = (im == FrequencyLattice::npos) ? cplx(0.0) : std::conj(U.coeffs[im]);
        st.h.coeffs[i] = (up + um) / (2.0 * std::abs(xi));
        st.phi.coeffs[i] = I * (up - um) / (2.0 * std::sqrt(std::abs(xi)));
    }
    st.h.coeffs[0] = h_mean * lat.length();
    st.phi.coeffs[0] = 0.0;
    st.h.enforce_reality();
    st.phi.enforce_reality();
    return st;
}

SpectralField rhs_U_semilinear(const SpectralField& U) {
    SpectralField Ubar = conjugate_field(U);
    auto q = [](int e1, int e2) {
        return Symbol2([e1, e2](double xi, double eta) {
            return symbols::q_semilinear(e1, e2, xi, eta);
        });
    };
    SpectralField out = apply_bilinear(q(1, 1), U, U);
    out += apply_bilinear(q(1, -1), U, Ubar);
    out += apply_bilinear(q(-1, -1), Ubar, Ubar);

    auto mc = [](int i1, int i2, int i3) {
        return Symbol3([i1, i2, i3](double xi, double eta, double sigma) {
            return cubic::m_cubic(i1, i2, i3, xi, eta, sigma);
        });
    };
    out += apply_trilinear(mc(1, 1, -1), U, U, Ubar);
    out += apply_trilinear(mc(1, 1, 1), U, U, U);
    out += apply_trilinear(mc(-1, -1, 1), Ubar, Ubar, U);
    out += apply_trilinear(mc(-1, -1, -1), Ubar, Ubar, Ubar);
    return out;
}

SpectralField cubic_terms_physical(const SpectralField& U) {
    WaveState st = U_to_state(U, 0.0, 0.0);
    Symbol3 n3 = [](double xi, double eta, double sigma) {
        return cplx(cubic::n3(xi, eta, sigma));
    };
    SpectralField dn3 = apply_trilinear(n3, st.h, st.h, st.phi);
    SpectralField out = abs_dx(dn3);

    SpectralField hx = derivative(st.h);
    SpectralField hxx = derivative(hx);
    SpectralField hx2 = product(hx, hx, 1.0);
    out += (1.5 * I) * fractional_derivative(product(hxx, hx2, 1.0), 0.5, true);

    Symbol2 n2 = [](double xi, double eta) { return cplx(cubic::n2(xi, eta)); };
    SpectralField dn2 = apply_bilinear(n2, st.h, st.phi);
    dn2 += product(hx, derivative(st.phi), 1.0);
    SpectralField mix = product(abs_dx(st.phi), dn2, 1.0);
    out -= I * fractional_derivative(mix, 0.5, true);
    return out;
}

namespace {

struct SpectralRhs {
    std::vector<cplx> N;     // nonlinear part of dU/dt - i Lambda U
    double v_inf = 0.0;
    double hx_inf = 0.0;
};

SpectralRhs eval_N(const std::vector<cplx>& Uc, const FrequencyLattice& lat, double h_mean,
                   const IntegratorConfig& cfg) {
    SpectralRhs r;
    if (!cfg.nonlinear) {
        r.N.assign(Uc.size(), cplx(0.0));
        return r;
    }
    SpectralField U(lat);
    U.coeffs = Uc;
    WaveState st = U_to_state(U, h_mean, 0.0);
    HPhiRhs rhs = rhs_hphi(st, cfg);
    // Nonlinear residues: subtract the linear parts |d_x| phi and d_x^2 h.
    SpectralField nl_h = rhs.dh_dt - abs_dx(st.phi);
    SpectralField nl_phi = rhs.dphi_dt - derivative(derivative(st.h));
    SpectralField N = abs_dx(nl_h);
    N -= I * fractional_derivative(nl_phi, 0.5, true);
    r.N = std::move(N.coeffs);
    r.v_inf = rhs.v_inf;
    r.hx_inf = rhs.hx_inf;
    return r;
}

struct EtdCoeffs {
    std::vector<cplx> E, E2, Q, f1, f2, f3;
};

// Cox-Matthews coefficients with contour-averaged phi functions; the circle
// mean of these entire functions recovers the center value spectrally.
EtdCoeffs etd_coeffs(const FrequencyLattice& lat, double dt) {
    const std::size_t n = lat.size();
    constexpr int M = 32;
    EtdCoeffs c;
    c.E.resize(n);
    c.E2.resize(n);
    c.Q.resize(n);
    c.f1.resize(n);
    c.f2.resize(n);
    c.f3.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const cplx z = I * std::pow(std::abs(lat.xi(i)), 1.5) * dt;
        c.E[i] = std::exp(z);
        c.E2[i] = std::exp(0.5 * z);
        cplx q(0.0), f1(0.0), f2(0.0), f3(0.0);
        for (int j = 0; j < M; ++j) {
            const cplx zp = z + std::polar(1.0, 2.0 * std::numbers::pi * (j + 0.5) / M);
            q += (std::exp(0.5 * zp) - 1.0) / zp;
            const cplx ez = std::exp(zp);
            const cplx zp3 = zp * zp * zp;
            f1 += (-4.0 - zp + ez * (4.0 - 3.0 * zp + zp * zp)) / zp3;
            f2 += (2.0 + zp + ez * (-2.0 + zp)) / zp3;
            f3 += (-4.0 - 3.0 * zp - zp * zp + ez * (4.0 - zp)) / zp3;
        }
        const double inv = dt / static_cast<double>(M);
        c.Q[i] = q * inv;
        c.f1[i] = f1 * inv;
        c.f2[i] = f2 * inv;
        c.f3[i] = f3 * inv;
    }
    return c;
}

}  // namespace

WaveState step(const WaveState& state, const IntegratorConfig& cfg) {
    const FrequencyLattice& lat = state.h.lattice;
    const std::size_t n = lat.size();
    const double dt = cfg.dt;
    const double h_mean = state.h.mean().real();

    SpectralField U = state_to_U(state);
    std::vector<cplx>& Y = U.coeffs;

    auto phase = [&](double tau) {
        std::vector<cplx> e(n);
        for (std::size_t i = 0; i < n; ++i)
            e[i] = std::polar(1.0, tau * std::pow(std::abs(lat.xi(i)), 1.5));
        return e;
    };

    SpectralRhs k1 = eval_N(Y, lat, h_mean, cfg);
    if (cfg.nonlinear && dt * k1.v_inf * lat.xi_max() > 0.5) {
        throw divergence_error("step: nonlinear CFL violated, dt*|V|*xi_max = " +
                               std::to_string(dt * k1.v_inf * lat.xi_max()));
    }
    if (cfg.nonlinear && k1.hx_inf >= 1.0) {
        throw divergence_error("step: steepness outside the solver validity region, max|h_x| = " +
                               std::to_string(k1.hx_inf));
    }

    std::vector<cplx> Ynext(n);
    if (cfg.scheme == Scheme::IFRK4) {
        std::vector<cplx> E = phase(dt), E2 = phase(0.5 * dt);
        std::vector<cplx> tmp(n);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = E2[i] * (Y[i] + 0.5 * dt * k1.N[i]);
        SpectralRhs k2 = eval_N(tmp, lat, h_mean, cfg);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = E2[i] * Y[i] + 0.5 * dt * k2.N[i];
        SpectralRhs k3 = eval_N(tmp, lat, h_mean, cfg);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = E[i] * Y[i] + dt * E2[i] * k3.N[i];
        SpectralRhs k4 = eval_N(tmp, lat, h_mean, cfg);
        for (std::size_t i = 0; i < n; ++i) {
            Ynext[i] = E[i] * Y[i] +
                       dt / 6.0 *
                           (E[i] * k1.N[i] + 2.0 * E2[i] * (k2.N[i] + k3.N[i]) + k4.N[i]);
        }
    } else {
        static thread_local EtdCoeffs cached;
        static thread_local double cached_dt = -1.0;
        static thread_local FrequencyLattice cached_lat;
        if (cached_dt != dt || !(cached_lat == lat)) {
            cached = etd_coeffs(lat, dt);
            cached_dt = dt;
            cached_lat = lat;
        }
        const EtdCoeffs& c = cached;
        std::vector<cplx> a(n), b(n), cc(n);
        for (std::size_t i = 0; i < n; ++i) a[i] = c.E2[i] * Y[i] + c.Q[i] * k1.N[i];
        SpectralRhs Na = eval_N(a, lat, h_mean, cfg);
        for (std::size_t i = 0; i < n; ++i) b[i] = c.E2[i] * Y[i] + c.Q[i] * Na.N[i];
        SpectralRhs Nb = eval_N(b, lat, h_mean, cfg);
        for (std::size_t i = 0; i < n; ++i)
            cc[i] = c.E2[i] * a[i] + c.Q[i] * (2.0 * Nb.N[i] - k1.N[i]);
        SpectralRhs Nc = eval_N(cc, lat, h_mean, cfg);
        for (std::size_t i = 0; i < n; ++i) {
            Ynext[i] = c.E[i] * Y[i] + c.f1[i] * k1.N[i] + 2.0 * c.f2[i] * (Na.N[i] + Nb.N[i]) +
                       c.f3[i] * Nc.N[i];
        }
    }

    SpectralField Unew(lat);
    Unew.coeffs = std::move(Ynext);
    dealias(Unew, cfg.dealias);
    WaveState out = U_to_state(Unew, h_mean, state.t + dt);
    return out;
}

double hamiltonian(const WaveState& state, DnMode mode, double oracle_tol) {
    SpectralField G = dn_apply(state.h, state.phi, mode, oracle_tol);
    std::vector<double> gv = grid_values_real(G);
    std::vector<double> pv = grid_values_real(state.phi);
    std::vector<double> hx = grid_values_real(derivative(state.h));
    const double dx = state.h.lattice.dx();
    double kin = 0.0, cap = 0.0;
    for (std::size_t i = 0; i < gv.size(); ++i) {
        kin += gv[i] * pv[i];
        cap += hx[i] * hx[i] / (1.0 + std::sqrt(1.0 + hx[i] * hx[i]));
    }
    return 0.5 * kin * dx + cap * dx;
}

WaveState run(WaveState state, const IntegratorConfig& cfg,
              const std::vector<double>& snapshot_times, const SnapshotCallback& cb,
              double norm_N, double norm_b, double norm_N2) {
    std::size_t next_snap = 0;
    auto emit = [&](const WaveState& s) {
        if (!cb) return;
        SpectralField U = state_to_U(s);
        NormReport nr = norms(U, norm_N, norm_b, norm_N2);
        cb(s, U, nr);
    };
    while (next_snap < snapshot_times.size() && snapshot_times[next_snap] <= state.t + 1e-12) {
        emit(state);
        ++next_snap;
    }
    const double t_end = cfg.t_end;
    while (state.t < t_end - 1e-12) {
        IntegratorConfig c = cfg;
        c.dt = std::min(cfg.dt, t_end - state.t);
        state = step(state, c);
        while (next_snap < snapshot_times.size() && snapshot_times[next_snap] <= state.t + 1e-12) {
            emit(state);
            ++next_snap;
        }
    }
    emit(state);
    return state;
}

}  // namespace capwave
