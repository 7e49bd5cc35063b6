#include <doctest.h>

#include <cmath>
#include <numbers>

#include "capwave/cubic.hpp"
#include "capwave/errors.hpp"
#include "capwave/evolution.hpp"
#include "capwave/ops.hpp"

using namespace capwave;
using std::numbers::pi;

namespace {

WaveState cosine_state(const FrequencyLattice& lat, double eps) {
    WaveState st;
    st.h = sample_real(lat, [eps](double x) { return eps * std::cos(x); });
    st.phi = sample_real(lat, [eps](double x) { return eps * std::sin(x); });
    st.phi.project_zero_mean();
    return st;
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double a = std::log(x[i]), b = std::log(y[i]);
        sx += a;
        sy += b;
        sxx += a * a;
        sxy += a * b;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_CASE("flat and resting reductions of the right side") {
    FrequencyLattice lat(2 * pi, 128);
    IntegratorConfig cfg;
    cfg.dn_mode = DnMode::Series3;

    WaveState flat;
    flat.h = SpectralField(lat, true);
    flat.phi = sample_real(lat, [](double x) { return std::sin(2 * x); });
    HPhiRhs r = rhs_hphi(flat, cfg);
    CHECK(l2_norm(r.dh_dt - fractional_derivative(flat.phi, 1.0, true)) < 1e-12);
    SpectralField expect = sample_real(lat, [](double x) {
        const double px = 2 * std::cos(2 * x);
        const double dp = 2 * std::sin(2 * x);  // |d_x| phi for sin(2x)
        return -0.5 * px * px + 0.5 * dp * dp;
    });
    expect.project_zero_mean();
    dealias(expect, cfg.dealias);
    CHECK(l2_norm(r.dphi_dt - expect) < 1e-11);

    WaveState rest;
    rest.h = sample_real(lat, [](double x) { return 0.1 * std::cos(x); });
    rest.phi = SpectralField(lat, true);
    HPhiRhs r2 = rhs_hphi(rest, cfg);
    CHECK(l2_norm(r2.dh_dt) < 1e-12);
    SpectralField curv = sample_real(lat, [](double x) {
        const double hx = -0.1 * std::sin(x);
        const double hxx = -0.1 * std::cos(x);
        return hxx / std::pow(1.0 + hx * hx, 1.5);
    });
    curv.project_zero_mean();
    dealias(curv, cfg.dealias);
    CHECK(l2_norm(r2.dphi_dt - curv) < 1e-11);
}

TEST_CASE("linearization: RHS matches (|xi| phi, -xi^2 h) to quadratic order") {
    FrequencyLattice lat(2 * pi, 64);
    IntegratorConfig cfg;
    std::vector<double> eps{0.02, 0.01, 0.005};
    std::vector<double> dev;
    for (double e : eps) {
        WaveState st = cosine_state(lat, e);
        HPhiRhs r = rhs_hphi(st, cfg);
        SpectralField lin_h = fractional_derivative(st.phi, 1.0, true);
        SpectralField lin_phi = derivative(derivative(st.h));
        dealias(lin_phi, cfg.dealias);
        dev.push_back(l2_norm(r.dh_dt - lin_h) + l2_norm(r.dphi_dt - lin_phi));
    }
    CHECK(slope(eps, dev) >= 1.8);
}

TEST_CASE("U mapping round trip") {
    FrequencyLattice lat(2 * pi, 64);
    WaveState st = cosine_state(lat, 0.1);
    SpectralField U = state_to_U(st);
    WaveState back = U_to_state(U, st.h.mean().real(), st.t);
    CHECK(l2_norm(back.h - st.h) < 1e-13);
    CHECK(l2_norm(back.phi - st.phi) < 1e-13);
}

TEST_CASE("pure linear run returns after one period") {
    FrequencyLattice lat(2 * pi, 64);
    IntegratorConfig cfg;
    cfg.nonlinear = false;
    cfg.dt = 0.05;
    WaveState st = cosine_state(lat, 0.3);
    const double period = 2 * pi;  // mode 1: 2 pi / |1|^{3/2}
    cfg.t_end = period;
    WaveState fin = st;
    // integer steps then a closing fractional step
    int n = static_cast<int>(period / cfg.dt);
    for (int i = 0; i < n; ++i) fin = step(fin, cfg);
    IntegratorConfig last = cfg;
    last.dt = period - n * cfg.dt;
    if (last.dt > 1e-12) fin = step(fin, last);
    CHECK(l2_norm(fin.h - st.h) < 1e-10);
    CHECK(l2_norm(fin.phi - st.phi) < 1e-10);
}

TEST_CASE("fourth order convergence under dt halving") {
    FrequencyLattice lat(2 * pi, 64);
    for (Scheme sch : {Scheme::IFRK4, Scheme::ETDRK4}) {
        IntegratorConfig cfg;
        cfg.scheme = sch;
        cfg.dn_mode = DnMode::Series3;
        cfg.t_end = 1.0;
        WaveState st = cosine_state(lat, 0.05);

        auto advance = [&](double dt) {
            IntegratorConfig c = cfg;
            c.dt = dt;
            WaveState s = st;
            const int n = static_cast<int>(std::round(cfg.t_end / dt));
            for (int i = 0; i < n; ++i) s = step(s, c);
            return s;
        };
        WaveState da = advance(0.05);
        WaveState db = advance(0.025);
        WaveState dc = advance(0.0125);
        const double e1 = l2_norm(da.h - dc.h) + l2_norm(da.phi - dc.phi);
        const double e2 = l2_norm(db.h - dc.h) + l2_norm(db.phi - dc.phi);
        // error(da) ~ e1 approx err(0.05), e2 approx err(0.025); ratio ~ 2^4
        CHECK(e1 / e2 >= 12.0);
    }
}

TEST_CASE("reality, mean conservation, gauge over a short nonlinear run") {
    FrequencyLattice lat(2 * pi, 128);
    IntegratorConfig cfg;
    cfg.dt = 0.02;
    cfg.t_end = 2.0;
    WaveState st = cosine_state(lat, 0.02);
    const double hm = st.h.mean().real();
    WaveState fin = run(st, cfg, {}, nullptr);
    CHECK(fin.h.reality_defect() < 1e-12);
    CHECK(fin.phi.reality_defect() < 1e-12);
    CHECK(std::abs(fin.h.mean().real() - hm) < 1e-10);
    CHECK(std::abs(fin.phi.mean()) < 1e-14);
}

TEST_CASE("time reversibility of the step pair") {
    FrequencyLattice lat(2 * pi, 64);
    IntegratorConfig cfg;
    cfg.dt = 0.02;
    WaveState st = cosine_state(lat, 0.05);
    WaveState fwd = step(st, cfg);
    fwd.phi *= -1.0;
    WaveState back = step(fwd, cfg);
    back.phi *= -1.0;
    const double err = l2_norm(back.h - st.h) + l2_norm(back.phi - st.phi);
    CHECK(err < 50.0 * std::pow(cfg.dt, 5.0));
}

TEST_CASE("CFL violation is rejected with a diagnostic") {
    FrequencyLattice lat(2 * pi, 256);
    IntegratorConfig cfg;
    cfg.dt = 50.0;
    WaveState st = cosine_state(lat, 0.05);
    CHECK_THROWS_AS(step(st, cfg), divergence_error);

    // Steepness outside the validity region is rejected too.
    IntegratorConfig small;
    small.dt = 1e-4;
    WaveState steep = cosine_state(lat, 1.5);
    CHECK_THROWS_AS(step(steep, small), divergence_error);
}

TEST_CASE("semilinear U equation: consistency with the full right side") {
    FrequencyLattice lat(2 * pi, 32);
    IntegratorConfig cfg;
    cfg.dn_mode = DnMode::Series3;
    cfg.dealias = 1.0;
    std::vector<double> eps{0.02, 0.01, 0.005};
    std::vector<double> dev;
    for (double e : eps) {
        WaveState st = cosine_state(lat, e);
        SpectralField U = state_to_U(st);
        HPhiRhs r = rhs_hphi(st, cfg);
        // dU/dt - i Lambda U from the (h,phi) right side.
        SpectralField dU = fractional_derivative(r.dh_dt, 1.0, true);
        dU -= cplx(0.0, 1.0) * fractional_derivative(r.dphi_dt, 0.5, true);
        for (std::size_t i = 0; i < dU.size(); ++i) {
            const double lam = std::pow(std::abs(lat.xi(i)), 1.5);
            dU.coeffs[i] -= cplx(0.0, lam) * U.coeffs[i];
        }
        SpectralField semi = rhs_U_semilinear(U);
        dev.push_back(l2_norm(dU - semi));
    }
    CHECK(slope(eps, dev) >= 3.5);
}

TEST_CASE("cubic symbol assembly equals the physical product route") {
    FrequencyLattice lat(2 * pi, 32);
    WaveState st = cosine_state(lat, 0.07);
    st.h += sample_real(lat, [](double x) { return 0.03 * std::cos(2 * x + 0.7); });
    SpectralField U = state_to_U(st);
    SpectralField Ubar = conjugate_field(U);
    auto mc = [](int i1, int i2, int i3) {
        return Symbol3([i1, i2, i3](double xi, double eta, double sigma) {
            return cubic::m_cubic(i1, i2, i3, xi, eta, sigma);
        });
    };
    SpectralField viaSymbols = apply_trilinear(mc(1, 1, -1), U, U, Ubar);
    viaSymbols += apply_trilinear(mc(1, 1, 1), U, U, U);
    viaSymbols += apply_trilinear(mc(-1, -1, 1), Ubar, Ubar, U);
    viaSymbols += apply_trilinear(mc(-1, -1, -1), Ubar, Ubar, Ubar);
    SpectralField viaPhysical = cubic_terms_physical(U);
    CHECK(l2_norm(viaSymbols - viaPhysical) < 1e-12 * std::max(1.0, l2_norm(viaPhysical)));
}

TEST_CASE("resonant cubic channel weight at (xi, 0, -xi)") {
    // Single conjugate pair: the ++- channel at output xi carries
    // m_{++-}(xi,0,-xi) = i |xi|^{3/2}/16.
    const double xi = 2.0;
    const cplx m = cubic::m_cubic(1, 1, -1, xi, 0.0, -xi);
    CHECK(std::abs(m - cplx(0.0, std::pow(xi, 1.5) / 16.0)) < 1e-13);
}

TEST_CASE("hamiltonian closed forms") {
    FrequencyLattice lat(2 * pi, 128);
    // h = 0: H = (1/2L) sum |xi| |phi_hat|^2.
    WaveState st;
    st.h = SpectralField(lat, true);
    st.phi = sample_real(lat, [](double x) { return std::sin(x) + 0.25 * std::cos(3 * x); });
    const double H = hamiltonian(st, DnMode::Oracle, 1e-12);
    double expect = 0.0;
    for (std::size_t i = 0; i < lat.size(); ++i) {
        expect += std::abs(lat.xi(i)) * std::norm(st.phi.coeffs[i]);
    }
    expect *= 0.5 / lat.length();
    CHECK(H == doctest::Approx(expect).epsilon(1e-9));

    // phi = 0, h single mode: capillary part only, about int h_x^2 / 2.
    const double e = 0.01;
    WaveState st2;
    st2.h = sample_real(lat, [e](double x) { return 2 * e * std::cos(x); });
    st2.phi = SpectralField(lat, true);
    const double H2 = hamiltonian(st2, DnMode::Series3);
    double cap = 0.0;
    std::vector<double> hx = grid_values_real(derivative(st2.h));
    for (double v : hx) cap += 0.5 * v * v;
    cap *= lat.dx();
    CHECK(std::abs(H2 - cap) < 10.0 * std::pow(e, 4.0));

    // Quadratic-form approximation to cubic order in amplitude.
    std::vector<double> eps{0.02, 0.01, 0.005};
    std::vector<double> dev;
    for (double a : eps) {
        WaveState s = cosine_state(lat, a);
        const double Hh = hamiltonian(s, DnMode::Oracle, 1e-12);
        double quad = 0.0;
        for (std::size_t i = 0; i < lat.size(); ++i) {
            const double axi = std::abs(lat.xi(i));
            quad += axi * std::norm(s.phi.coeffs[i]) + axi * axi * std::norm(s.h.coeffs[i]);
        }
        quad *= 0.5 / lat.length();
        dev.push_back(std::abs(Hh - quad) + 1e-300);
    }
    CHECK(slope(eps, dev) >= 2.5);
}
