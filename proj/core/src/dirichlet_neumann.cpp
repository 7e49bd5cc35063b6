#include "capwave/dirichlet_neumann.hpp"

#include <cmath>
#include <numbers>

#include "capwave/cubic.hpp"
#include "capwave/cutoff.hpp"
#include "capwave/errors.hpp"
#include "capwave/ops.hpp"

namespace capwave {

namespace {

constexpr cplx I(0.0, 1.0);

// Pointwise product via 2x zero padding: exact convolution projected back
// onto the lattice, so nested products agree with the full kernel sums.
SpectralField product_padded(const SpectralField& a, const SpectralField& b) {
    const FrequencyLattice& lat = a.lattice;
    const std::size_t n = lat.size();
    const FrequencyLattice wide(lat.length(), 2 * n);
    auto lift = [&](const SpectralField& f) {
        SpectralField g(wide);
        for (std::size_t i = 0; i < n; ++i) {
            long m = lat.mode(i);
            g.set_mode(m, f.coeffs[i]);
        }
        return g;
    };
    SpectralField wa = lift(a), wb = lift(b);
    std::vector<cplx> va = inverse_transform(wa), vb = inverse_transform(wb);
    for (std::size_t i = 0; i < va.size(); ++i) va[i] *= vb[i];
    SpectralField wp = forward_transform(wide, va);
    SpectralField out(lat);
    for (std::size_t i = 0; i < n; ++i) out.coeffs[i] = wp.at_mode(lat.mode(i));
    out.reality_flag = a.reality_flag && b.reality_flag;
    return out;
}

SpectralField abs_dx(const SpectralField& f, double s = 1.0) {
    return fractional_derivative(f, s, true);
}

// Quadratic kernel in product form: -d_x(h phi_x) - |d_x|(h |d_x| phi).
SpectralField dn2_fast(const SpectralField& h, const SpectralField& phi) {
    SpectralField t1 = derivative(product_padded(h, derivative(phi)));
    SpectralField t2 = abs_dx(product_padded(h, abs_dx(phi)));
    SpectralField out = t1;
    out *= -1.0;
    out -= t2;
    return out;
}

// Cubic kernel in product form:
//   |d_x|(h |d_x|(h |d_x| phi)) - 1/2 |d_x|^2 (h^2 |d_x| phi) - 1/2 |d_x|(h^2 |d_x|^2 phi).
SpectralField dn3_fast(const SpectralField& h, const SpectralField& phi) {
    SpectralField dphi = abs_dx(phi);
    SpectralField inner = abs_dx(product_padded(h, dphi));
    SpectralField t1 = abs_dx(product_padded(h, inner));
    SpectralField h2 = product_padded(h, h);
    SpectralField t2 = fractional_derivative(product_padded(h2, dphi), 2.0);
    SpectralField t3 = abs_dx(product_padded(h2, abs_dx(phi, 2.0)));
    SpectralField out = t1;
    out -= 0.5 * t2;
    out -= 0.5 * t3;
    return out;
}

}  // namespace

SpectralField DNExpansion::sum() const {
    SpectralField s = order0;
    if (truncation_order >= 2) s += order2;
    if (truncation_order >= 3) s += order3;
    return s;
}

DNExpansion dn_series(const SpectralField& h, const SpectralField& phi, int max_order,
                      bool exact_sums) {
    if (max_order < 1 || max_order > 3) throw config_error("dn_series: max_order must be 1..3");
    if (h.lattice != phi.lattice) throw config_error("dn_series: lattice mismatch");
    DNExpansion ex;
    ex.truncation_order = max_order;
    ex.radius_warning = linf_norm(derivative(h)) >= 1.0;
    ex.order0 = abs_dx(phi);
    ex.order2 = SpectralField(h.lattice);
    ex.order3 = SpectralField(h.lattice);
    if (max_order >= 2) {
        if (exact_sums) {
            Symbol2 n2 = [](double xi, double eta) { return cplx(cubic::n2(xi, eta)); };
            ex.order2 = apply_bilinear(n2, h, phi);
        } else {
            ex.order2 = dn2_fast(h, phi);
        }
    }
    if (max_order >= 3) {
        if (exact_sums) {
            Symbol3 n3 = [](double xi, double eta, double sigma) {
                return cplx(cubic::n3(xi, eta, sigma));
            };
            ex.order3 = apply_trilinear(n3, h, h, phi);
        } else {
            ex.order3 = dn3_fast(h, phi);
        }
    }
    return ex;
}

namespace {

// Shared geometry for the periodized boundary-integral kernels.
struct CurveData {
    std::vector<double> hv, hp, hpp;  // h, h', h'' on the grid
    double L = 0.0;
    double dx = 0.0;
    std::size_t n = 0;
};

CurveData curve_data(const SpectralField& h) {
    CurveData cd;
    cd.L = h.lattice.length();
    cd.dx = h.lattice.dx();
    cd.n = h.lattice.size();
    cd.hv = grid_values_real(h);
    cd.hp = grid_values_real(derivative(h));
    cd.hpp = grid_values_real(derivative(derivative(h)));
    return cd;
}

// (pi/L) cot(pi z / L) for complex z (the periodization of 1/z).
cplx cot_kernel(cplx z, double L) {
    const cplx w = std::numbers::pi * z / L;
    return std::numbers::pi / L * std::cos(w) / std::sin(w);
}

double cot_kernel(double z, double L) {
    const double w = std::numbers::pi * z / L;
    return std::numbers::pi / L * std::cos(w) / std::sin(w);
}

// Complex kernel of H_gamma - H_0 including the 1/(pi i) prefactor and the
// diagonal fill-in; W f = -T1 f + i T2 f for real f.
std::vector<std::vector<cplx>> build_w_kernel(const CurveData& cd) {
    std::vector<std::vector<cplx>> K(cd.n, std::vector<cplx>(cd.n));
    const cplx pref = 1.0 / (std::numbers::pi * I);
    for (std::size_t i = 0; i < cd.n; ++i) {
        const double ai = cd.dx * static_cast<double>(i);
        const cplx ga(ai, cd.hv[i]);
        for (std::size_t j = 0; j < cd.n; ++j) {
            if (i == j) {
                K[i][j] = pref * (-I * cd.hpp[i] / (2.0 * cplx(1.0, cd.hp[i])));
                continue;
            }
            const double bj = cd.dx * static_cast<double>(j);
            const cplx gb(bj, cd.hv[j]);
            const cplx gprime(1.0, cd.hp[j]);
            K[i][j] = pref * (gprime * cot_kernel(ga - gb, cd.L) - cot_kernel(ai - bj, cd.L));
        }
    }
    return K;
}

std::vector<cplx> apply_kernel(const std::vector<std::vector<cplx>>& K, const CurveData& cd,
                               const std::vector<double>& f) {
    std::vector<cplx> out(cd.n);
    for (std::size_t i = 0; i < cd.n; ++i) {
        cplx acc(0.0);
        for (std::size_t j = 0; j < cd.n; ++j) acc += K[i][j] * f[j];
        out[i] = acc * cd.dx;
    }
    return out;
}

double grid_l2(const std::vector<double>& v, double dx) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s * dx);
}

// -i H_0 phi (the conjugate function), real for real phi.
std::vector<double> conjugate_function(const SpectralField& phi) {
    SpectralField g = hilbert_transform(phi);
    g *= cplx(0.0, -1.0);
    std::vector<cplx> v = inverse_transform(g);
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].real();
    return out;
}

}  // namespace

SpectralField t1_apply(const SpectralField& h, const SpectralField& f) {
    CurveData cd = curve_data(h);
    auto K = build_w_kernel(cd);
    std::vector<cplx> w = apply_kernel(K, cd, grid_values_real(f));
    std::vector<double> out(cd.n);
    for (std::size_t i = 0; i < cd.n; ++i) out[i] = -w[i].real();
    return forward_transform(h.lattice, out);
}

SpectralField t2_apply(const SpectralField& h, const SpectralField& f) {
    CurveData cd = curve_data(h);
    auto K = build_w_kernel(cd);
    std::vector<cplx> w = apply_kernel(K, cd, grid_values_real(f));
    std::vector<double> out(cd.n);
    for (std::size_t i = 0; i < cd.n; ++i) out[i] = w[i].imag();
    return forward_transform(h.lattice, out);
}

std::pair<SpectralField, BoundaryIntegralState> dn_boundary_integral(const SpectralField& h,
                                                                     const SpectralField& phi,
                                                                     double tol, int max_iter) {
    if (h.lattice != phi.lattice) throw config_error("dn_boundary_integral: lattice mismatch");
    if (!(tol >= 1e-13 && tol <= 1e-6))
        throw config_error("dn_boundary_integral: tol must lie in [1e-13, 1e-6]");

    SpectralField phi0 = phi;
    phi0.project_zero_mean();  // G(h) annihilates constants

    CurveData cd = curve_data(h);
    auto K = build_w_kernel(cd);

    // rhs = (-i H0 + T2) phi
    std::vector<double> phig = grid_values_real(phi0);
    std::vector<cplx> wphi = apply_kernel(K, cd, phig);
    std::vector<double> rhs = conjugate_function(phi0);
    for (std::size_t i = 0; i < cd.n; ++i) rhs[i] += wphi[i].imag();

    // Picard for (I + T1) psi = rhs; relaxation 0.5 if the residual oscillates.
    std::vector<double> psi = rhs;
    std::vector<double> residual_hist;
    double relax = 1.0;
    bool converged = false;
    BoundaryIntegralState st;
    for (int it = 0; it < max_iter; ++it) {
        std::vector<cplx> wpsi = apply_kernel(K, cd, psi);
        std::vector<double> resid(cd.n), next(cd.n);
        for (std::size_t i = 0; i < cd.n; ++i) {
            const double t1psi = -wpsi[i].real();
            resid[i] = psi[i] + t1psi - rhs[i];
            next[i] = psi[i] - relax * resid[i];
        }
        const double rnorm = grid_l2(resid, cd.dx);
        residual_hist.push_back(rnorm);
        st.iteration_count = it + 1;
        st.residual = rnorm;
        if (rnorm <= tol) {
            converged = true;  // keep the iterate whose residual was measured
            break;
        }
        if (residual_hist.size() >= 2 && rnorm > residual_hist[residual_hist.size() - 2]) {
            relax = 0.5;
        }
        psi = std::move(next);
    }
    if (!converged) {
        throw divergence_error("dn_boundary_integral: no convergence", residual_hist);
    }
    st.residual_history = residual_hist;
    st.psi = forward_transform(h.lattice, psi);
    SpectralField G = derivative(st.psi);
    G *= -1.0;
    G.enforce_reality();
    return {G, st};
}

SpectralField rn_term(const SpectralField& h, const SpectralField& f, int n) {
    if (n < 0 || n > 4) throw config_error("rn_term: n must lie in 0..4");
    if (h.lattice != f.lattice) throw config_error("rn_term: lattice mismatch");
    CurveData cd = curve_data(h);
    std::vector<double> fv = grid_values_real(f);
    std::vector<double> out(cd.n, 0.0);
    for (std::size_t i = 0; i < cd.n; ++i) {
        const double ai = cd.dx * static_cast<double>(i);
        double acc = 0.0;
        for (std::size_t j = 0; j < cd.n; ++j) {
            double g;
            if (i == j) {
                g = 0.5 * cd.hpp[i] * std::pow(cd.hp[i], n);
            } else {
                const double bj = cd.dx * static_cast<double>(j);
                const double kk = cot_kernel(ai - bj, cd.L);
                const double slope = (cd.hv[i] - cd.hv[j]) * kk;  // periodized difference quotient
                g = (slope - cd.hp[j]) * std::pow(slope, n) * kk;
            }
            acc += g * fv[j];
        }
        out[i] = acc * cd.dx / std::numbers::pi;
    }
    return forward_transform(h.lattice, out);
}

ParalinearSplit paralinear_split(const SpectralField& h, const SpectralField& phi,
                                 const SpectralField& G) {
    ParalinearSplit ps;
    ps.G = G;

    std::vector<double> hp = grid_values_real(derivative(h));
    std::vector<double> phx = grid_values_real(derivative(phi));
    std::vector<double> gv = grid_values_real(G);
    const std::size_t n = h.lattice.size();
    std::vector<double> bv(n), vv(n);
    for (std::size_t i = 0; i < n; ++i) {
        bv[i] = (gv[i] + hp[i] * phx[i]) / (1.0 + hp[i] * hp[i]);
        vv[i] = phx[i] - bv[i] * hp[i];
    }
    ps.B = forward_transform(h.lattice, bv);
    ps.V = forward_transform(h.lattice, vv);

    SpectralField pgeh = lp_projection(h, 1, LPKind::PGe);
    ps.omega = phi - paraproduct(ps.B, pgeh);

    // Quadratic term: kernel [1 - chi(xi-eta,eta)][xi(xi-eta) - |xi||xi-eta|]
    // acting on (phi at xi-eta, h at eta).
    Symbol2 g2sym = [](double xi, double eta) {
        const double x = xi - eta;
        return cplx((1.0 - cutoff::chi(x, eta)) * (xi * x - std::abs(xi) * std::abs(x)));
    };
    ps.G2 = apply_bilinear(g2sym, phi, h);

    SpectralField recon = fractional_derivative(ps.omega, 1.0, true);
    recon -= fractional_derivative(paraproduct(ps.B, lp_projection(h, 0, LPKind::PLe)), 1.0, true);
    recon -= derivative(paraproduct(ps.V, h));
    recon += ps.G2;
    ps.G_ge3 = G - recon;
    return ps;
}

}  // namespace capwave
