#include "capwave/scattering.hpp"

#include <cmath>
#include <numbers>

#include "capwave/cubic.hpp"
#include "capwave/errors.hpp"
#include "capwave/ops.hpp"

namespace capwave {

Profile::Profile(const FrequencyLattice& lat, Variant variant, bool nonlinear_coupling)
    : lattice_(lat), variant_(variant), coupled_(nonlinear_coupling) {
    const std::size_t n = lat.size();
    coeff_.assign(n, 0.0);
    if (coupled_) {
        for (std::size_t i = 1; i < n; ++i) {
            // Resonant coefficient through the symbol pipeline: c_tilde/(4 pi^2).
            const double xi = lat.xi(i);
            if (xi == 0.0) continue;
            coeff_[i] = cubic::resonant_values(xi).c_tilde /
                        (4.0 * std::numbers::pi * std::numbers::pi);
        }
    }
    fhat_.assign(n, cplx(0.0));
    L_.assign(n, 0.0);
    prev_dens_.assign(n, 0.0);
}

void Profile::observe(const SpectralField& field, double t) {
    if (field.lattice != lattice_) throw config_error("profile: lattice mismatch");
    const std::size_t n = lattice_.size();
    // fhat = e^{-it Lambda} (spectral variable).
    std::vector<cplx> fh(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double lam = std::pow(std::abs(lattice_.xi(i)), 1.5);
        fh[i] = field.coeffs[i] * std::polar(1.0, -t * lam);
    }
    std::vector<double> dens(n);
    for (std::size_t i = 0; i < n; ++i) dens[i] = std::norm(fh[i]) / (1.0 + t);

    if (have_prev_) {
        if (t < t_) throw config_error("profile: observations must be time-ordered");
        const double dt = t - t_;
        if (dt > 0.1 * (1.0 + t_)) accuracy_warning_ = true;
        for (std::size_t i = 0; i < n; ++i) {
            L_[i] += coeff_[i] * 0.5 * (prev_dens_[i] + dens[i]) * dt;
        }
    }
    fhat_ = std::move(fh);
    prev_dens_ = std::move(dens);
    t_ = t;
    have_prev_ = true;
}

std::vector<cplx> Profile::corrected() const {
    std::vector<cplx> g(fhat_.size());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::polar(1.0, L_[i]) * fhat_[i];
    return g;
}

std::vector<cplx> Profile::uncorrected() const { return fhat_; }

namespace {

double weighted_sup_diff(const std::vector<cplx>& a, const std::vector<cplx>& b,
                         const FrequencyLattice& lat, double N2, double cut) {
    double sup = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double axi = std::abs(lat.xi(i));
        if (axi == 0.0 || axi > cut) continue;
        const double w = std::pow(axi, 0.1) + std::pow(axi, N2 + 0.5);
        sup = std::max(sup, w * std::abs(a[i] - b[i]));
    }
    return sup;
}

}  // namespace

ConvergenceReport convergence_monitor(const ScatteringRecord& record) {
    if (record.dyadic_times.size() < 4)
        throw config_error("convergence_monitor: need at least 4 dyadic snapshots");
    ConvergenceReport rep;
    const double cut =
        record.weight_cut > 0.0 ? record.weight_cut : record.lattice.xi_max() * (2.0 / 3.0);
    for (std::size_t m = 0; m + 1 < record.dyadic_times.size(); ++m) {
        rep.corrected_drift.push_back(weighted_sup_diff(
            record.g_snapshots[m + 1], record.g_snapshots[m], record.lattice, record.weight_N2,
            cut));
        rep.uncorrected_drift.push_back(weighted_sup_diff(
            record.uncorrected_snapshots[m + 1], record.uncorrected_snapshots[m], record.lattice,
            record.weight_N2, cut));
    }
    bool geo = true, unc_geo = true;
    for (std::size_t m = 0; m + 1 < rep.corrected_drift.size(); ++m) {
        if (rep.corrected_drift[m] > 0 && rep.corrected_drift[m + 1] > 0.8 * rep.corrected_drift[m])
            geo = false;
        if (rep.uncorrected_drift[m] > 0 &&
            rep.uncorrected_drift[m + 1] > 0.8 * rep.uncorrected_drift[m])
            unc_geo = false;
    }
    rep.corrected_geometric = geo;
    rep.pass = geo && !unc_geo;
    rep.final_ratio = rep.uncorrected_drift.back() > 0.0
                          ? rep.corrected_drift.back() / rep.uncorrected_drift.back()
                          : 0.0;
    return rep;
}

AsymptoticModel build_asymptotic_model(const Profile& profile) {
    AsymptoticModel m;
    m.lattice = profile.lattice();
    m.g_final = profile.corrected();
    m.L_final = profile.phase();
    m.t_final = profile.time();
    m.d0 = cubic::d0_chain();
    return m;
}

double physical_space_residual(const AsymptoticModel& model, const SpectralField& U, double t,
                               double y_min, double y_max, int samples) {
    if (U.lattice != model.lattice) throw config_error("physical_space_residual: lattice mismatch");
    SpectralField gf(model.lattice);
    gf.coeffs = model.g_final;
    SpectralField Lf(model.lattice);
    for (std::size_t i = 0; i < Lf.size(); ++i) Lf.coeffs[i] = model.L_final[i];

    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        const double y = y_min + (y_max - y_min) * (s + 0.5) / samples;
        const double xi0 = cubic::xi_of_y(y);
        // g_inf and A_inf extracted from the final snapshot.
        const cplx gval = interpolate_coeff(gf, xi0);
        const cplx g_inf = std::pow(std::abs(xi0), 0.25) * gval;
        const double Lval = interpolate_coeff(Lf, xi0).real();
        const double cstar = std::pow(std::abs(xi0), 1.5) * std::norm(g_inf) /
                             (24.0 * std::numbers::pi);
        const double A_inf = Lval - cstar * std::log(1.0 + model.t_final);

        const cplx f_inf = std::sqrt(cplx(0.0, 2.0) / (3.0 * std::numbers::pi)) * g_inf *
                           std::polar(1.0, -A_inf);
        const double ay3 = std::abs(y) * std::abs(y) * std::abs(y);
        const cplx modelval = std::polar(1.0, -t * (4.0 / 27.0) * ay3) / std::sqrt(1.0 + t) *
                              f_inf *
                              std::polar(1.0, -model.d0 * ay3 * std::norm(f_inf) *
                                                  std::log(1.0 + t));
        // U(x, t) from the lattice mode sum at x = y t (field already at time t).
        const double x = y * t;
        cplx uval(0.0);
        for (std::size_t i = 0; i < U.size(); ++i) {
            if (U.coeffs[i] == cplx(0.0)) continue;
            uval += U.coeffs[i] * std::polar(1.0, U.lattice.xi(i) * x);
        }
        uval /= U.lattice.length();
        worst = std::max(worst, std::abs(uval - modelval));
    }
    return worst;
}

}  // namespace capwave
