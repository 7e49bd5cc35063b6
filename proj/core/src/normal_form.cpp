#include "capwave/normal_form.hpp"

#include <cmath>
#include <random>

#include "capwave/cutoff.hpp"
#include "capwave/ops.hpp"
#include "capwave/symbols.hpp"

namespace capwave {

SpectralField normal_form_transform(const SpectralField& U) {
    SpectralField Ubar = conjugate_field(U);
    auto m = [](int e1, int e2) {
        return Symbol2([e1, e2](double xi, double eta) {
            return symbols::m_normal_form(e1, e2, xi, eta);
        });
    };
    SpectralField v = U;
    v += apply_bilinear(m(1, 1), U, U);
    v += apply_bilinear(m(1, -1), U, Ubar);
    v += apply_bilinear(m(-1, -1), Ubar, Ubar);
    return v;
}

CubicRhs cubic_rhs(const SpectralField& f_snapshot, double t) {
    const FrequencyLattice& lat = f_snapshot.lattice;
    const long half = static_cast<long>(lat.size() / 2);
    const double dxi = lat.spacing();
    SpectralField fbar = conjugate_field(f_snapshot);

    constexpr std::array<std::array<int, 3>, 4> classes{
        std::array<int, 3>{1, 1, -1}, {1, 1, 1}, {-1, -1, 1}, {-1, -1, -1}};

    CubicRhs out;
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        const int i1 = classes[ci][0], i2 = classes[ci][1], i3 = classes[ci][2];
        const SpectralField& f1 = (i1 > 0) ? f_snapshot : fbar;
        const SpectralField& f2 = (i2 > 0) ? f_snapshot : fbar;
        const SpectralField& f3 = (i3 > 0) ? f_snapshot : fbar;
        SpectralField acc(lat);
        for (long mo = -half; mo < half; ++mo) {
            const double xi = dxi * static_cast<double>(mo);
            cplx sum(0.0);
            for (long ms = -half; ms < half; ++ms) {
                const cplx hv = f3.coeffs[lat.slot(ms)];
                if (hv == cplx(0.0)) continue;
                const double sigma = dxi * static_cast<double>(ms);
                for (long me = -half; me < half; ++me) {
                    const std::size_t sg = lat.slot(me - ms);
                    if (sg == FrequencyLattice::npos) continue;
                    const cplx gv = f2.coeffs[sg];
                    if (gv == cplx(0.0)) continue;
                    const std::size_t sf = lat.slot(mo - me);
                    if (sf == FrequencyLattice::npos) continue;
                    const cplx fv = f1.coeffs[sf];
                    if (fv == cplx(0.0)) continue;
                    const double eta = dxi * static_cast<double>(me);
                    const cplx c = cubic::c_interaction(i1, i2, i3, xi, eta, sigma);
                    const double psi = cubic::phase3(i1, i2, i3, xi, eta, sigma);
                    sum += std::polar(1.0, t * psi) * c * fv * gv * hv;
                }
            }
            // Continuum normalization: d eta d sigma = (2 pi / L)^2 per node, so
            // I = (4 pi^2 / L^2) * lattice sum.
            const double L = lat.length();
            acc.coeffs[lat.slot(mo)] =
                sum * (4.0 * std::numbers::pi * std::numbers::pi) / (L * L);
        }
        out.I[ci] = std::move(acc);
    }
    return out;
}

PhaseBoundReport phase_lower_bound_suite(std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mag(-6.0, 6.0);  // log10 magnitudes
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    PhaseBoundReport rep;
    rep.samples = samples;
    rep.worst_lower_margin = 1e300;
    rep.worst_upper_margin = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double b = std::pow(10.0, mag(rng));
        const double a = b * unit(rng);
        const double value = std::pow(a + b, 1.5) - std::pow(b, 1.5) - std::pow(a, 1.5);
        const double scale = a * std::sqrt(b);
        if (scale == 0.0) {
            if (value != 0.0) ++rep.violations;  // degenerate endpoint: equality
            continue;
        }
        const double margin = value / scale;
        rep.worst_lower_margin = std::min(rep.worst_lower_margin, margin);
        rep.worst_upper_margin = std::max(rep.worst_upper_margin, margin);
        if (margin < 0.25 || margin > 4.0) ++rep.violations;
    }

    // Reciprocal-phase sampling: worst constant of
    // |phase|^{-1} * 2^{min(k1,k2)} 2^{max(k,k2)/2} over random block triples.
    std::uniform_int_distribution<int> kdist(-8, 8);
    double worst = 0.0;
    for (int trial = 0; trial < 2000; ++trial) {
        const int k = kdist(rng), k1 = kdist(rng), k2 = kdist(rng);
        const double xi_s = (unit(rng) < 0.5 ? -1.0 : 1.0);
        const double eta_s = (unit(rng) < 0.5 ? -1.0 : 1.0);
        const double xi = xi_s * std::exp2(k) * (1.0 + 0.5 * unit(rng));
        const double eta = eta_s * std::exp2(k2) * (1.0 + 0.5 * unit(rng));
        const double x = xi - eta;
        if (cutoff::phi_k(xi, k) == 0.0 || cutoff::phi_k(eta, k2) == 0.0 ||
            cutoff::phi_k(x, k1) == 0.0)
            continue;
        const double phase = symbols::phase2(1, 1, xi, eta);
        if (phase == 0.0) continue;
        const double c =
            std::exp2(std::min(k1, k2)) * std::exp2(0.5 * std::max(k, k2)) / std::abs(phase);
        worst = std::max(worst, c);
    }
    rep.worst_reciprocal_constant = worst;

    // Group-velocity separation: with the first and third block frequencies
    // at least five octaves apart (and the second no more than five above),
    // |Lambda'| differs by a fixed multiple of 2^{k_max/2}.
    auto dlam = [](double v) {
        return 1.5 * std::sqrt(std::abs(v)) * (v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0));
    };
    double worst_gap = 1e300;
    for (int trial = 0; trial < 4000; ++trial) {
        const int k1 = kdist(rng);
        const int off = 5 + (trial % 6);
        const int k3 = (trial % 2 == 0) ? k1 + off : k1 - off;
        const int k2 = std::max(k1, k3) + 5 - (trial % 11);
        const double a = (unit(rng) < 0.5 ? -1.0 : 1.0) * std::exp2(k1) * (1.0 + 0.5 * unit(rng));
        const double b = (unit(rng) < 0.5 ? -1.0 : 1.0) * std::exp2(k3) * (1.0 + 0.5 * unit(rng));
        const double gap = std::abs(dlam(a) - dlam(b)) /
                           std::exp2(0.5 * std::max(k2, std::max(k1, k3)));
        worst_gap = std::min(worst_gap, gap);
    }
    rep.gradient_gap_constant = worst_gap;
    return rep;
}

}  // namespace capwave
