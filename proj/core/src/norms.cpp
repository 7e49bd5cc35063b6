#include "capwave/norms.hpp"

#include <cmath>

#include "capwave/cutoff.hpp"
#include "capwave/ops.hpp"

namespace capwave {

void block_range(const FrequencyLattice& lat, int& k_lo, int& k_hi) {
    k_lo = static_cast<int>(std::floor(std::log2(lat.spacing()))) - 1;
    k_hi = static_cast<int>(std::ceil(std::log2(lat.xi_max()))) + 1;
}

double lp_block_l2(const SpectralField& f, int k) {
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double w = cutoff::phi_k(f.lattice.xi(i), k);
        if (w != 0.0) s += w * w * std::norm(f.coeffs[i]);
    }
    return std::sqrt(s / f.lattice.length());
}

double lp_block_linf(const SpectralField& f, int k) {
    SpectralField blk = lp_projection(f, k, LPKind::Pk);
    return linf_norm(blk);
}

double z_norm(const SpectralField& f, double N2) {
    double m = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double axi = std::abs(f.lattice.xi(i));
        if (axi == 0.0) continue;
        const double w = std::pow(axi, 0.1) + std::pow(axi, N2 + 0.5);
        m = std::max(m, w * std::abs(f.coeffs[i]));
    }
    return m;
}

NormReport norms(const SpectralField& f, double N, double b, double N2) {
    NormReport r;
    int k_lo, k_hi;
    block_range(f.lattice, k_lo, k_hi);

    // H^N in the (1 + |xi|^N) convention and the homogeneous companion in the
    // sharp multiplier form (|xi|^N + |xi|^b); the dyadic block sum is the
    // same quantity up to the cutoff overlaps.
    double h2 = 0.0, dh2 = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double axi = std::abs(f.lattice.xi(i));
        const double w = 1.0 + std::pow(axi, N);
        h2 += w * w * std::norm(f.coeffs[i]);
        if (axi > 0.0) {
            const double wh = std::pow(axi, N) + std::pow(axi, b);
            dh2 += wh * wh * std::norm(f.coeffs[i]);
        }
    }
    r.sobolev_HN = std::sqrt(h2 / f.lattice.length());
    r.dot_HNb = std::sqrt(dh2 / f.lattice.length());

    double winf = linf_norm(f);
    r.tilde_WN = winf;
    for (int k = k_lo; k <= k_hi; ++k) {
        const double pinf = lp_block_linf(f, k);
        if (pinf > 0.0) {
            r.dot_WNb += pinf * (std::exp2(N * k) + std::exp2(b * k));
            if (k >= 0) r.tilde_WN += std::exp2(N * k) * pinf;
        }
    }
    r.z_norm = z_norm(f, N2);
    return r;
}

}  // namespace capwave
