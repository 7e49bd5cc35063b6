#pragma once

#include "capwave/field.hpp"

namespace capwave {

struct NormReport {
    double sobolev_HN = 0.0;   // inhomogeneous H^N
    double dot_HNb = 0.0;      // {sum_k ||P_k f||_2^2 (2^{2Nk} + 2^{2kb})}^{1/2}
    double dot_WNb = 0.0;      // sum_k ||P_k f||_inf (2^{Nk} + 2^{bk})
    double tilde_WN = 0.0;     // ||f||_inf + sum_{k>=0} 2^{Nk} ||P_k f||_inf
    double z_norm = 0.0;       // max_xi (|xi|^{1/10} + |xi|^{N2+1/2}) |fhat(xi)|
};

NormReport norms(const SpectralField& f, double N, double b, double N2);

// Individual pieces, exposed for the decay/scattering diagnostics.
double lp_block_l2(const SpectralField& f, int k);
double lp_block_linf(const SpectralField& f, int k);
double z_norm(const SpectralField& f, double N2);

// Dyadic block range carrying lattice content: 2^k within the resolved band.
void block_range(const FrequencyLattice& lat, int& k_lo, int& k_hi);

}  // namespace capwave
