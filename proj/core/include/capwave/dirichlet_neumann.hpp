#pragma once

#include <utility>
#include <vector>

#include "capwave/field.hpp"

namespace capwave {

// G(h)phi computed three ways: the explicit series through third order, the
// boundary-integral / perturbed-Hilbert-transform fixed point (the oracle),
// and the paralinearized decomposition.

struct DNExpansion {
    SpectralField order0;  // |d_x| phi
    SpectralField order2;  // quadratic kernel applied to (h, phi)
    SpectralField order3;  // cubic kernel applied to (h, h, phi)
    int truncation_order = 3;
    bool radius_warning = false;  // set when max|h_x| >= 1 (series radius)
    SpectralField sum() const;
};

struct BoundaryIntegralState {
    SpectralField psi;             // harmonic conjugate of the boundary potential
    int iteration_count = 0;
    double residual = 0.0;
    std::vector<double> residual_history;
};

struct ParalinearSplit {
    SpectralField G;      // the operator value used to build the split
    SpectralField B, V;   // vertical and tangential boundary velocities
    SpectralField omega;  // good unknown phi - T_B P_{>=1} h
    SpectralField G2;     // explicit semilinear quadratic term
    SpectralField G_ge3;  // cubic-and-higher residual of the decomposition
};

// Series expansion; max_order in {1,2,3}.  With exact_sums the quadratic and
// cubic kernels are evaluated as full lattice convolutions, otherwise through
// the alias-free FFT product form of the same kernels.
DNExpansion dn_series(const SpectralField& h, const SpectralField& phi, int max_order,
                      bool exact_sums = false);

// Fixed point psi of (I + T1) psi = (-i H0 + T2) phi on the periodized
// kernels; returns (G(h)phi, state).  Throws divergence_error with the
// residual history when Picard fails to contract within max_iter.
std::pair<SpectralField, BoundaryIntegralState> dn_boundary_integral(
    const SpectralField& h, const SpectralField& phi, double tol, int max_iter = 200);

// R_n f by direct quadrature of the periodized kernel, n <= 4.
SpectralField rn_term(const SpectralField& h, const SpectralField& f, int n);

// Periodized T1 / T2 applied directly (exposed for cross-checks).
SpectralField t1_apply(const SpectralField& h, const SpectralField& f);
SpectralField t2_apply(const SpectralField& h, const SpectralField& f);

// Paralinearized decomposition around a given operator value G.
ParalinearSplit paralinear_split(const SpectralField& h, const SpectralField& phi,
                                 const SpectralField& G);

}  // namespace capwave
