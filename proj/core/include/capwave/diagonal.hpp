#pragma once

#include "capwave/dirichlet_neumann.hpp"
#include "capwave/field.hpp"

namespace capwave {

// The diagonalizing change of variables: surface-tension symbols built from
// h_x, the complex main unknown, and the order-3/2 paradifferential operator.
struct GoodUnknownBundle {
    SpectralField sigma;  // (1+h_x^2)^{-3/2} - 1
    SpectralField gamma;  // sqrt(1+sigma) - 1
    SpectralField p1;     // gamma
    SpectralField p0;     // -(3/4) d_x gamma
    SpectralField u;      // |d_x| h - i |d_x|^{1/2} omega + paraproduct corrections
};

GoodUnknownBundle build_good_unknown(const SpectralField& h, const SpectralField& phi,
                                     const ParalinearSplit& split);

// Sigma_gamma g = T_gamma P_{>=1} |d_x|^{3/2} g - (3/4) T_{d_x gamma} P_{>=1} d_x |d_x|^{-1/2} g.
SpectralField apply_sigma_gamma(const SpectralField& g, const SpectralField& gamma);

}  // namespace capwave
