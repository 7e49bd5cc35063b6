#include "capwave/diagonal.hpp"

#include <cmath>

#include "capwave/ops.hpp"

namespace capwave {

namespace {
constexpr cplx I(0.0, 1.0);
}

GoodUnknownBundle build_good_unknown(const SpectralField& h, const SpectralField& phi,
                                     const ParalinearSplit& split) {
    (void)phi;
    GoodUnknownBundle gb;
    // sigma, gamma are smooth algebraic functions of h_x: evaluate pointwise.
    std::vector<double> hp = grid_values_real(derivative(h));
    const std::size_t n = h.lattice.size();
    std::vector<double> sig(n), gam(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double m = 1.0 + hp[i] * hp[i];
        sig[i] = 1.0 / (m * std::sqrt(m)) - 1.0;
        gam[i] = std::sqrt(1.0 + sig[i]) - 1.0;
    }
    gb.sigma = forward_transform(h.lattice, sig);
    gb.gamma = forward_transform(h.lattice, gam);
    gb.p1 = gb.gamma;
    gb.p0 = -0.75 * derivative(gb.gamma);
    gb.p0.reality_flag = true;

    SpectralField dh = fractional_derivative(h, 1.0, true);
    SpectralField u = dh;
    u -= I * fractional_derivative(split.omega, 0.5, true);
    u += paraproduct(gb.p1, lp_projection(dh, 1, LPKind::PGe));
    // |d_x|^{-1} d_x h = i sgn(xi) h: derivative of |d_x|^{-1} h.
    SpectralField sgn_h = derivative(fractional_derivative(h, -1.0, true));
    u += paraproduct(gb.p0, lp_projection(sgn_h, 1, LPKind::PGe));
    gb.u = u;
    return gb;
}

SpectralField apply_sigma_gamma(const SpectralField& g, const SpectralField& gamma) {
    SpectralField high = lp_projection(g, 1, LPKind::PGe);
    SpectralField first = paraproduct(gamma, fractional_derivative(high, 1.5, true));
    SpectralField second =
        paraproduct(derivative(gamma), derivative(fractional_derivative(high, -0.5, true)));
    first -= 0.75 * second;
    return first;
}

}  // namespace capwave
