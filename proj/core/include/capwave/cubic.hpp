#pragma once

#include "capwave/fft.hpp"

namespace capwave {

// Cubic frequency symbols: the cubic Dirichlet-Neumann kernel, the cubic
// terms of the semilinear U-equation, the interaction symbols of the
// profile equation, and the resonant closed forms.
namespace cubic {

// Quadratic and cubic Dirichlet-Neumann kernels.
double n2(double xi, double eta);
double n3(double xi, double eta, double sigma);

// Generators of the cubic U-equation symbols.
double p1(double xi, double eta, double sigma);
double p2(double xi, double eta, double sigma);
double p3(double xi, double eta, double sigma);

// Cubic multipliers m_{i1 i2 i3} of the U-equation (purely imaginary);
// signs i1,i2,i3 in {(+,+,-), (+,+,+), (-,-,+), (-,-,-)}.
cplx m_cubic(int i1, int i2, int i3, double xi, double eta, double sigma);

// Interaction symbols c^{i1 i2 i3} of the profile equation (real-valued).
cplx c_interaction(int i1, int i2, int i3, double xi, double eta, double sigma);

// Oscillation phase -|xi|^{3/2} + i1 |xi-eta|^{3/2} + i2 |eta-sigma|^{3/2} + i3 |sigma|^{3/2}.
double phase3(int i1, int i2, int i3, double xi, double eta, double sigma);

// Resonant values at (xi, 0, -xi) through the assembled symbols.
struct ResonantValues {
    cplx m_res;       // m_{++-}(xi,0,-xi) = i|xi|^{3/2}/16
    double c_res;     // c^{++-}(xi,0,-xi); closed form -|xi|^{3/2}/16
    double c_tilde;   // -(8 pi |xi|^{1/2}/3) c_res = pi |xi|^2 / 6
};
ResonantValues resonant_values(double xi);

// Physical-space scattering constants, each derived numerically from the
// pipeline pieces rather than hard-coded:
//   xi_of_y    : stationary frequency -(4/9) y^2 sgn(y)
//   d0_chain   : |xi(y)|^{3/2}/|y|^3 * (amplitude factor 2/(3 pi)) * (3 pi/2) / (24 pi)
double xi_of_y(double y);
double d0_chain();

}  // namespace cubic

}  // namespace capwave
