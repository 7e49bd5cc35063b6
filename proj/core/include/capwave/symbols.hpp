#pragma once

#include <complex>

#include "capwave/fft.hpp"

namespace capwave {

// Quadratic frequency symbols of the diagonalized equation, the semilinear
// U-equation, and the cubic energy corrections.  Sign arguments e1, e2 take
// values +1 / -1.  Every symbol follows the zero-mode convention: it returns
// 0 whenever a frequency that appears in one of its denominators vanishes.
namespace symbols {

// chi-tilde weighted pieces feeding the b family.
cplx m2_tilde(double xi, double eta);
cplx q2_tilde(double xi, double eta);

// Full quadratic multipliers of the scalar equation (first reduction).
cplx m2_full(double xi, double eta);
cplx q2_full(double xi, double eta);

// Low-high (a) and comparable-frequency (b) families of the u-equation.
cplx a_sym(int e1, int e2, double xi, double eta);
cplx b_sym(int e1, int e2, double xi, double eta);

// Quadratic symbols of the semilinear U-equation; (e1,e2) in {++, +-, --}.
cplx q_semilinear(int e1, int e2, double xi, double eta);

// Resonant phase |xi|^{3/2} - e1 |xi-eta|^{3/2} - e2 |eta|^{3/2}.
double phase2(int e1, int e2, double xi, double eta);

// Normal-form multipliers m = -i q / phase2 (division problem symbols).
cplx m_normal_form(int e1, int e2, double xi, double eta);

// Transport symbol of the high-order energy (antisymmetrized) and the
// associated division symbol of the cubic correction E3_m.
cplx q_energy(double N0, double xi, double eta);
cplx m_energy(double N0, double xi, double eta);

// Division symbols of the cubic corrections E3_a and E3_b.
cplx a_energy(int e1, int e2, double N0, double xi, double eta);
cplx b_energy(int e1, int e2, double N0, double xi, double eta);

// Low-frequency and weighted-energy symbols (sampler evaluables only).
cplx m_low(int e1, int e2, double t, double xi, double eta);
cplx m_weighted1(int e1, int e2, double N1, double xi, double eta);
cplx m_weighted2(int e1, int e2, double N1, double xi, double eta);
cplx m_weighted3(int e1, int e2, double N1, double xi, double eta);
cplx q_low_weighted(int e1, int e2, double t, double xi, double eta);
cplx r_low_weighted(int e1, int e2, double t, double xi, double eta);

// Transport symbol q0 = -i xi chi(xi-eta, eta).
cplx q_transport(double xi, double eta);

}  // namespace symbols

}  // namespace capwave
