#pragma once

#include <functional>

#include "capwave/field.hpp"

namespace capwave {

// Bilinear and trilinear frequency symbols.
using Symbol2 = std::function<cplx(double xi, double eta)>;
using Symbol3 = std::function<cplx(double xi, double eta, double sigma)>;

// Dealiasing fractions fixed by design: 2/3 for quadratic products, 1/2 for
// trilinear ones.  A fraction of 1 keeps the whole lattice.
constexpr double kDealiasQuadratic = 2.0 / 3.0;
constexpr double kDealiasTrilinear = 0.5;

void dealias(SpectralField& f, double fraction);

// |d_x|^s.  The zero mode always maps to 0; s < 0 on a field with nonzero
// mean throws unless project_mean is set.
SpectralField fractional_derivative(const SpectralField& f, double s, bool project_mean = false);

// d_x (multiplication by i xi).
SpectralField derivative(const SpectralField& f);

// H_0: multiplication by -sgn(xi), with sgn(0) = 0.
SpectralField hilbert_transform(const SpectralField& f);

enum class LPKind { Pk, PLe, PGe, PPrime };
SpectralField lp_projection(const SpectralField& f, int k, LPKind kind);

// T_a b = (1/L) sum_eta chi(xi-eta, eta) ahat(xi-eta) bhat(eta); exact
// double sum, output masked at the quadratic dealias fraction.
SpectralField paraproduct(const SpectralField& a, const SpectralField& b,
                          double dealias_fraction = kDealiasQuadratic);

// (1/L) sum_eta m(xi,eta) fhat(xi-eta) ghat(eta); off-lattice slots are zero.
// Non-finite symbol values raise domain_error identifying the pair.
SpectralField apply_bilinear(const Symbol2& m, const SpectralField& f, const SpectralField& g,
                             double dealias_fraction = 1.0);

// (1/L^2) sum_{eta,sigma} m(xi,eta,sigma) fhat(xi-eta) ghat(eta-sigma) hhat(sigma).
SpectralField apply_trilinear(const Symbol3& m, const SpectralField& f, const SpectralField& g,
                              const SpectralField& h, double dealias_fraction = 1.0);

// Pointwise product on the grid, masked at the given fraction.
SpectralField product(const SpectralField& a, const SpectralField& b,
                      double dealias_fraction = kDealiasQuadratic);

// conj(f) as a spectral field: coefficients conj(fhat(-xi)).
SpectralField conjugate_field(const SpectralField& f);

// e^{i t Lambda} with Lambda = |xi|^{3/2}.
SpectralField free_evolution(const SpectralField& f, double t);

// sqrt(L2 norm) via Parseval; ||f||_L2^2 = (1/L) sum |fhat|^2.
double l2_norm(const SpectralField& f);
double linf_norm(const SpectralField& f);  // max |f(x_j)| over the grid

// Value of (e^{itLambda} f)(x) as the exact lattice mode sum.
cplx free_evolution_at(const SpectralField& f, double t, double x);

// Leading stationary-phase asymptotic of (e^{itLambda} f)(x):
//   sqrt(2i/(3 pi t)) e^{-it(4/27)|x/t|^3} |xi0|^{1/4} fhat(xi0),
// with xi0 = -(4x^2/(9t^2)) sgn(x/t) interpolated off the lattice.
cplx stationary_phase_evaluate(const SpectralField& f, double t, double x);

// fhat interpolated at arbitrary xi (4-point Lagrange on the lattice).
cplx interpolate_coeff(const SpectralField& f, double xi);

}  // namespace capwave
