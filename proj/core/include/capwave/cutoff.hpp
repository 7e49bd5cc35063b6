#pragma once

namespace capwave {

// Fixed smooth Littlewood-Paley cutoff: even bump, == 1 on [-5/4, 5/4],
// supported in [-8/5, 8/5], built from the exp(-1/x) mollifier.
namespace cutoff {

double phi(double r);                 // the bump itself
double phi_k(double x, int k);        // phi(x/2^k) - phi(x/2^{k-1})
double phi_le(double x, int k);       // phi(x/2^k)
double phi_ge(double x, int k);       // 1 - phi(x/2^{k-1})
double phi_prime_k(double x, int k);  // phi_{k-1} + phi_k + phi_{k+1}

// chi(x, y) = sum_k phi_k(y) * phi_le(x, k-10): low(x) x high(y) selector.
double chi(double x, double y);
// chi_tilde(x, y) = 1 - chi(x, y) - chi(y, x): comparable frequencies.
double chi_tilde(double x, double y);

}  // namespace cutoff

}  // namespace capwave
