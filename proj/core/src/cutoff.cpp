#include "capwave/cutoff.hpp"

#include <cmath>

namespace capwave::cutoff {

namespace {

double mollifier(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }

// Smooth ramp: 0 for s <= 0, 1 for s >= 1.
double ramp(double s) {
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return 1.0;
    double a = mollifier(s);
    double b = mollifier(1.0 - s);
    return a / (a + b);
}

constexpr double kPlateau = 1.25;   // 5/4
constexpr double kSupport = 1.6;    // 8/5

}  // namespace

double phi(double r) {
    return ramp((kSupport - std::abs(r)) / (kSupport - kPlateau));
}

double phi_k(double x, int k) {
    return phi(std::ldexp(x, -k)) - phi(std::ldexp(x, -(k - 1)));
}

double phi_le(double x, int k) { return phi(std::ldexp(x, -k)); }

double phi_ge(double x, int k) { return 1.0 - phi(std::ldexp(x, -(k - 1))); }

double phi_prime_k(double x, int k) {
    return phi_k(x, k - 1) + phi_k(x, k) + phi_k(x, k + 1);
}

double chi(double x, double y) {
    double ay = std::abs(y);
    if (ay == 0.0) return 0.0;
    // phi_k(y) != 0 only for 2^k in (|y| 5/8, |y| 8/5); scan the few candidates.
    int k0 = static_cast<int>(std::floor(std::log2(ay)));
    double s = 0.0;
    for (int k = k0 - 1; k <= k0 + 2; ++k) {
        double w = phi_k(y, k);
        if (w != 0.0) s += w * phi_le(x, k - 10);
    }
    return s;
}

double chi_tilde(double x, double y) { return 1.0 - chi(x, y) - chi(y, x); }

}  // namespace capwave::cutoff
