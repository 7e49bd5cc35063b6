#include "capwave/cubic.hpp"

#include <cmath>
#include <numbers>

#include "capwave/errors.hpp"
#include "capwave/symbols.hpp"

namespace capwave::cubic {

namespace {

constexpr cplx I(0.0, 1.0);

double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }
double hpow(double x, double p) { return std::pow(std::abs(x), p); }

}  // namespace

double n2(double xi, double eta) { return xi * eta - std::abs(xi) * std::abs(eta); }

double n3(double xi, double eta, double sigma) {
    return 0.5 * std::abs(xi) * std::abs(sigma) *
           (std::abs(eta) + std::abs(xi + sigma - eta) - std::abs(xi) - std::abs(sigma));
}

double p1(double xi, double eta, double sigma) {
    const double d1 = xi - eta, d2 = eta - sigma;
    if (d1 == 0.0 || d2 == 0.0 || sigma == 0.0) return 0.0;
    return xi * xi * std::abs(sigma) *
           (std::abs(eta) + std::abs(xi + sigma - eta) - std::abs(xi) - std::abs(sigma)) /
           (std::abs(d1) * std::abs(d2) * std::sqrt(std::abs(sigma)));
}

double p2(double xi, double eta, double sigma) {
    const double d1 = xi - eta, d2 = eta - sigma;
    if (d1 == 0.0 || d2 == 0.0 || sigma == 0.0) return 0.0;
    return std::sqrt(std::abs(xi)) * d1 * d1 * d2 * sigma /
           (std::abs(d1) * std::abs(d2) * std::abs(sigma));
}

double p3(double xi, double eta, double sigma) {
    const double d1 = xi - eta, d2 = eta - sigma;
    if (d2 == 0.0 || sigma == 0.0) return 0.0;
    return std::sqrt(std::abs(xi)) * std::sqrt(std::abs(d1)) * std::abs(sigma) *
           (std::abs(sigma) - std::abs(eta)) / (std::abs(d2) * std::sqrt(std::abs(sigma)));
}

namespace {

// Contribution of one conjugation pattern (e1,e2,e3) on the canonical slots
// (xi-eta, eta-sigma, sigma), before moving conjugates to their class slot.
cplx pattern_kernel(int e1, int e3, double xi, double eta, double sigma) {
    const double ee = static_cast<double>(e1 * e3);
    return I * (static_cast<double>(e3) * p1(xi, eta, sigma) / 16.0 +
                3.0 * p2(xi, eta, sigma) / 16.0 + ee * p3(xi, eta, sigma) / 8.0);
}

}  // namespace

cplx m_cubic(int i1, int i2, int i3, double xi, double eta, double sigma) {
    if (i1 > 0 && i2 > 0 && i3 > 0) return pattern_kernel(+1, +1, xi, eta, sigma);
    if (i1 < 0 && i2 < 0 && i3 < 0) return pattern_kernel(-1, -1, xi, eta, sigma);
    if (i1 > 0 && i2 > 0 && i3 < 0) {
        // (+,+,-): conjugate in slots 3, 2, 1 of the three source patterns.
        return pattern_kernel(+1, -1, xi, eta, sigma) +
               pattern_kernel(+1, +1, xi, eta, eta - sigma) +
               pattern_kernel(-1, +1, xi, xi - sigma, eta - sigma);
    }
    if (i1 < 0 && i2 < 0 && i3 > 0) {
        return pattern_kernel(-1, +1, xi, eta, sigma) +
               pattern_kernel(-1, -1, xi, eta, eta - sigma) +
               pattern_kernel(+1, -1, xi, xi - sigma, eta - sigma);
    }
    throw domain_error("m_cubic: sign class must be ++-, +++, --+ or ---");
}

double phase3(int i1, int i2, int i3, double xi, double eta, double sigma) {
    return -hpow(xi, 1.5) + i1 * hpow(xi - eta, 1.5) + i2 * hpow(eta - sigma, 1.5) +
           i3 * hpow(sigma, 1.5);
}

cplx c_interaction(int i1, int i2, int i3, double xi, double eta, double sigma) {
    using symbols::m_normal_form;
    using symbols::q_semilinear;
    cplx ic;
    if (i1 > 0 && i2 > 0 && i3 < 0) {
        ic = 2.0 * m_normal_form(1, 1, xi, eta) * q_semilinear(1, -1, eta, sigma) +
             m_normal_form(1, -1, xi, sigma) * q_semilinear(1, 1, xi - sigma, xi - eta) -
             m_normal_form(1, -1, xi, eta) * q_semilinear(1, -1, eta, eta - sigma) -
             2.0 * m_normal_form(-1, -1, xi, sigma) * q_semilinear(-1, -1, xi - sigma, xi - eta) +
             m_cubic(1, 1, -1, xi, eta, sigma);
    } else if (i1 > 0 && i2 > 0 && i3 > 0) {
        ic = 2.0 * m_normal_form(1, 1, xi, eta) * q_semilinear(1, 1, eta, sigma) -
             m_normal_form(1, -1, xi, eta) * q_semilinear(-1, -1, eta, sigma) +
             m_cubic(1, 1, 1, xi, eta, sigma);
    } else if (i1 < 0 && i2 < 0 && i3 > 0) {
        ic = 2.0 * m_normal_form(1, 1, xi, sigma) * q_semilinear(-1, -1, xi - sigma, xi - eta) +
             m_normal_form(1, -1, xi, xi - eta) * q_semilinear(1, -1, eta, eta - sigma) -
             m_normal_form(1, -1, xi, xi - sigma) * q_semilinear(1, 1, xi - sigma, xi - eta) -
             2.0 * m_normal_form(-1, -1, xi, eta) * q_semilinear(1, -1, eta, sigma) +
             m_cubic(-1, -1, 1, xi, eta, sigma);
    } else if (i1 < 0 && i2 < 0 && i3 < 0) {
        ic = m_normal_form(1, -1, xi, xi - eta) * q_semilinear(-1, -1, eta, sigma) -
             2.0 * m_normal_form(-1, -1, xi, eta) * q_semilinear(1, 1, eta, sigma) +
             m_cubic(-1, -1, -1, xi, eta, sigma);
    } else {
        throw domain_error("c_interaction: sign class must be ++-, +++, --+ or ---");
    }
    return ic / I;
}

ResonantValues resonant_values(double xi) {
    if (xi == 0.0) throw domain_error("resonant_values: xi must be nonzero");
    ResonantValues rv;
    rv.m_res = m_cubic(1, 1, -1, xi, 0.0, -xi);
    rv.c_res = c_interaction(1, 1, -1, xi, 0.0, -xi).real();
    rv.c_tilde = -(8.0 * std::numbers::pi * std::sqrt(std::abs(xi)) / 3.0) * rv.c_res;
    return rv;
}

double xi_of_y(double y) { return -(4.0 / 9.0) * y * y * sgn(y); }

double d0_chain() {
    // |xi(y)|^{3/2} = (8/27)|y|^3, |g|^2 = |f|^2 / (2/(3 pi)), and the
    // 1/(24 pi) of the phase integral combine into the physical-space constant.
    const double y = 1.7;  // any nonzero y; the ratio is y-independent
    const double freq_factor = std::pow(std::abs(xi_of_y(y)), 1.5) / std::pow(std::abs(y), 3.0);
    const double amp_factor = 2.0 / (3.0 * std::numbers::pi);
    return freq_factor / amp_factor / (24.0 * std::numbers::pi);
}

}  // namespace capwave::cubic
