#include "capwave/symbols.hpp"

#include <cmath>

#include "capwave/cutoff.hpp"

namespace capwave::symbols {

namespace {

constexpr cplx I(0.0, 1.0);

double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }
double hpow(double x, double p) { return std::pow(std::abs(x), p); }

bool zero_mode(double xi, double eta) {
    return xi == 0.0 || eta == 0.0 || xi - eta == 0.0;
}

// Scaling derivative -(xi d_xi + eta d_eta) m along the ray, by central
// difference; only used by the weighted-energy sampler evaluables.
template <typename F>
cplx scale_derivative(F&& m, double xi, double eta) {
    const double d = 1e-6;
    return -(m(xi * (1.0 + d), eta * (1.0 + d)) - m(xi * (1.0 - d), eta * (1.0 - d))) / (2.0 * d);
}

}  // namespace

cplx m2_tilde(double xi, double eta) {
    if (zero_mode(xi, eta)) return 0.0;
    const double x = xi - eta;
    return cutoff::chi_tilde(x, eta) * (xi * x - std::abs(xi) * std::abs(x));
}

cplx q2_tilde(double xi, double eta) {
    if (zero_mode(xi, eta)) return 0.0;
    const double x = xi - eta;
    return cutoff::chi_tilde(x, eta) * 0.5 * (eta * x + std::abs(eta) * std::abs(x));
}

cplx m2_full(double xi, double eta) {
    if (zero_mode(xi, eta)) return 0.0;
    const double x = xi - eta;
    return m2_tilde(xi, eta) -
           cutoff::chi(x, eta) * std::abs(xi) * std::abs(x) * cutoff::phi_le(eta, 0);
}

cplx q2_full(double xi, double eta) {
    if (zero_mode(xi, eta)) return 0.0;
    const double x = xi - eta;
    return q2_tilde(xi, eta) +
           cutoff::chi(x, eta) * std::abs(eta) * std::abs(x) * cutoff::phi_le(eta, 0);
}

cplx a_sym(int e1, int e2, double xi, double eta) {
    if (zero_mode(xi, eta)) return 0.0;
    const double x = xi - eta;
    const double chi = cutoff::chi(x, eta);
    if (chi == 0.0) return 0.0;

    const double axi = std::abs(xi), aeta = std::abs(eta), ax = std::abs(x);
    const double t1 = xi * x / std::sqrt(ax) * (axi / aeta - 1.0);
    const double t2 = hpow(x, 1.5);
    const double t3 = eta * x / std::sqrt(ax) * (1.0 - std::sqrt(axi) / std::sqrt(aeta));
    const double t4 = ax * ax * std::sqrt(axi) * cutoff::phi_ge(eta, 1) / aeta;
    const double lowp = std::sqrt(ax) * cutoff::phi_le(eta, 0) / aeta;
    const double s2 = axi * axi;
    const double s3 = std::sqrt(axi) * hpow(eta, 1.5);

    double bracket = 0.0;
    if (e1 > 0 && e2 > 0)      bracket = -t1 + t2 + t3 + t4 + ( s2 - s3) * lowp;
    else if (e1 > 0 && e2 < 0) bracket = -t1 - t2 - t3 + t4 + ( s2 + s3) * lowp;
    else if (e1 < 0 && e2 > 0) bracket =  t1 - t2 - t3 + t4 + (-s2 + s3) * lowp;
    else                       bracket =  t1 + t2 + t3 + t4 + (-s2 - s3) * lowp;
    return chi * bracket / (4.0 * I);
}

cplx b_sym(int e1, int e2, double xi, double eta) {
    if (zero_mode(xi, eta)) return 0.0;
    const double x = xi - eta;
    const cplx mpart = (I / 4.0) * std::abs(xi) * m2_tilde(xi, eta) /
                       (std::sqrt(std::abs(x)) * std::abs(eta));
    const cplx qpart = (I / 4.0) * std::sqrt(std::abs(xi)) * q2_tilde(xi, eta) /
                       (std::sqrt(std::abs(x)) * std::sqrt(std::abs(eta)));
    const double sm = (e1 > 0) ? 1.0 : -1.0;
    const double sq = (e1 == e2) ? 1.0 : -1.0;
    return sm * mpart + sq * qpart;
}

cplx q_semilinear(int e1, int e2, double xi, double eta) {
    if (zero_mode(xi, eta)) return 0.0;
    const double x = xi - eta;
    const double axi = std::abs(xi), aeta = std::abs(eta), ax = std::abs(x);
    const cplx u1 = I * axi * (xi * eta - axi * aeta) / (std::sqrt(aeta) * ax);
    const cplx u2 = I * axi * (xi * x - axi * ax) / (aeta * std::sqrt(ax));
    const cplx u3 = I * std::sqrt(axi) * (eta * x + aeta * ax) / (std::sqrt(aeta) * std::sqrt(ax));
    if (e1 > 0 && e2 > 0) return (u1 + u2 + u3) / 8.0;
    if (e1 > 0 && e2 < 0) return (-2.0 * u1 + 2.0 * u2 - 2.0 * u3) / 8.0;
    return (-u1 - u2 + u3) / 8.0;  // (--)
}

double phase2(int e1, int e2, double xi, double eta) {
    return hpow(xi, 1.5) - e1 * hpow(xi - eta, 1.5) - e2 * hpow(eta, 1.5);
}

cplx m_normal_form(int e1, int e2, double xi, double eta) {
    if (zero_mode(xi, eta)) return 0.0;
    return -I * q_semilinear(e1, e2, xi, eta) / phase2(e1, e2, xi, eta);
}

cplx q_energy(double N0, double xi, double eta) {
    if (zero_mode(xi, eta)) return 0.0;
    const double x = xi - eta;
    const double bracket =
        xi * hpow(xi, N0) / hpow(eta, N0) * cutoff::chi(x, eta) -
        eta * hpow(eta, N0) / hpow(xi, N0) * cutoff::chi(-x, xi);
    return I * x / (2.0 * std::sqrt(std::abs(x))) * bracket;
}

cplx m_energy(double N0, double xi, double eta) {
    if (zero_mode(xi, eta)) return 0.0;
    return q_energy(N0, xi, eta) / (I * phase2(1, 1, xi, eta));
}

cplx a_energy(int e1, int e2, double N0, double xi, double eta) {
    if (zero_mode(xi, eta)) return 0.0;
    return -I * hpow(xi, N0) / hpow(eta, N0) * a_sym(e1, e2, xi, eta) /
           (hpow(xi, 1.5) - e2 * hpow(eta, 1.5) - e1 * hpow(xi - eta, 1.5));
}

cplx b_energy(int e1, int e2, double N0, double xi, double eta) {
    if (zero_mode(xi, eta)) return 0.0;
    return -I * hpow(xi, N0) * b_sym(e1, e2, xi, eta) /
           (hpow(xi, 1.5) - e2 * hpow(eta, 1.5) - e1 * hpow(xi - eta, 1.5));
}

namespace {

// varphi_t(xi) = phi_{>=4}((1+t)^2 xi) * phi_{<=-10}(xi)^2.
double phi_t(double t, double xi) {
    const double s = (1.0 + t) * (1.0 + t) * xi;
    const double w = cutoff::phi_le(xi, -10);
    return cutoff::phi_ge(s, 4) * w * w;
}

}  // namespace

cplx m_low(int e1, int e2, double t, double xi, double eta) {
    if (zero_mode(xi, eta)) return 0.0;
    const double x = xi - eta;
    cplx first = 0.0;
    if (e1 > 0 && e2 > 0) {
        const double bracket = sgn(xi) * phi_t(t, xi) * cutoff::chi(x, eta) -
                               sgn(eta) * phi_t(t, eta) * cutoff::chi(-x, xi);
        first = 4.0 * std::sqrt(std::abs(xi)) * x * bracket /
                (8.0 * std::sqrt(std::abs(x)) * phase2(1, 1, xi, eta));
    }
    const cplx second = -I * phi_t(t, xi) * (a_sym(e1, e2, xi, eta) + b_sym(e1, e2, xi, eta)) /
                        (std::sqrt(std::abs(xi)) * phase2(e1, e2, xi, eta));
    return first + second;
}

cplx m_weighted1(int e1, int e2, double N1, double xi, double eta) {
    if (zero_mode(xi, eta)) return 0.0;
    const double x = xi - eta;
    const double w = cutoff::phi_ge(xi, -20);
    cplx out = -I * hpow(xi, N1) / hpow(eta, N1) * w * w * a_sym(e1, e2, xi, eta) /
               phase2(e1, e2, xi, eta);
    if (e1 > 0 && e2 > 0) {
        const double weta = cutoff::phi_ge(eta, -20);
        const double bracket =
            xi * hpow(xi, N1) / hpow(eta, N1) * w * w * cutoff::chi(x, eta) -
            eta * hpow(eta, N1) / hpow(xi, N1) * weta * weta * cutoff::chi(-x, xi);
        out += 4.0 * x * bracket / (8.0 * std::sqrt(std::abs(x)) * phase2(1, 1, xi, eta));
    }
    return out;
}

cplx m_weighted2(int e1, int e2, double N1, double xi, double eta) {
    if (zero_mode(xi, eta)) return 0.0;
    const double x = xi - eta;
    const double w = cutoff::phi_ge(xi, -20);
    cplx out = 0.0;
    if (e2 > 0) {
        out += static_cast<double>(e1) * 2.0 * x * xi * hpow(xi, N1) * w * w *
               cutoff::chi(x, eta) /
               (4.0 * std::sqrt(std::abs(x)) * phase2(e1, 1, xi, eta));
    }
    out += -I * hpow(xi, N1) * w * w *
           (a_sym(e1, e2, xi, eta) + b_sym(e1, e2, xi, eta) + b_sym(e1, e2, xi, xi - eta)) /
           phase2(e1, e2, xi, eta);
    return out;
}

cplx m_weighted3(int e1, int e2, double N1, double xi, double eta) {
    if (zero_mode(xi, eta)) return 0.0;
    const double x = xi - eta;
    const double w = cutoff::phi_ge(xi, -20);
    const cplx qn = q_energy(N1, xi, eta);
    const cplx qn_tilde =
        scale_derivative([N1](double a, double b) { return q_energy(N1, a, b); }, xi, eta);
    const cplx a_tilde =
        scale_derivative([e1, e2](double a, double b) { return a_sym(e1, e2, a, b); }, xi, eta);
    const cplx b_tilde =
        scale_derivative([e1, e2](double a, double b) { return b_sym(e1, e2, a, b); }, xi, eta);

    cplx out = 0.0;
    if (e2 > 0) {
        out += I * static_cast<double>(e1) * 2.0 * x * w * w * (qn_tilde + qn) * hpow(eta, N1) /
               (4.0 * std::sqrt(std::abs(x)) * phase2(e1, 1, xi, eta));
    }
    out += -I * hpow(xi, N1) * w * w * (1.5 - N1) *
           (a_sym(e1, e2, xi, eta) + b_sym(e1, e2, xi, eta)) / phase2(e1, e2, xi, eta);
    out += -I * hpow(xi, N1) * w * w *
           (N1 * a_sym(e1, e2, xi, eta) + a_tilde + b_tilde) / phase2(e1, e2, xi, eta);
    return out;
}

cplx q_transport(double xi, double eta) {
    if (xi == 0.0) return 0.0;
    return -I * xi * cutoff::chi(xi - eta, eta);
}

cplx q_low_weighted(int e1, int e2, double t, double xi, double eta) {
    if (zero_mode(xi, eta)) return 0.0;
    const double x = xi - eta;
    cplx out = 0.0;
    if (e1 > 0 && e2 > 0) {
        const double bracket = sgn(xi) * phi_t(t, xi) * cutoff::chi(x, eta) -
                               sgn(eta) * phi_t(t, eta) * cutoff::chi(-x, xi);
        out += 4.0 * std::sqrt(std::abs(xi)) * x * bracket /
               (8.0 * std::sqrt(std::abs(x)) * phase2(1, 1, xi, eta));
    }
    if (e1 > 0) {
        out += I * 2.0 * static_cast<double>(e2) * phi_t(t, xi) * eta * q_transport(xi, x) /
               (4.0 * std::sqrt(std::abs(eta)) * std::sqrt(std::abs(xi)) *
                phase2(e1, e2, xi, eta));
    }
    out += -I * phi_t(t, xi) *
           (a_sym(e1, e2, xi, xi - eta) + a_sym(e1, e2, xi, eta) + b_sym(e1, e2, xi, xi - eta) +
            b_sym(e1, e2, xi, eta)) /
           (std::sqrt(std::abs(xi)) * phase2(e1, e2, xi, eta));
    return out;
}

cplx r_low_weighted(int e1, int e2, double t, double xi, double eta) {
    if (zero_mode(xi, eta)) return 0.0;
    const double x = xi - eta;
    const cplx q0 = q_transport(xi, eta);
    const cplx q0_tilde =
        scale_derivative([](double a, double b) { return q_transport(a, b); }, xi, eta);
    const cplx a_tilde =
        scale_derivative([e1, e2](double a, double b) { return a_sym(e1, e2, a, b); }, xi, eta);
    const cplx b_tilde =
        scale_derivative([e1, e2](double a, double b) { return b_sym(e1, e2, a, b); }, xi, eta);
    cplx out = 0.0;
    if (e2 > 0) {
        out += I * static_cast<double>(e1) * 2.0 * phi_t(t, xi) * x * (q0_tilde + q0) /
               (4.0 * std::sqrt(std::abs(x)) * std::sqrt(std::abs(xi)) *
                phase2(e1, e2, xi, eta));
    }
    out += -I * phi_t(t, xi) *
           (a_tilde + 1.5 * a_sym(e1, e2, xi, eta) + b_tilde + 1.5 * b_sym(e1, e2, xi, eta)) /
           (std::sqrt(std::abs(xi)) * phase2(e1, e2, xi, eta));
    return out;
}

}  // namespace capwave::symbols
