#include "capwave/ops.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "capwave/cutoff.hpp"
#include "capwave/errors.hpp"

namespace capwave {

namespace {

double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

void check_same_lattice(const SpectralField& a, const SpectralField& b, const char* who) {
    if (a.lattice != b.lattice) {
        throw config_error(std::string(who) + ": lattice mismatch");
    }
}

}  // namespace

void dealias(SpectralField& f, double fraction) {
    if (fraction >= 1.0) return;
    const double cut = f.lattice.xi_max() * fraction;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (std::abs(f.lattice.xi(i)) > cut) f.coeffs[i] = 0.0;
    }
}

SpectralField fractional_derivative(const SpectralField& f, double s, bool project_mean) {
    SpectralField out = f;
    if (s < 0.0 && std::abs(f.coeffs[0]) > 1e-14 * (1.0 + l2_norm(f)) && !project_mean) {
        throw domain_error("fractional_derivative: negative order on a field with nonzero mean");
    }
    out.coeffs[0] = 0.0;
    for (std::size_t i = 1; i < f.size(); ++i) {
        out.coeffs[i] = f.coeffs[i] * std::pow(std::abs(f.lattice.xi(i)), s);
    }
    return out;
}

SpectralField derivative(const SpectralField& f) {
    SpectralField out = f;
    for (std::size_t i = 0; i < f.size(); ++i) {
        out.coeffs[i] = f.coeffs[i] * cplx(0.0, f.lattice.xi(i));
    }
    // The Nyquist mode of d_x has no conjugate partner; drop it to preserve reality.
    out.coeffs[f.size() / 2] = 0.0;
    return out;
}

SpectralField hilbert_transform(const SpectralField& f) {
    SpectralField out = f;
    for (std::size_t i = 0; i < f.size(); ++i) {
        out.coeffs[i] = -sgn(f.lattice.xi(i)) * f.coeffs[i];
    }
    return out;
}

SpectralField lp_projection(const SpectralField& f, int k, LPKind kind) {
    SpectralField out = f;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double xi = f.lattice.xi(i);
        double w = 0.0;
        switch (kind) {
            case LPKind::Pk: w = cutoff::phi_k(xi, k); break;
            case LPKind::PLe: w = cutoff::phi_le(xi, k); break;
            case LPKind::PGe: w = cutoff::phi_ge(xi, k); break;
            case LPKind::PPrime: w = cutoff::phi_prime_k(xi, k); break;
        }
        out.coeffs[i] = w * f.coeffs[i];
    }
    return out;
}

SpectralField paraproduct(const SpectralField& a, const SpectralField& b, double dealias_fraction) {
    check_same_lattice(a, b, "paraproduct");
    Symbol2 chi = [](double xi, double eta) { return cplx(cutoff::chi(xi - eta, eta)); };
    return apply_bilinear(chi, a, b, dealias_fraction);
}

SpectralField apply_bilinear(const Symbol2& m, const SpectralField& f, const SpectralField& g,
                             double dealias_fraction) {
    check_same_lattice(f, g, "apply_bilinear");
    const FrequencyLattice& lat = f.lattice;
    const long half = static_cast<long>(lat.size() / 2);
    const double dxi = lat.spacing();
    SpectralField out(lat);

    for (long mo = -half; mo < half; ++mo) {
        const double xi = dxi * static_cast<double>(mo);
        if (dealias_fraction < 1.0 && std::abs(xi) > lat.xi_max() * dealias_fraction) continue;
        cplx acc(0.0);
        for (long me = -half; me < half; ++me) {
            const cplx gv = g.coeffs[lat.slot(me)];
            if (gv == cplx(0.0)) continue;
            const std::size_t sf = lat.slot(mo - me);
            if (sf == FrequencyLattice::npos) continue;
            const cplx fv = f.coeffs[sf];
            if (fv == cplx(0.0)) continue;
            const double eta = dxi * static_cast<double>(me);
            const cplx w = m(xi, eta);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
                std::ostringstream msg;
                msg << "apply_bilinear: non-finite symbol at (xi,eta)=(" << xi << "," << eta << ")";
                throw domain_error(msg.str());
            }
            acc += w * fv * gv;
        }
        out.coeffs[lat.slot(mo)] = acc / lat.length();
    }
    return out;
}

SpectralField apply_trilinear(const Symbol3& m, const SpectralField& f, const SpectralField& g,
                              const SpectralField& h, double dealias_fraction) {
    check_same_lattice(f, g, "apply_trilinear");
    check_same_lattice(f, h, "apply_trilinear");
    const FrequencyLattice& lat = f.lattice;
    const long half = static_cast<long>(lat.size() / 2);
    const double dxi = lat.spacing();
    SpectralField out(lat);

    for (long mo = -half; mo < half; ++mo) {
        const double xi = dxi * static_cast<double>(mo);
        if (dealias_fraction < 1.0 && std::abs(xi) > lat.xi_max() * dealias_fraction) continue;
        cplx acc(0.0);
        for (long ms = -half; ms < half; ++ms) {
            const cplx hv = h.coeffs[lat.slot(ms)];
            if (hv == cplx(0.0)) continue;
            const double sigma = dxi * static_cast<double>(ms);
            for (long me = -half; me < half; ++me) {
                const std::size_t sg = lat.slot(me - ms);
                if (sg == FrequencyLattice::npos) continue;
                const cplx gv = g.coeffs[sg];
                if (gv == cplx(0.0)) continue;
                const std::size_t sf = lat.slot(mo - me);
                if (sf == FrequencyLattice::npos) continue;
                const cplx fv = f.coeffs[sf];
                if (fv == cplx(0.0)) continue;
                const double eta = dxi * static_cast<double>(me);
                const cplx w = m(xi, eta, sigma);
                if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
                    std::ostringstream msg;
                    msg << "apply_trilinear: non-finite symbol at (xi,eta,sigma)=(" << xi << ","
                        << eta << "," << sigma << ")";
                    throw domain_error(msg.str());
                }
                acc += w * fv * gv * hv;
            }
        }
        const double L = lat.length();
        out.coeffs[lat.slot(mo)] = acc / (L * L);
    }
    return out;
}

SpectralField product(const SpectralField& a, const SpectralField& b, double dealias_fraction) {
    check_same_lattice(a, b, "product");
    std::vector<cplx> va = inverse_transform(a);
    std::vector<cplx> vb = inverse_transform(b);
    for (std::size_t i = 0; i < va.size(); ++i) va[i] *= vb[i];
    SpectralField out = forward_transform(a.lattice, va);
    out.reality_flag = a.reality_flag && b.reality_flag;
    dealias(out, dealias_fraction);
    return out;
}

SpectralField conjugate_field(const SpectralField& f) {
    SpectralField out(f.lattice);
    const std::size_t n = f.size();
    out.coeffs[0] = std::conj(f.coeffs[0]);
    out.coeffs[n / 2] = std::conj(f.coeffs[n / 2]);
    for (std::size_t i = 1; i < n; ++i) {
        if (i == n / 2) continue;
        out.coeffs[i] = std::conj(f.coeffs[n - i]);
    }
    out.reality_flag = f.reality_flag;
    return out;
}

SpectralField free_evolution(const SpectralField& f, double t) {
    SpectralField out = f;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double lam = std::pow(std::abs(f.lattice.xi(i)), 1.5);
        out.coeffs[i] = f.coeffs[i] * std::polar(1.0, t * lam);
    }
    out.reality_flag = false;
    return out;
}

double l2_norm(const SpectralField& f) {
    double s = 0.0;
    for (const auto& c : f.coeffs) s += std::norm(c);
    return std::sqrt(s / f.lattice.length());
}

double linf_norm(const SpectralField& f) {
    std::vector<cplx> v = inverse_transform(f);
    double m = 0.0;
    for (const auto& c : v) m = std::max(m, std::abs(c));
    return m;
}

cplx free_evolution_at(const SpectralField& f, double t, double x) {
    cplx acc(0.0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f.coeffs[i] == cplx(0.0)) continue;
        const double xi = f.lattice.xi(i);
        const double phase = t * std::pow(std::abs(xi), 1.5) + x * xi;
        acc += f.coeffs[i] * std::polar(1.0, phase);
    }
    return acc / f.lattice.length();
}

cplx interpolate_coeff(const SpectralField& f, double xi) {
    const double dxi = f.lattice.spacing();
    const double p = xi / dxi;
    const long half = static_cast<long>(f.size() / 2);
    if (!(p - 1.0 >= static_cast<double>(-half) && p + 2.0 < static_cast<double>(half))) {
        throw domain_error("interpolate_coeff: frequency outside lattice range");
    }
    const long base = static_cast<long>(std::floor(p)) - 1;
    // 4-point Lagrange through the neighbouring lattice coefficients.
    cplx acc(0.0);
    for (int a = 0; a < 4; ++a) {
        double w = 1.0;
        for (int b = 0; b < 4; ++b) {
            if (a == b) continue;
            w *= (p - static_cast<double>(base + b)) / static_cast<double>(a - b);
        }
        acc += w * f.coeffs[f.lattice.slot(base + a)];
    }
    return acc;
}

cplx stationary_phase_evaluate(const SpectralField& f, double t, double x) {
    if (t == 0.0) throw domain_error("stationary_phase_evaluate: t must be nonzero");
    const double y = x / t;
    const double xi0 = -(4.0 * y * y / 9.0) * sgn(y);
    const cplx fhat = interpolate_coeff(f, xi0);  // throws when out of band
    const cplx amp = std::sqrt(cplx(0.0, 2.0) / (3.0 * std::numbers::pi * t));
    const cplx osc = std::polar(1.0, -t * (4.0 / 27.0) * std::abs(y) * std::abs(y) * std::abs(y));
    return amp * osc * std::pow(std::abs(xi0), 0.25) * fhat;
}

}  // namespace capwave
