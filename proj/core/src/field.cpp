#include "capwave/field.hpp"

#include <algorithm>
#include <cmath>

#include "capwave/errors.hpp"

namespace capwave {

double SpectralField::reality_defect() const {
    const std::size_t n = size();
    double worst = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(coeffs[i]));
    if (scale == 0.0) return 0.0;
    for (std::size_t i = 1; i < n / 2; ++i) {
        worst = std::max(worst, std::abs(coeffs[i] - std::conj(coeffs[n - i])));
    }
    worst = std::max(worst, std::abs(coeffs[0].imag()));
    worst = std::max(worst, std::abs(coeffs[n / 2].imag()));
    return worst / scale;
}

void SpectralField::enforce_reality() {
    const std::size_t n = size();
    coeffs[0] = coeffs[0].real();
    coeffs[n / 2] = coeffs[n / 2].real();
    for (std::size_t i = 1; i < n / 2; ++i) {
        cplx avg = 0.5 * (coeffs[i] + std::conj(coeffs[n - i]));
        coeffs[i] = avg;
        coeffs[n - i] = std::conj(avg);
    }
    reality_flag = true;
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    if (lattice != o.lattice) throw config_error("field: lattice mismatch in +=");
    for (std::size_t i = 0; i < size(); ++i) coeffs[i] += o.coeffs[i];
    reality_flag = reality_flag && o.reality_flag;
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
    if (lattice != o.lattice) throw config_error("field: lattice mismatch in -=");
    for (std::size_t i = 0; i < size(); ++i) coeffs[i] -= o.coeffs[i];
    reality_flag = reality_flag && o.reality_flag;
    return *this;
}

SpectralField& SpectralField::operator*=(double c) {
    for (auto& v : coeffs) v *= c;
    return *this;
}

SpectralField& SpectralField::operator*=(cplx c) {
    for (auto& v : coeffs) v *= c;
    if (c.imag() != 0.0) reality_flag = false;
    return *this;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double c, SpectralField a) { return a *= c; }
SpectralField operator*(cplx c, SpectralField a) { return a *= c; }

SpectralField forward_transform(const FrequencyLattice& lat, const std::vector<cplx>& samples) {
    if (samples.size() != lat.size())
        throw config_error("forward_transform: sample count does not match lattice");
    SpectralField out(lat);
    out.coeffs = samples;
    fft::forward(out.coeffs);
    const double scale = lat.dx();  // L/N: Riemann weight of int_0^L
    for (auto& c : out.coeffs) c *= scale;
    return out;
}

SpectralField forward_transform(const FrequencyLattice& lat, const std::vector<double>& samples) {
    std::vector<cplx> tmp(samples.begin(), samples.end());
    SpectralField out = forward_transform(lat, tmp);
    out.reality_flag = true;
    return out;
}

std::vector<cplx> inverse_transform(const SpectralField& f) {
    std::vector<cplx> v = f.coeffs;
    fft::backward(v);
    const double scale = 1.0 / f.lattice.length();
    for (auto& c : v) c *= scale;
    return v;
}

std::vector<double> grid_values_real(const SpectralField& f) {
    std::vector<cplx> v = inverse_transform(f);
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].real();
    return out;
}

}  // namespace capwave
