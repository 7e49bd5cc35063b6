#pragma once

#include <complex>
#include <vector>

#include "capwave/fft.hpp"
#include "capwave/lattice.hpp"

namespace capwave {

// Periodic function stored as truncated Fourier coefficients, convention
//   fhat(xi) = int_0^L f(x) e^{-i xi x} dx,
// so fhat(0) = L * mean(f).  Coefficients live in FFT storage order.
struct SpectralField {
    FrequencyLattice lattice;
    std::vector<cplx> coeffs;
    bool reality_flag = false;

    SpectralField() = default;
    explicit SpectralField(const FrequencyLattice& lat, bool real = false)
        : lattice(lat), coeffs(lat.size(), cplx(0.0)), reality_flag(real) {}

    std::size_t size() const { return coeffs.size(); }
    cplx& operator[](std::size_t i) { return coeffs[i]; }
    const cplx& operator[](std::size_t i) const { return coeffs[i]; }

    // Coefficient at signed mode m; zero off-lattice.
    cplx at_mode(long m) const {
        std::size_t s = lattice.slot(m);
        return s == FrequencyLattice::npos ? cplx(0.0) : coeffs[s];
    }
    void set_mode(long m, cplx v) {
        std::size_t s = lattice.slot(m);
        if (s != FrequencyLattice::npos) coeffs[s] = v;
    }

    cplx mean() const { return coeffs[0] / lattice.length(); }
    void project_zero_mean() { coeffs[0] = 0.0; }

    // Largest conjugate-symmetry defect relative to the largest coefficient.
    double reality_defect() const;
    // Symmetrize coefficients so the physical samples are exactly real.
    void enforce_reality();

    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(double c);
    SpectralField& operator*=(cplx c);
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double c, SpectralField a);
SpectralField operator*(cplx c, SpectralField a);

// Transform of N physical samples on the uniform grid x_j = j L / N.
SpectralField forward_transform(const FrequencyLattice& lat, const std::vector<double>& samples);
SpectralField forward_transform(const FrequencyLattice& lat, const std::vector<cplx>& samples);

// Physical samples; grid() additionally checks/uses the reality flag.
std::vector<cplx> inverse_transform(const SpectralField& f);
std::vector<double> grid_values_real(const SpectralField& f);

// Build a field by sampling fn(x) on the grid.
template <typename Fn>
SpectralField sample_real(const FrequencyLattice& lat, Fn&& fn) {
    std::vector<double> v(lat.size());
    for (std::size_t j = 0; j < lat.size(); ++j) v[j] = fn(lat.x(j));
    SpectralField out = forward_transform(lat, v);
    out.reality_flag = true;
    return out;
}

}  // namespace capwave
