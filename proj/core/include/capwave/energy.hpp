#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "capwave/evolution.hpp"
#include "capwave/field.hpp"

namespace capwave {

// Quadratic energy of W = D^k u plus the Fourier-side cubic corrections
// whose time derivative cancels the cubic part of d/dt E2.
struct EnergyFunctional {
    int k = 2;
    double N0 = 3.0;  // 3k/2
    double E2 = 0.0;
    double E_m = 0.0;
    std::array<double, 4> E_a{};  // (++, +-, -+, --)
    std::array<double, 4> E_b{};
    double imag_residue = 0.0;    // largest imaginary part met while taking Re
    double E3() const;
    double total() const { return E2 + E3(); }
};

// W = (|d_x|^{3/2} + Sigma_gamma)^k u.
SpectralField build_W(const SpectralField& u, const SpectralField& gamma, int k);

EnergyFunctional energy_total(const SpectralField& u, const SpectralField& gamma, int k);

// Amplitude-scan drift experiment: identical packet shapes at the given
// amplitudes, evolved to cfg.t_end; fits log|drift| against log(eps).
struct DriftExperimentResult {
    std::vector<double> eps;
    std::vector<double> corrected_drift;
    std::vector<double> uncorrected_drift;
    double corrected_exponent = 0.0;
    double uncorrected_exponent = 0.0;
};
DriftExperimentResult drift_experiment(const FrequencyLattice& lat,
                                       const std::vector<double>& eps_list,
                                       const IntegratorConfig& cfg, int k);

// S-infinity block-norm sampler for the symbol lemmas.
struct SymbolBoundReport {
    std::string lemma;
    int k = 0, k1 = 0, k2 = 0;
    double proxy = 0.0;        // l1 norm of the 2D inverse transform on the block
    double dyadic_bound = 0.0;  // target dyadic bound, constant-free
    double ratio = 0.0;
};
// lemma ids: "a_plus" (low-high a into +), "a_minus", "b", "m_N" and the
// sup-sampled evaluables "m_low", "m_weighted1..3", "q_low", "r_low".
std::vector<SymbolBoundReport> symbol_bound_sampler(const std::string& lemma_id, int trials,
                                                    int resolution, std::uint64_t seed);

}  // namespace capwave
