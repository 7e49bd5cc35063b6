#pragma once

#include <vector>

#include "capwave/field.hpp"

namespace capwave {

// Scattering profile fhat(xi,t) = e^{-it|xi|^{3/2}} vhat(xi,t) with the
// accumulated logarithmic phase L(xi,t) and corrected profile g = e^{iL} fhat.
// Feed observations in increasing time; the phase integral is accumulated by
// the trapezoid rule, which needs dt <= 0.1 (1+t) between observations.
class Profile {
  public:
    enum class Variant { L_on_v, L_prime_on_U };

    Profile() = default;
    Profile(const FrequencyLattice& lat, Variant variant, bool nonlinear_coupling);

    // Observe the spectral variable (v for L_on_v, U for L_prime_on_U) at time t.
    void observe(const SpectralField& field, double t);

    const FrequencyLattice& lattice() const { return lattice_; }
    double time() const { return t_; }
    const std::vector<cplx>& fhat() const { return fhat_; }
    const std::vector<double>& phase() const { return L_; }
    std::vector<cplx> corrected() const;    // g = e^{iL} fhat
    std::vector<cplx> uncorrected() const;  // fhat itself
    // Set when some observation gap exceeded 0.1 (1 + t): the trapezoid
    // accumulation of L degrades quadratically in the gap size.
    bool accuracy_warning() const { return accuracy_warning_; }

  private:
    FrequencyLattice lattice_;
    Variant variant_ = Variant::L_on_v;
    bool coupled_ = true;   // nonlinearity off => no resonant correction
    bool have_prev_ = false;
    bool accuracy_warning_ = false;
    double t_ = 0.0;
    std::vector<double> coeff_;      // c_tilde(xi)/(4 pi^2) per slot, from the symbol pipeline
    std::vector<double> prev_dens_;  // |fhat|^2/(1+t) at the previous observation
    std::vector<cplx> fhat_;
    std::vector<double> L_;
};

// Weighted sup drift table between consecutive dyadic snapshots.
struct ScatteringRecord {
    std::vector<double> dyadic_times;
    std::vector<std::vector<cplx>> g_snapshots;
    std::vector<std::vector<cplx>> uncorrected_snapshots;
    std::vector<double> z_history;
    FrequencyLattice lattice;
    double weight_N2 = 5.0;
    double weight_cut = 0.0;  // restrict the sup to |xi| <= cut (0: dealias cut)
};

struct ConvergenceReport {
    std::vector<double> corrected_drift;
    std::vector<double> uncorrected_drift;
    bool corrected_geometric = false;  // successive ratios <= 0.8
    bool pass = false;                 // corrected geometric while uncorrected is not
    double final_ratio = 0.0;          // last corrected / last uncorrected
};
ConvergenceReport convergence_monitor(const ScatteringRecord& record);

// Physical-space asymptotic: builds f_inf from the final corrected profile
// and measures sup_x |U(x,t) - model(x,t)| over the stationary window.
struct AsymptoticModel {
    FrequencyLattice lattice;
    std::vector<cplx> g_final;    // corrected profile at the build time
    std::vector<double> L_final;  // accumulated phase at the build time
    double t_final = 0.0;
    double d0 = 0.0;  // derived constant, 1/54
};
AsymptoticModel build_asymptotic_model(const Profile& profile);
double physical_space_residual(const AsymptoticModel& model, const SpectralField& U, double t,
                               double y_min, double y_max, int samples);

}  // namespace capwave
