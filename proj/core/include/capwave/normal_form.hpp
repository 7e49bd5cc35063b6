#pragma once

#include <array>
#include <cstdint>

#include "capwave/cubic.hpp"
#include "capwave/field.hpp"

namespace capwave {

// v = U + M_{++}(U,U) + M_{+-}(U, conj U) + M_{--}(conj U, conj U) with the
// division-problem multipliers; exact lattice sums.
SpectralField normal_form_transform(const SpectralField& U);

// The four oscillatory interaction integrals of the profile equation at a
// fixed time, normalized so that d/dt fhat ~ (i/4pi^2) sum_iota I_iota.
struct CubicRhs {
    std::array<SpectralField, 4> I;  // order: ++-, +++, --+, ---
};
CubicRhs cubic_rhs(const SpectralField& f_snapshot, double t);

// Random sweep of the convexity inequality
//   (a+b)^{3/2} - b^{3/2} - a^{3/2} in [a sqrt(b)/4, 4 a sqrt(b)], 0 <= a <= b,
// plus worst-case constants of the reciprocal-phase bound per block triple.
struct PhaseBoundReport {
    std::size_t samples = 0;
    std::size_t violations = 0;
    double worst_lower_margin = 0.0;  // min of value/(a sqrt(b)) observed
    double worst_upper_margin = 0.0;  // max of value/(a sqrt(b)) observed
    double worst_reciprocal_constant = 0.0;
    // min of |Lambda'(a) - Lambda'(b)| / 2^{max(k1,k3)/2} over separated blocks
    double gradient_gap_constant = 0.0;
};
PhaseBoundReport phase_lower_bound_suite(std::size_t samples, std::uint64_t seed);

}  // namespace capwave
