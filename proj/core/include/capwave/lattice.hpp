#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>

#include "capwave/errors.hpp"

namespace capwave {

// Uniform frequency lattice of a periodic box [0, L), L = 2*pi*R.
// Modes j in {-N/2, ..., N/2-1} carry frequencies xi_j = j/R, spacing
// dxi = 2*pi/L.  Storage order is FFT order: j = 0,1,...,N/2-1,-N/2,...,-1.
class FrequencyLattice {
  public:
    FrequencyLattice() = default;
    FrequencyLattice(double box_length, std::size_t mode_count)
        : length_(box_length), n_(mode_count) {
        if (!(box_length > 0.0)) throw config_error("lattice: box length must be positive");
        if (n_ < 2 || (n_ & (n_ - 1)) != 0)
            throw config_error("lattice: mode count must be a power of two >= 2");
    }

    double length() const { return length_; }
    std::size_t size() const { return n_; }
    double radius() const { return length_ / (2.0 * std::numbers::pi); }
    double spacing() const { return 2.0 * std::numbers::pi / length_; }
    double dx() const { return length_ / static_cast<double>(n_); }
    double xi_max() const { return spacing() * static_cast<double>(n_ / 2); }

    // Signed mode index of storage slot i.
    long mode(std::size_t i) const {
        return i < n_ / 2 ? static_cast<long>(i) : static_cast<long>(i) - static_cast<long>(n_);
    }
    double xi(std::size_t i) const { return spacing() * static_cast<double>(mode(i)); }
    double x(std::size_t i) const { return dx() * static_cast<double>(i); }

    // Storage slot of a signed mode index, or npos when off-lattice.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t slot(long m) const {
        long half = static_cast<long>(n_ / 2);
        if (m < -half || m >= half) return npos;
        return m >= 0 ? static_cast<std::size_t>(m) : static_cast<std::size_t>(m + static_cast<long>(n_));
    }

    bool operator==(const FrequencyLattice& o) const {
        return length_ == o.length_ && n_ == o.n_;
    }
    bool operator!=(const FrequencyLattice& o) const { return !(*this == o); }

  private:
    double length_ = 2.0 * std::numbers::pi;
    std::size_t n_ = 2;
};

}  // namespace capwave
