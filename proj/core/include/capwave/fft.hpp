#pragma once

#include <complex>
#include <vector>

namespace capwave {

using cplx = std::complex<double>;

// Unnormalized complex DFT pair, plan-cached per size (FFTW backend).
// forward:  X_k = sum_j x_j e^{-2*pi*i*jk/N},  backward: x_j = sum_k X_k e^{+2*pi*i*jk/N}.
namespace fft {
void forward(std::vector<cplx>& data);
void backward(std::vector<cplx>& data);
}  // namespace fft

}  // namespace capwave
