#pragma once

#include <complex>
#include <vector>

namespace mixedlap {

/// In-place n-dimensional complex DFT, FFTW convention (forward uses
/// exp(-2 pi i j m / N), backward is unnormalized).
void fft_nd(std::complex<double>* data, const std::vector<int>& dims,
            bool forward);

} // namespace mixedlap
