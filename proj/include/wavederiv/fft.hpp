#pragma once

#include <complex>
#include <span>

namespace wavederiv::fft {

enum class Direction { Forward, Backward };

// Unnormalized in-place DFT of any length. Forward uses exp(-2 pi i jk/n),
// Backward exp(+2 pi i jk/n); Backward(Forward(x)) = n * x.
void transform(std::span<std::complex<double>> data, Direction direction);

}  // namespace wavederiv::fft
