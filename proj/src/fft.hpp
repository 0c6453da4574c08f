#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace qrf::detail {

enum class Direction { forward = -1, backward = +1 };

// Unnormalised in-place DFT of `howmany` contiguous lines of length n.
// forward: X_m = sum_j x_j e^{-2 pi i m j / n}; backward uses e^{+...}.
void dft_lines(std::complex<double>* data, std::size_t n, std::size_t howmany, Direction dir);

// Same transform along one axis of a row-major array (first axis slowest).
void dft_axis(std::span<std::complex<double>> data, std::span<const std::size_t> shape,
              std::size_t axis, Direction dir);

}  // namespace qrf::detail
