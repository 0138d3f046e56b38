#pragma once

#include "fuzzmech/grid.hpp"

namespace fuzzmech {

// Unitary momentum transform on all-periodic grids:
//   phi(p) = (2pi)^{-D/2} h^D sum_j eta_j exp(-i p.x_j),
// momentum samples p_k = 2 pi k / L per axis. The returned field lives on
// grid.momentum_dual() with bins reordered so p ascends.
ComplexField forward_transform(const ComplexField& eta);

// Inverse of forward_transform; needs the spatial grid to restore origin.
ComplexField inverse_transform(const ComplexField& phi, const UniformGrid& space_grid);

namespace fftdetail {

// In-place unnormalized DFT along one axis (sign -1 forward, +1 backward).
void dft_axis(const UniformGrid& g, Complex* data, int axis, int sign);

// Wavenumbers 2 pi k / L in FFT bin order for the given axis.
std::vector<double> wavenumbers(const UniformGrid& g, int axis);

// Reorders FFT bin order <-> ascending order along every transformed axis.
void shift_to_ascending(const UniformGrid& g, Complex* data);
void shift_to_fft_order(const UniformGrid& g, Complex* data);

}  // namespace fftdetail

}  // namespace fuzzmech
