#pragma once

#include <span>

namespace fuzzmech::fd {

// Fourth-order centered stencils with one-sided closures of the same order
// at non-periodic edges. These back every finite-difference code path
// (madelung scheme, non-periodic gradients, Crank-Nicolson assembly).

// d/dx of a gathered line; `periodic` selects wraparound vs one-sided edges.
void d1_line(const double* f, double* out, int n, double h, bool periodic);
void d2_line(const double* f, double* out, int n, double h, bool periodic);

// Interior centered coefficients (offsets -2..2), f' ~ c.f/h, f'' ~ c.f/h^2.
inline constexpr double kD1Center[5] = {1.0 / 12, -8.0 / 12, 0.0, 8.0 / 12, -1.0 / 12};
inline constexpr double kD2Center[5] = {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12};

}  // namespace fuzzmech::fd
