#pragma once

#include <span>

#include "fuzzmech/grid.hpp"

namespace fuzzmech {

// Midpoint quadrature: sum(values) * h^D.
double integrate(const RealField& f);
double integrate_abs2(const ComplexField& f);

// h^D-weighted <a|b>.
Complex inner_product(const ComplexField& a, const ComplexField& b);

// Spectral derivative on periodic axes, fourth-order centered differences
// with matching one-sided closures otherwise.
RealField gradient(const RealField& f, int axis);
ComplexField gradient(const ComplexField& f, int axis);

RealField second_derivative(const RealField& f, int axis);
ComplexField second_derivative(const ComplexField& f, int axis);

RealField laplacian(const RealField& f);
ComplexField laplacian(const ComplexField& f);

RealField divergence(std::span<const RealField> v);

}  // namespace fuzzmech
