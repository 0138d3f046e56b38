#include "fuzzmech/calculus.hpp"

#include <fftw3.h>

#include <cmath>
#include <stdexcept>

#include "fuzzmech/fd_stencils.hpp"
#include "fuzzmech/fft.hpp"
#include "fuzzmech/kernels.hpp"
#include "lines.hpp"

namespace fuzzmech {

namespace fd {

namespace {
// One-sided closures, same order as the interior stencil.
constexpr double kD1Edge0[5] = {-25.0 / 12, 4.0, -3.0, 4.0 / 3, -1.0 / 4};
constexpr double kD1Edge1[5] = {-1.0 / 4, -5.0 / 6, 3.0 / 2, -1.0 / 2, 1.0 / 12};
constexpr double kD2Edge0[6] = {15.0 / 4, -77.0 / 6, 107.0 / 6, -13.0, 61.0 / 12, -5.0 / 6};
constexpr double kD2Edge1[6] = {5.0 / 6, -5.0 / 4, -1.0 / 3, 7.0 / 6, -1.0 / 2, 1.0 / 12};
}  // namespace

void d1_line(const double* f, double* out, int n, double h, bool periodic) {
  const double inv = 1.0 / h;
  if (periodic) {
    for (int i = 0; i < n; ++i) {
      const int m2 = (i - 2 + n) % n, m1 = (i - 1 + n) % n;
      const int p1 = (i + 1) % n, p2 = (i + 2) % n;
      out[i] = (f[m2] - 8.0 * f[m1] + 8.0 * f[p1] - f[p2]) / 12.0 * inv;
    }
    return;
  }
  for (int i = 2; i < n - 2; ++i)
    out[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / 12.0 * inv;
  auto dot5 = [&](const double* c, const double* v, double sgn) {
    double s = 0.0;
    for (int k = 0; k < 5; ++k) s += c[k] * v[sgn > 0 ? k : -k];
    return sgn * s * inv;
  };
  out[0] = dot5(kD1Edge0, f, 1.0);
  out[1] = dot5(kD1Edge1, f + 1, 1.0);
  out[n - 1] = dot5(kD1Edge0, f + n - 1, -1.0);
  out[n - 2] = dot5(kD1Edge1, f + n - 2, -1.0);
}

void d2_line(const double* f, double* out, int n, double h, bool periodic) {
  const double inv = 1.0 / (h * h);
  if (periodic) {
    for (int i = 0; i < n; ++i) {
      const int m2 = (i - 2 + n) % n, m1 = (i - 1 + n) % n;
      const int p1 = (i + 1) % n, p2 = (i + 2) % n;
      out[i] = (-f[m2] + 16.0 * f[m1] - 30.0 * f[i] + 16.0 * f[p1] - f[p2]) / 12.0 * inv;
    }
    return;
  }
  for (int i = 2; i < n - 2; ++i)
    out[i] =
        (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) / 12.0 * inv;
  auto dot6 = [&](const double* c, const double* v, int dir) {
    double s = 0.0;
    for (int k = 0; k < 6; ++k) s += c[k] * v[dir * k];
    return s * inv;
  };
  out[0] = dot6(kD2Edge0, f, 1);
  out[1] = dot6(kD2Edge1, f + 1, 1);
  out[n - 1] = dot6(kD2Edge0, f + n - 1, -1);
  out[n - 2] = dot6(kD2Edge1, f + n - 2, -1);
}

}  // namespace fd

namespace {

enum class DerivOrder { First, Second };

// Spectral derivative along a periodic axis, in place. The Nyquist bin is
// zeroed for odd derivatives.
void spectral_deriv_axis(ComplexField& f, int axis, DerivOrder ord) {
  const UniformGrid& g = f.grid();
  auto k = fftdetail::wavenumbers(g, axis);
  const int n = g.n(axis);
  const double invn = 1.0 / n;
  std::vector<Complex> sym(k.size());
  for (int i = 0; i < n; ++i) {
    if (ord == DerivOrder::First) {
      const bool nyquist = (n % 2 == 0) && (i == n / 2);
      sym[static_cast<std::size_t>(i)] =
          nyquist ? Complex{0.0, 0.0} : Complex{0.0, k[static_cast<std::size_t>(i)]} * invn;
    } else {
      sym[static_cast<std::size_t>(i)] =
          Complex{-k[static_cast<std::size_t>(i)] * k[static_cast<std::size_t>(i)] * invn, 0.0};
    }
  }
  fftdetail::dft_axis(g, f.data(), axis, FFTW_FORWARD);
  lines::for_each_line(g, f.data(), axis, [&](Complex* line, int nn) {
    for (int i = 0; i < nn; ++i) line[i] *= sym[static_cast<std::size_t>(i)];
  });
  fftdetail::dft_axis(g, f.data(), axis, FFTW_BACKWARD);
}

void fd_deriv_axis(const UniformGrid& g, double* data, int axis, DerivOrder ord) {
  const double h = g.spacing(axis);
  const bool periodic = g.periodic(axis);
  std::vector<double> out;
  lines::for_each_line(g, data, axis, [&](double* line, int n) {
    out.resize(static_cast<std::size_t>(n));
    if (ord == DerivOrder::First)
      fd::d1_line(line, out.data(), n, h, periodic);
    else
      fd::d2_line(line, out.data(), n, h, periodic);
    std::copy(out.begin(), out.end(), line);
  });
}

void check_axis(const UniformGrid& g, int axis) {
  if (axis < 0 || axis >= g.dim()) throw std::invalid_argument("axis out of range");
}

ComplexField deriv(const ComplexField& f, int axis, DerivOrder ord) {
  check_axis(f.grid(), axis);
  ComplexField out = f;
  if (f.grid().periodic(axis)) {
    spectral_deriv_axis(out, axis, ord);
    return out;
  }
  // one pass over the real and imaginary parts each
  std::vector<double> part(f.size());
  ComplexField res(f.grid());
  for (int c = 0; c < 2; ++c) {
    for (std::size_t i = 0; i < f.size(); ++i)
      part[i] = c == 0 ? f[i].real() : f[i].imag();
    fd_deriv_axis(f.grid(), part.data(), axis, ord);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (c == 0)
        res[i] = Complex{part[i], 0.0};
      else
        res[i] += Complex{0.0, part[i]};
    }
  }
  return res;
}

RealField deriv(const RealField& f, int axis, DerivOrder ord) {
  check_axis(f.grid(), axis);
  if (!f.grid().periodic(axis)) {
    RealField out = f;
    fd_deriv_axis(f.grid(), out.data(), axis, ord);
    return out;
  }
  ComplexField tmp(f.grid());
  for (std::size_t i = 0; i < f.size(); ++i) tmp[i] = Complex{f[i], 0.0};
  spectral_deriv_axis(tmp, axis, ord);
  RealField out(f.grid());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = tmp[i].real();
  return out;
}

}  // namespace

double integrate(const RealField& f) {
  return kernels::ops().sum(f.data(), f.size()) * f.grid().cell_volume();
}

double integrate_abs2(const ComplexField& f) {
  const Complex s = kernels::ops().cdot(f.data(), f.data(), f.size());
  return s.real() * f.grid().cell_volume();
}

Complex inner_product(const ComplexField& a, const ComplexField& b) {
  if (!a.grid().same_shape(b.grid())) throw std::invalid_argument("inner product shape mismatch");
  return kernels::ops().cdot(a.data(), b.data(), a.size()) * a.grid().cell_volume();
}

RealField gradient(const RealField& f, int axis) { return deriv(f, axis, DerivOrder::First); }
ComplexField gradient(const ComplexField& f, int axis) { return deriv(f, axis, DerivOrder::First); }

RealField second_derivative(const RealField& f, int axis) {
  return deriv(f, axis, DerivOrder::Second);
}
ComplexField second_derivative(const ComplexField& f, int axis) {
  return deriv(f, axis, DerivOrder::Second);
}

RealField laplacian(const RealField& f) {
  RealField out = second_derivative(f, 0);
  for (int a = 1; a < f.grid().dim(); ++a) {
    RealField d = second_derivative(f, a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += d[i];
  }
  return out;
}

ComplexField laplacian(const ComplexField& f) {
  ComplexField out = second_derivative(f, 0);
  for (int a = 1; a < f.grid().dim(); ++a) {
    ComplexField d = second_derivative(f, a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += d[i];
  }
  return out;
}

RealField divergence(std::span<const RealField> v) {
  if (v.empty()) throw std::invalid_argument("divergence of empty vector field");
  const int d = v[0].grid().dim();
  if (static_cast<int>(v.size()) != d)
    throw std::invalid_argument("divergence needs one component per axis");
  RealField out = gradient(v[0], 0);
  for (int a = 1; a < d; ++a) {
    RealField g = gradient(v[static_cast<std::size_t>(a)], a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += g[i];
  }
  return out;
}

}  // namespace fuzzmech
