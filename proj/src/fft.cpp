#include "fuzzmech/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

#include "lines.hpp"

namespace fuzzmech {

namespace {

std::mutex planner_mutex;

struct Plan1D {
  fftw_plan plan = nullptr;
  fftw_complex* buf = nullptr;
  ~Plan1D() {
    std::lock_guard<std::mutex> lock(planner_mutex);
    if (plan) fftw_destroy_plan(plan);
    if (buf) fftw_free(buf);
  }
};

// Per-thread plan cache; the FFTW planner itself is serialized.
Plan1D& plan_for(int n, int sign) {
  thread_local std::map<std::pair<int, int>, Plan1D> cache;
  Plan1D& entry = cache[{n, sign}];
  if (!entry.plan) {
    std::lock_guard<std::mutex> lock(planner_mutex);
    entry.buf = fftw_alloc_complex(static_cast<std::size_t>(n));
    entry.plan = fftw_plan_dft_1d(n, entry.buf, entry.buf, sign, FFTW_ESTIMATE);
  }
  return entry;
}

void rotate_line(Complex* line, int n, int shift) {
  std::vector<Complex> tmp(line, line + n);
  for (int i = 0; i < n; ++i) line[(i + shift) % n] = tmp[static_cast<std::size_t>(i)];
}

}  // namespace

namespace fftdetail {

void dft_axis(const UniformGrid& g, Complex* data, int axis, int sign) {
  Plan1D& p = plan_for(g.n(axis), sign);
  lines::for_each_line(g, data, axis, [&](Complex* line, int n) {
    auto* buf = reinterpret_cast<Complex*>(p.buf);
    std::copy(line, line + n, buf);
    fftw_execute(p.plan);
    std::copy(buf, buf + n, line);
  });
}

std::vector<double> wavenumbers(const UniformGrid& g, int axis) {
  const int n = g.n(axis);
  std::vector<double> k(static_cast<std::size_t>(n));
  const double dk = 2.0 * M_PI / g.length(axis);
  for (int i = 0; i < n; ++i) k[static_cast<std::size_t>(i)] = dk * (i <= n / 2 ? i : i - n);
  return k;
}

void shift_to_ascending(const UniformGrid& g, Complex* data) {
  for (int a = 0; a < g.dim(); ++a) {
    const int n = g.n(a);
    lines::for_each_line(g, data, a, [&](Complex* line, int) { rotate_line(line, n, n / 2); });
  }
}

void shift_to_fft_order(const UniformGrid& g, Complex* data) {
  for (int a = 0; a < g.dim(); ++a) {
    const int n = g.n(a);
    lines::for_each_line(g, data, a,
                         [&](Complex* line, int) { rotate_line(line, n, n - n / 2); });
  }
}

}  // namespace fftdetail

ComplexField forward_transform(const ComplexField& eta) {
  const UniformGrid& g = eta.grid();
  if (!g.all_periodic()) throw std::invalid_argument("forward_transform needs a periodic grid");

  ComplexField out(g.momentum_dual(), eta.values());
  double scale = 1.0;
  for (int a = 0; a < g.dim(); ++a) {
    fftdetail::dft_axis(g, out.data(), a, FFTW_FORWARD);
    scale *= g.spacing(a) / std::sqrt(2.0 * M_PI);
  }
  // phase e^{-i p.origin} and unitary scale, still in FFT bin order
  std::array<std::vector<Complex>, 3> phase;
  for (int a = 0; a < g.dim(); ++a) {
    auto k = fftdetail::wavenumbers(g, a);
    phase[a].resize(k.size());
    for (std::size_t i = 0; i < k.size(); ++i)
      phase[a][i] = std::polar(1.0, -k[i] * g.origin(a));
  }
  std::size_t lin = 0;
  const int d = g.dim();
  for (int i0 = 0; i0 < g.n(0); ++i0)
    for (int i1 = 0; i1 < (d > 1 ? g.n(1) : 1); ++i1)
      for (int i2 = 0; i2 < (d > 2 ? g.n(2) : 1); ++i2, ++lin) {
        Complex f = phase[0][static_cast<std::size_t>(i0)];
        if (d > 1) f *= phase[1][static_cast<std::size_t>(i1)];
        if (d > 2) f *= phase[2][static_cast<std::size_t>(i2)];
        out[lin] *= scale * f;
      }
  fftdetail::shift_to_ascending(g, out.data());
  return out;
}

ComplexField inverse_transform(const ComplexField& phi, const UniformGrid& space_grid) {
  const UniformGrid& g = space_grid;
  if (!g.all_periodic()) throw std::invalid_argument("inverse_transform needs a periodic grid");
  if (!g.same_shape(phi.grid())) throw std::invalid_argument("momentum field shape mismatch");

  ComplexField out(g, phi.values());
  fftdetail::shift_to_fft_order(g, out.data());

  double scale = 1.0;
  for (int a = 0; a < g.dim(); ++a) scale *= (2.0 * M_PI / g.length(a)) / std::sqrt(2.0 * M_PI);
  std::array<std::vector<Complex>, 3> phase;
  for (int a = 0; a < g.dim(); ++a) {
    auto k = fftdetail::wavenumbers(g, a);
    phase[a].resize(k.size());
    for (std::size_t i = 0; i < k.size(); ++i)
      phase[a][i] = std::polar(1.0, k[i] * g.origin(a));
  }
  std::size_t lin = 0;
  const int d = g.dim();
  for (int i0 = 0; i0 < g.n(0); ++i0)
    for (int i1 = 0; i1 < (d > 1 ? g.n(1) : 1); ++i1)
      for (int i2 = 0; i2 < (d > 2 ? g.n(2) : 1); ++i2, ++lin) {
        Complex f = phase[0][static_cast<std::size_t>(i0)];
        if (d > 1) f *= phase[1][static_cast<std::size_t>(i1)];
        if (d > 2) f *= phase[2][static_cast<std::size_t>(i2)];
        out[lin] *= scale * f;
      }
  for (int a = 0; a < g.dim(); ++a) fftdetail::dft_axis(g, out.data(), a, FFTW_BACKWARD);
  return out;
}

}  // namespace fuzzmech
