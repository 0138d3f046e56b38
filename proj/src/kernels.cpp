#include "fuzzmech/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

namespace fuzzmech::kernels {

namespace {

void abs2_scalar(const std::complex<double>* z, double* w, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double re = z[i].real(), im = z[i].imag();
    w[i] = re * re + im * im;
  }
}

void cmul_scalar(std::complex<double>* z, const std::complex<double>* f, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) z[i] *= f[i];
}

void scaled_add_scalar(double* y, const double* x, double a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

constexpr std::size_t kPairwiseBase = 32;

double sum_scalar(const double* x, std::size_t n) {
  if (n <= kPairwiseBase) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t half = n / 2;
  return sum_scalar(x, half) + sum_scalar(x + half, n - half);
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
  if (n <= kPairwiseBase) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
  }
  const std::size_t half = n / 2;
  return dot_scalar(x, y, half) + dot_scalar(x + half, y + half, n - half);
}

std::complex<double> cdot_scalar(const std::complex<double>* a, const std::complex<double>* b,
                                 std::size_t n) {
  if (n <= kPairwiseBase) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double ar = a[i].real(), ai = a[i].imag();
      const double br = b[i].real(), bi = b[i].imag();
      re += ar * br + ai * bi;
      im += ar * bi - ai * br;
    }
    return {re, im};
  }
  const std::size_t half = n / 2;
  return cdot_scalar(a, b, half) + cdot_scalar(a + half, b + half, n - half);
}

const Ops kScalar{abs2_scalar, cmul_scalar, scaled_add_scalar,
                  sum_scalar,  dot_scalar,  cdot_scalar,       "scalar"};

const Ops* pick_active() {
  const char* env = std::getenv("FUZZMECH_SIMD");
  const std::string mode = env ? env : "auto";
  if (mode == "scalar") return &kScalar;
  const Ops* vec = avx2_ops();
  if (mode == "avx2") return vec ? vec : &kScalar;
  return (vec && cpu_has_avx2()) ? vec : &kScalar;
}

}  // namespace

const Ops& scalar_ops() { return kScalar; }

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Ops& ops() {
  static const Ops* active = pick_active();
  return *active;
}

}  // namespace fuzzmech::kernels
