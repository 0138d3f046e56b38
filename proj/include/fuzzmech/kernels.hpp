#pragma once

#include <complex>
#include <cstddef>

namespace fuzzmech::kernels {

// Data-parallel primitives behind the field arithmetic. Every entry has a
// scalar reference implementation and (on x86-64 with AVX2+FMA) a vector
// variant; the active table is chosen once at startup. Reductions use a
// fixed pairwise order within each table, so results are deterministic for
// a given dispatch choice.
struct Ops {
  // w[i] = |z[i]|^2
  void (*abs2)(const std::complex<double>* z, double* w, std::size_t n);
  // z[i] *= f[i]
  void (*cmul)(std::complex<double>* z, const std::complex<double>* f, std::size_t n);
  // y[i] += a * x[i]
  void (*scaled_add)(double* y, const double* x, double a, std::size_t n);
  double (*sum)(const double* x, std::size_t n);
  double (*dot)(const double* x, const double* y, std::size_t n);
  // sum of conj(a[i]) * b[i]
  std::complex<double> (*cdot)(const std::complex<double>* a, const std::complex<double>* b,
                               std::size_t n);
  const char* name;
};

const Ops& scalar_ops();

// Null when the binary was built without AVX2 support.
const Ops* avx2_ops();

bool cpu_has_avx2();

// Active table: AVX2 when the CPU supports it, scalar otherwise.
// FUZZMECH_SIMD=scalar|avx2|auto overrides.
const Ops& ops();

}  // namespace fuzzmech::kernels
