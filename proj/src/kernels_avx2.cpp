#include "fuzzmech/kernels.hpp"

#if defined(__x86_64__)

#include <immintrin.h>

namespace fuzzmech::kernels {

namespace {

#define FZM_AVX2 __attribute__((target("avx2,fma")))

FZM_AVX2 void abs2_avx2(const std::complex<double>* z, double* w, std::size_t n) {
  const double* p = reinterpret_cast<const double*>(z);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d a = _mm256_loadu_pd(p + 2 * i);      // r0 i0 r1 i1
    __m256d b = _mm256_loadu_pd(p + 2 * i + 4);  // r2 i2 r3 i3
    __m256d ha = _mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
    // ha = [w0 w2 w1 w3] -> reorder to [w0 w1 w2 w3]
    _mm256_storeu_pd(w + i, _mm256_permute4x64_pd(ha, 0xD8));
  }
  for (; i < n; ++i) {
    const double re = z[i].real(), im = z[i].imag();
    w[i] = re * re + im * im;
  }
}

FZM_AVX2 void cmul_avx2(std::complex<double>* z, const std::complex<double>* f, std::size_t n) {
  double* zp = reinterpret_cast<double*>(z);
  const double* fp = reinterpret_cast<const double*>(f);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d zv = _mm256_loadu_pd(zp + 2 * i);
    __m256d fv = _mm256_loadu_pd(fp + 2 * i);
    __m256d fre = _mm256_movedup_pd(fv);
    __m256d fim = _mm256_permute_pd(fv, 0xF);
    __m256d zsw = _mm256_permute_pd(zv, 0x5);
    _mm256_storeu_pd(zp + 2 * i, _mm256_fmaddsub_pd(zv, fre, _mm256_mul_pd(zsw, fim)));
  }
  for (; i < n; ++i) z[i] *= f[i];
}

FZM_AVX2 void scaled_add_avx2(double* y, const double* x, double a, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) y[i] += a * x[i];
}

constexpr std::size_t kVecBase = 256;

FZM_AVX2 double sum_block(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  double s = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (; i < n; ++i) s += x[i];
  return s;
}

double sum_avx2(const double* x, std::size_t n) {
  if (n <= kVecBase) return sum_block(x, n);
  const std::size_t half = (n / 2) & ~std::size_t{3};
  return sum_avx2(x, half) + sum_avx2(x + half, n - half);
}

FZM_AVX2 double dot_block(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  double s = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  if (n <= kVecBase) return dot_block(x, y, n);
  const std::size_t half = (n / 2) & ~std::size_t{3};
  return dot_avx2(x, y, half) + dot_avx2(x + half, y + half, n - half);
}

FZM_AVX2 std::complex<double> cdot_block(const std::complex<double>* a,
                                          const std::complex<double>* b, std::size_t n) {
  const double* ap = reinterpret_cast<const double*>(a);
  const double* bp = reinterpret_cast<const double*>(b);
  __m256d racc = _mm256_setzero_pd();
  __m256d iacc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d av = _mm256_loadu_pd(ap + 2 * i);
    __m256d bv = _mm256_loadu_pd(bp + 2 * i);
    racc = _mm256_fmadd_pd(av, bv, racc);
    // lanes of asw*bv: [ai*br, ar*bi, ...]; addsub accumulates -even +odd
    __m256d asw = _mm256_permute_pd(av, 0x5);
    iacc = _mm256_addsub_pd(iacc, _mm256_mul_pd(asw, bv));
  }
  alignas(32) double rl[4], il[4];
  _mm256_store_pd(rl, racc);
  _mm256_store_pd(il, iacc);
  double re = (rl[0] + rl[1]) + (rl[2] + rl[3]);
  double im = (il[0] + il[1]) + (il[2] + il[3]);
  for (; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
  }
  return {re, im};
}

std::complex<double> cdot_avx2(const std::complex<double>* a, const std::complex<double>* b,
                               std::size_t n) {
  if (n <= kVecBase) return cdot_block(a, b, n);
  const std::size_t half = (n / 2) & ~std::size_t{1};
  return cdot_avx2(a, b, half) + cdot_avx2(a + half, b + half, n - half);
}

const Ops kAvx2{abs2_avx2, cmul_avx2, scaled_add_avx2, sum_avx2, dot_avx2, cdot_avx2, "avx2"};

}  // namespace

const Ops* avx2_ops() { return &kAvx2; }

}  // namespace fuzzmech::kernels

#else

namespace fuzzmech::kernels {
const Ops* avx2_ops() { return nullptr; }
}  // namespace fuzzmech::kernels

#endif
