// Compiled with -mavx2 -mfma; only reached after the dispatcher has checked CPUID.
#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "entwit/kernels.hpp"

namespace entwit::kernels::avx2 {
namespace {

// One __m256d holds two complex doubles: [re0, im0, re1, im1].
inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }
inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

inline void spill(__m256d v, double out[4]) { _mm256_storeu_pd(out, v); }

}  // namespace

cplx dotc(const cplx* x, const cplx* y, std::size_t n) {
  // prod accumulates [xr*yr, xi*yi], cross accumulates [xr*yi, xi*yr].
  __m256d prod0 = _mm256_setzero_pd();
  __m256d prod1 = _mm256_setzero_pd();
  __m256d cross0 = _mm256_setzero_pd();
  __m256d cross1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x0 = load2(x + i);
    const __m256d y0 = load2(y + i);
    const __m256d x1 = load2(x + i + 2);
    const __m256d y1 = load2(y + i + 2);
    prod0 = _mm256_fmadd_pd(x0, y0, prod0);
    prod1 = _mm256_fmadd_pd(x1, y1, prod1);
    cross0 = _mm256_fmadd_pd(x0, swap_re_im(y0), cross0);
    cross1 = _mm256_fmadd_pd(x1, swap_re_im(y1), cross1);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d x0 = load2(x + i);
    const __m256d y0 = load2(y + i);
    prod0 = _mm256_fmadd_pd(x0, y0, prod0);
    cross0 = _mm256_fmadd_pd(x0, swap_re_im(y0), cross0);
  }
  double p[4];
  double c[4];
  spill(_mm256_add_pd(prod0, prod1), p);
  spill(_mm256_add_pd(cross0, cross1), c);
  cplx acc{p[0] + p[1] + p[2] + p[3], (c[0] - c[1]) + (c[2] - c[3])};
  if (i < n) acc += scalar::dotc(x + i, y + i, n - i);
  return acc;
}

cplx dotu(const cplx* x, const cplx* y, std::size_t n) {
  __m256d prod0 = _mm256_setzero_pd();
  __m256d prod1 = _mm256_setzero_pd();
  __m256d cross0 = _mm256_setzero_pd();
  __m256d cross1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x0 = load2(x + i);
    const __m256d y0 = load2(y + i);
    const __m256d x1 = load2(x + i + 2);
    const __m256d y1 = load2(y + i + 2);
    prod0 = _mm256_fmadd_pd(x0, y0, prod0);
    prod1 = _mm256_fmadd_pd(x1, y1, prod1);
    cross0 = _mm256_fmadd_pd(x0, swap_re_im(y0), cross0);
    cross1 = _mm256_fmadd_pd(x1, swap_re_im(y1), cross1);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d x0 = load2(x + i);
    const __m256d y0 = load2(y + i);
    prod0 = _mm256_fmadd_pd(x0, y0, prod0);
    cross0 = _mm256_fmadd_pd(x0, swap_re_im(y0), cross0);
  }
  double p[4];
  double c[4];
  spill(_mm256_add_pd(prod0, prod1), p);
  spill(_mm256_add_pd(cross0, cross1), c);
  cplx acc{(p[0] - p[1]) + (p[2] - p[3]), c[0] + c[1] + c[2] + c[3]};
  if (i < n) acc += scalar::dotu(x + i, y + i, n - i);
  return acc;
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = load2(x + i);
    // even lanes: ar*xr - ai*xi, odd lanes: ar*xi + ai*xr
    const __m256d t = _mm256_mul_pd(ai, swap_re_im(xv));
    const __m256d ax = _mm256_fmaddsub_pd(ar, xv, t);
    store2(y + i, _mm256_add_pd(load2(y + i), ax));
  }
  if (i < n) scalar::axpy(alpha, x + i, y + i, n - i);
}

double max_abs_diff(const cplx* x, const cplx* y, std::size_t n) {
  __m256d best = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d d = _mm256_sub_pd(load2(x + i), load2(y + i));
    const __m256d sq = _mm256_mul_pd(d, d);
    best = _mm256_max_pd(best, _mm256_hadd_pd(sq, sq));
  }
  double b[4];
  spill(best, b);
  double result = std::sqrt(std::max({b[0], b[1], b[2], b[3]}));
  if (i < n) result = std::max(result, scalar::max_abs_diff(x + i, y + i, n - i));
  return result;
}

}  // namespace entwit::kernels::avx2
