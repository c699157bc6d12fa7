// AVX2/FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma; callers reach it only through the runtime dispatch table,
// after the CPU has been probed for support.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "kernels_detail.hpp"

namespace entmon::kernels::detail {

namespace {

inline double hsum(__m256d v) noexcept {
  __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  const __m128d odd = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, odd));
}

// Lanes hold interleaved (even, odd) partial sums; returns odd - even.
inline double hsum_odd_minus_even(__m256d v) noexcept {
  __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  const __m128d odd = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_sub_sd(odd, lo));
}

// (cr + i ci) * z for two interleaved complex doubles in z.
inline __m256d cmul(__m256d cr, __m256d ci, __m256d z) noexcept {
  const __m256d swapped = _mm256_permute_pd(z, 0x5);
  return _mm256_fmaddsub_pd(cr, z, _mm256_mul_pd(ci, swapped));
}

cplx cdot_avx2(const cplx* x, const cplx* y, std::size_t n) noexcept {
  const auto* xd = reinterpret_cast<const double*>(x);
  const auto* yd = reinterpret_cast<const double*>(y);
  __m256d acc_rr = _mm256_setzero_pd();  // xr*yr (even), xi*yi (odd)
  __m256d acc_sw = _mm256_setzero_pd();  // xi*yr (even), xr*yi (odd)
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(xd + 2 * i);
    const __m256d vy = _mm256_loadu_pd(yd + 2 * i);
    acc_rr = _mm256_fmadd_pd(vx, vy, acc_rr);
    acc_sw = _mm256_fmadd_pd(_mm256_permute_pd(vx, 0x5), vy, acc_sw);
  }
  double re = hsum(acc_rr);
  double im = hsum_odd_minus_even(acc_sw);
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

double norm_sq_avx2(const cplx* x, std::size_t n) noexcept {
  const auto* xd = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(xd + 2 * i);
    acc = _mm256_fmadd_pd(vx, vx, acc);
  }
  double total = hsum(acc);
  for (; i < n; ++i) {
    total += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return total;
}

void scale_avx2(cplx* x, double s, std::size_t n) noexcept {
  auto* xd = reinterpret_cast<double*>(x);
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    _mm256_storeu_pd(xd + 2 * i, _mm256_mul_pd(_mm256_loadu_pd(xd + 2 * i), vs));
  }
  for (; i < n; ++i) {
    x[i] = {x[i].real() * s, x[i].imag() * s};
  }
}

void apply_pair_rotation_avx2(cplx* u, cplx* v, const cplx* m, std::size_t n) noexcept {
  auto* ud = reinterpret_cast<double*>(u);
  auto* vd = reinterpret_cast<double*>(v);
  const __m256d m00r = _mm256_set1_pd(m[0].real()), m00i = _mm256_set1_pd(m[0].imag());
  const __m256d m01r = _mm256_set1_pd(m[1].real()), m01i = _mm256_set1_pd(m[1].imag());
  const __m256d m10r = _mm256_set1_pd(m[2].real()), m10i = _mm256_set1_pd(m[2].imag());
  const __m256d m11r = _mm256_set1_pd(m[3].real()), m11i = _mm256_set1_pd(m[3].imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d a = _mm256_loadu_pd(ud + 2 * i);
    const __m256d b = _mm256_loadu_pd(vd + 2 * i);
    const __m256d nu = _mm256_add_pd(cmul(m00r, m00i, a), cmul(m01r, m01i, b));
    const __m256d nv = _mm256_add_pd(cmul(m10r, m10i, a), cmul(m11r, m11i, b));
    _mm256_storeu_pd(ud + 2 * i, nu);
    _mm256_storeu_pd(vd + 2 * i, nv);
  }
  for (; i < n; ++i) {
    const cplx a = u[i];
    const cplx b = v[i];
    u[i] = m[0] * a + m[1] * b;
    v[i] = m[2] * a + m[3] * b;
  }
}

} // namespace

const KernelTable& avx2_table() noexcept {
  static const KernelTable table{cdot_avx2, norm_sq_avx2, scale_avx2,
                                 apply_pair_rotation_avx2};
  return table;
}

} // namespace entmon::kernels::detail

#endif // x86-64
