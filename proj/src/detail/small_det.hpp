#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>

namespace entmon::detail {

/// Determinant of a k x k row-major complex matrix by Gaussian elimination
/// with partial pivoting. Destroys the buffer.
inline std::complex<double> det_inplace(std::complex<double>* m, int k) {
  std::complex<double> det{1.0, 0.0};
  for (int col = 0; col < k; ++col) {
    int pivot = col;
    double best = std::norm(m[col * k + col]);
    for (int r = col + 1; r < k; ++r) {
      const double mag = std::norm(m[r * k + col]);
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (best == 0.0) return {0.0, 0.0};
    if (pivot != col) {
      for (int c = col; c < k; ++c) {
        std::swap(m[pivot * k + c], m[col * k + c]);
      }
      det = -det;
    }
    const std::complex<double> d = m[col * k + col];
    det *= d;
    for (int r = col + 1; r < k; ++r) {
      const std::complex<double> factor = m[r * k + col] / d;
      if (factor == std::complex<double>{0.0, 0.0}) continue;
      for (int c = col + 1; c < k; ++c) {
        m[r * k + c] -= factor * m[col * k + c];
      }
    }
  }
  return det;
}

/// min(C(n, k), cap + 1); saturates instead of overflowing.
inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k,
                                     std::uint64_t cap) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  // result * numer / i is exact at every step (result holds C(n-k+i-1, i-1)),
  // and the running value C(n-k+i, i) never decreases, so capping early is safe.
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t numer = n - k + i;
    if (result > UINT64_MAX / numer) return cap + 1;
    result = result * numer / i;
    if (result > cap) return cap + 1;
  }
  return result;
}

} // namespace entmon::detail
