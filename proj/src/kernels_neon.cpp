// NEON kernel variants for aarch64. vld2q_f64 deinterleaves the complex
// stream into (real, imag) register pairs, which keeps the complex products
// free of shuffles.

#if defined(__aarch64__) || defined(__ARM_NEON)

#include <arm_neon.h>

#include "kernels_detail.hpp"

namespace entmon::kernels::detail {

namespace {

cplx cdot_neon(const cplx* x, const cplx* y, std::size_t n) noexcept {
  float64x2_t re = vdupq_n_f64(0.0);
  float64x2_t im = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2x2_t vx = vld2q_f64(reinterpret_cast<const double*>(x + i));
    const float64x2x2_t vy = vld2q_f64(reinterpret_cast<const double*>(y + i));
    re = vfmaq_f64(re, vx.val[0], vy.val[0]);
    re = vfmaq_f64(re, vx.val[1], vy.val[1]);
    im = vfmaq_f64(im, vx.val[0], vy.val[1]);
    im = vfmsq_f64(im, vx.val[1], vy.val[0]);
  }
  double sr = vaddvq_f64(re);
  double si = vaddvq_f64(im);
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    sr += xr * yr + xi * yi;
    si += xr * yi - xi * yr;
  }
  return {sr, si};
}

double norm_sq_neon(const cplx* x, std::size_t n) noexcept {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2x2_t vx = vld2q_f64(reinterpret_cast<const double*>(x + i));
    acc = vfmaq_f64(acc, vx.val[0], vx.val[0]);
    acc = vfmaq_f64(acc, vx.val[1], vx.val[1]);
  }
  double total = vaddvq_f64(acc);
  for (; i < n; ++i) {
    total += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return total;
}

void scale_neon(cplx* x, double s, std::size_t n) noexcept {
  auto* xd = reinterpret_cast<double*>(x);
  const float64x2_t vs = vdupq_n_f64(s);
  for (std::size_t i = 0; i < n; ++i) {
    vst1q_f64(xd + 2 * i, vmulq_f64(vld1q_f64(xd + 2 * i), vs));
  }
}

void apply_pair_rotation_neon(cplx* u, cplx* v, const cplx* m, std::size_t n) noexcept {
  const float64x2_t m00r = vdupq_n_f64(m[0].real()), m00i = vdupq_n_f64(m[0].imag());
  const float64x2_t m01r = vdupq_n_f64(m[1].real()), m01i = vdupq_n_f64(m[1].imag());
  const float64x2_t m10r = vdupq_n_f64(m[2].real()), m10i = vdupq_n_f64(m[2].imag());
  const float64x2_t m11r = vdupq_n_f64(m[3].real()), m11i = vdupq_n_f64(m[3].imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2x2_t a = vld2q_f64(reinterpret_cast<const double*>(u + i));
    const float64x2x2_t b = vld2q_f64(reinterpret_cast<const double*>(v + i));
    float64x2x2_t nu;
    nu.val[0] = vmulq_f64(m00r, a.val[0]);
    nu.val[0] = vfmsq_f64(nu.val[0], m00i, a.val[1]);
    nu.val[0] = vfmaq_f64(nu.val[0], m01r, b.val[0]);
    nu.val[0] = vfmsq_f64(nu.val[0], m01i, b.val[1]);
    nu.val[1] = vmulq_f64(m00r, a.val[1]);
    nu.val[1] = vfmaq_f64(nu.val[1], m00i, a.val[0]);
    nu.val[1] = vfmaq_f64(nu.val[1], m01r, b.val[1]);
    nu.val[1] = vfmaq_f64(nu.val[1], m01i, b.val[0]);
    float64x2x2_t nv;
    nv.val[0] = vmulq_f64(m10r, a.val[0]);
    nv.val[0] = vfmsq_f64(nv.val[0], m10i, a.val[1]);
    nv.val[0] = vfmaq_f64(nv.val[0], m11r, b.val[0]);
    nv.val[0] = vfmsq_f64(nv.val[0], m11i, b.val[1]);
    nv.val[1] = vmulq_f64(m10r, a.val[1]);
    nv.val[1] = vfmaq_f64(nv.val[1], m10i, a.val[0]);
    nv.val[1] = vfmaq_f64(nv.val[1], m11r, b.val[1]);
    nv.val[1] = vfmaq_f64(nv.val[1], m11i, b.val[0]);
    vst2q_f64(reinterpret_cast<double*>(u + i), nu);
    vst2q_f64(reinterpret_cast<double*>(v + i), nv);
  }
  for (; i < n; ++i) {
    const cplx a = u[i];
    const cplx b = v[i];
    u[i] = m[0] * a + m[1] * b;
    v[i] = m[2] * a + m[3] * b;
  }
}

} // namespace

const KernelTable& neon_table() noexcept {
  static const KernelTable table{cdot_neon, norm_sq_neon, scale_neon,
                                 apply_pair_rotation_neon};
  return table;
}

} // namespace entmon::kernels::detail

#endif // aarch64
