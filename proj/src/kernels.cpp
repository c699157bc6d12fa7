#include "entmon/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_detail.hpp"

namespace entmon::kernels {

namespace detail {

namespace {

cplx cdot_scalar(const cplx* x, const cplx* y, std::size_t n) noexcept {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

double norm_sq_scalar(const cplx* x, std::size_t n) noexcept {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return acc;
}

void scale_scalar(cplx* x, double s, std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = {x[i].real() * s, x[i].imag() * s};
  }
}

void apply_pair_rotation_scalar(cplx* u, cplx* v, const cplx* m, std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i) {
    const cplx a = u[i];
    const cplx b = v[i];
    u[i] = m[0] * a + m[1] * b;
    v[i] = m[2] * a + m[3] * b;
  }
}

} // namespace

const KernelTable& scalar_table() noexcept {
  static const KernelTable table{cdot_scalar, norm_sq_scalar, scale_scalar,
                                 apply_pair_rotation_scalar};
  return table;
}

} // namespace detail

namespace {

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::neon:
#if defined(__aarch64__) || defined(__ARM_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const detail::KernelTable* table_for(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return &detail::scalar_table();
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return &detail::avx2_table();
#else
      return nullptr;
#endif
    case Isa::neon:
#if defined(__aarch64__) || defined(__ARM_NEON)
      return &detail::neon_table();
#else
      return nullptr;
#endif
  }
  return nullptr;
}

Isa probe_isa() noexcept {
  if (const char* env = std::getenv("ENTMON_KERNELS")) {
    const std::string_view requested(env);
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (requested == isa_name(isa) && isa_supported(isa)) {
        return isa;
      }
    }
    // Unknown or unsupported request falls through to autodetection.
  }
  if (isa_supported(Isa::avx2)) return Isa::avx2;
  if (isa_supported(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

struct Dispatch {
  Isa isa;
  const detail::KernelTable* table;
  Dispatch() : isa(probe_isa()), table(table_for(isa)) {}
};

Dispatch& dispatch() noexcept {
  static Dispatch d;
  return d;
}

} // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

Isa active_isa() noexcept { return dispatch().isa; }

Isa best_isa() noexcept {
  if (isa_supported(Isa::avx2)) return Isa::avx2;
  if (isa_supported(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

void select_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument("kernel ISA not supported on this CPU: " +
                                std::string(isa_name(isa)));
  }
  dispatch().isa = isa;
  dispatch().table = table_for(isa);
}

cplx cdot(const cplx* x, const cplx* y, std::size_t n) noexcept {
  return dispatch().table->cdot(x, y, n);
}

double norm_sq(const cplx* x, std::size_t n) noexcept {
  return dispatch().table->norm_sq(x, n);
}

void scale(cplx* x, double s, std::size_t n) noexcept {
  dispatch().table->scale(x, s, n);
}

void apply_pair_rotation(cplx* u, cplx* v, const cplx m[4], std::size_t n) noexcept {
  dispatch().table->apply_pair_rotation(u, v, m, n);
}

} // namespace entmon::kernels
