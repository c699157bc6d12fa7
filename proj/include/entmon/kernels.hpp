#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

// Data-parallel inner loops shared by the state/bipartition/monotone layers.
// Every kernel has a scalar reference implementation and, where the platform
// provides them, AVX2 (x86-64) or NEON (aarch64) variants. The variant is
// picked once at startup from CPU capabilities and can be overridden with the
// environment variable ENTMON_KERNELS=scalar|avx2|neon or with select_isa().

namespace entmon::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;

/// Instruction set currently backing the kernel entry points.
Isa active_isa() noexcept;

/// Best instruction set this CPU supports.
Isa best_isa() noexcept;

/// Select a specific instruction set. Throws std::invalid_argument when the
/// CPU does not support it. Not safe against concurrently running kernels;
/// call before spawning workers.
void select_isa(Isa isa);

/// sum_i conj(x[i]) * y[i]
cplx cdot(const cplx* x, const cplx* y, std::size_t n) noexcept;

/// sum_i |x[i]|^2
double norm_sq(const cplx* x, std::size_t n) noexcept;

/// x[i] *= s
void scale(cplx* x, double s, std::size_t n) noexcept;

/// In-place two-channel rotation:
///   (u[i], v[i]) <- (m[0] u[i] + m[1] v[i], m[2] u[i] + m[3] v[i]).
/// m is the row-major 2x2 matrix {m00, m01, m10, m11}; u and v must not alias.
void apply_pair_rotation(cplx* u, cplx* v, const cplx m[4], std::size_t n) noexcept;

} // namespace entmon::kernels
