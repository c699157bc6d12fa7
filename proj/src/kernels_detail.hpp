#pragma once

#include "entmon/kernels.hpp"

namespace entmon::kernels::detail {

struct KernelTable {
  cplx (*cdot)(const cplx*, const cplx*, std::size_t) noexcept;
  double (*norm_sq)(const cplx*, std::size_t) noexcept;
  void (*scale)(cplx*, double, std::size_t) noexcept;
  void (*apply_pair_rotation)(cplx*, cplx*, const cplx*, std::size_t) noexcept;
};

const KernelTable& scalar_table() noexcept;

#if defined(__x86_64__) || defined(_M_X64)
const KernelTable& avx2_table() noexcept;
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
const KernelTable& neon_table() noexcept;
#endif

} // namespace entmon::kernels::detail
