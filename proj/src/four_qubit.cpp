#include "entmon/four_qubit.hpp"

#include <cmath>
#include <stdexcept>

#include "detail/small_det.hpp"

namespace entmon {

namespace {

// Row-major amplitude indices of the three invariant matrices, one per locus.
constexpr int kLayout12[16] = {0, 4, 8, 12, 1, 5, 9, 13, 2, 6, 10, 14, 3, 7, 11, 15};
constexpr int kLayout13[16] = {0, 2, 8, 10, 1, 3, 9, 11, 4, 6, 12, 14, 5, 7, 13, 15};
constexpr int kLayout14[16] = {0, 1, 8, 9, 2, 3, 10, 11, 4, 5, 12, 13, 6, 7, 14, 15};

const int* layout_for(const Locus& locus) {
  if (locus.indices() == std::vector<int>{1, 2}) return kLayout12;
  if (locus.indices() == std::vector<int>{1, 3}) return kLayout13;
  if (locus.indices() == std::vector<int>{1, 4}) return kLayout14;
  return nullptr;
}

} // namespace

double det_invariant(const PureState& state, const Locus& locus) {
  if (state.num_qubits() != 4) {
    throw std::invalid_argument("determinant invariants are defined for 4 qubits");
  }
  const int* layout = layout_for(locus);
  if (layout == nullptr) {
    throw std::invalid_argument("locus must be one of (1,2), (1,3), (1,4)");
  }
  cplx m[16];
  for (int i = 0; i < 16; ++i) {
    m[i] = state.amplitudes()[layout[i]];
  }
  return 16.0 * std::abs(detail::det_inplace(m, 4));
}

const char* to_string(SloccGroup group) noexcept {
  switch (group) {
    case SloccGroup::no_zeros:
      return "no-zeros";
    case SloccGroup::one_zero:
      return "one-zero";
    case SloccGroup::all_zeros:
      return "all-zeros";
    case SloccGroup::anomalous:
      return "anomalous";
  }
  return "unknown";
}

SloccGroup slocc_group_from_zero_count(int zero_count) {
  switch (zero_count) {
    case 0:
      return SloccGroup::no_zeros;
    case 1:
      return SloccGroup::one_zero;
    case 3:
      return SloccGroup::all_zeros;
    case 2:
      return SloccGroup::anomalous;
    default:
      throw std::invalid_argument("zero count must lie in 0..3");
  }
}

Fingerprint fingerprint(const PureState& state, double zero_threshold) {
  Fingerprint fp;
  fp.threshold = zero_threshold;
  const Locus loci[3] = {Locus({1, 2}), Locus({1, 3}), Locus({1, 4})};
  int zeros = 0;
  for (int i = 0; i < 3; ++i) {
    fp.d2_values[i] = det_invariant(state, loci[i]);
    fp.zero_pattern[i] = fp.d2_values[i] <= zero_threshold;
    zeros += fp.zero_pattern[i] ? 1 : 0;
  }
  fp.group = slocc_group_from_zero_count(zeros);
  return fp;
}

} // namespace entmon
