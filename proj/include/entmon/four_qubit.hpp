#pragma once

#include <array>

#include "entmon/bipartition.hpp"
#include "entmon/state.hpp"

namespace entmon {

/// Values below this count as algebraic zeros when classifying: exact zeros
/// land at <= 1e-12 in double precision for unit-norm states, while generic
/// nonzero invariants are orders of magnitude larger.
inline constexpr double kFingerprintZeroThreshold = 1e-9;

/// 16 |det M| for the hard-coded 4x4 amplitude layout of one of the loci
/// (1,2), (1,3), (1,4). Equals D_2 of the general pipeline for that locus.
/// Throws std::invalid_argument for other loci or N != 4.
double det_invariant(const PureState& state, const Locus& locus);

enum class SloccGroup { no_zeros, one_zero, all_zeros, anomalous };

const char* to_string(SloccGroup group) noexcept;

/// 0 zeros -> no_zeros, 1 -> one_zero, 3 -> all_zeros. Two zeros do not occur
/// in the family grouping and are reported as anomalous rather than forced
/// into a neighboring class.
SloccGroup slocc_group_from_zero_count(int zero_count);

struct Fingerprint {
  std::array<double, 3> d2_values{};  ///< loci (1,2), (1,3), (1,4)
  std::array<bool, 3> zero_pattern{};
  SloccGroup group = SloccGroup::no_zeros;
  double threshold = kFingerprintZeroThreshold;
};

/// Classifies a four-qubit state by which of its three D_2 invariants vanish.
/// Membership in the generic family (nonzero hyperdeterminant) is not tested.
Fingerprint fingerprint(const PureState& state,
                        double zero_threshold = kFingerprintZeroThreshold);

} // namespace entmon
