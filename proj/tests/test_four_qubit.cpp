#include <cmath>
#include <random>

#include "doctest.h"
#include "entmon/four_qubit.hpp"
#include "entmon/monotones.hpp"
#include "entmon/state.hpp"
#include "entmon/transforms.hpp"

using namespace entmon;

namespace {

// The three hard-coded matrix layouts, pinned entry by entry. A regression
// against these tables guards the amplitude ordering.
constexpr int kExpectedLayouts[3][16] = {
    {0, 4, 8, 12, 1, 5, 9, 13, 2, 6, 10, 14, 3, 7, 11, 15},
    {0, 2, 8, 10, 1, 3, 9, 11, 4, 6, 12, 14, 5, 7, 13, 15},
    {0, 1, 8, 9, 2, 3, 10, 11, 4, 5, 12, 13, 6, 7, 14, 15},
};

double det4_from_layout(const PureState& state, const int layout[16]) {
  Eigen::Matrix4cd m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      m(r, c) = state.amplitudes()[layout[4 * r + c]];
    }
  }
  return 16.0 * std::abs(m.determinant());
}

const Locus kPairLoci[3] = {Locus({1, 2}), Locus({1, 3}), Locus({1, 4})};

} // namespace

TEST_CASE("det_invariant matches the pinned matrix layouts") {
  const PureState psi = haar_random_state(4, 640);
  for (int i = 0; i < 3; ++i) {
    CHECK(det_invariant(psi, kPairLoci[i]) ==
          doctest::Approx(det4_from_layout(psi, kExpectedLayouts[i]))
              .epsilon(1e-12));
  }
}

TEST_CASE("det_invariant closed-form values") {
  const PureState cluster = make_state(StateLabel::cluster4());
  CHECK(det_invariant(cluster, kPairLoci[0]) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(det_invariant(cluster, kPairLoci[1])) < 1e-12);
  CHECK(det_invariant(cluster, kPairLoci[2]) == doctest::Approx(1.0).epsilon(1e-12));

  const PureState minus = make_state(StateLabel::psi_minus());
  CHECK(det_invariant(minus, kPairLoci[0]) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(det_invariant(minus, kPairLoci[1]) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(det_invariant(minus, kPairLoci[2])) < 1e-12);

  const PureState plus = make_state(StateLabel::psi_plus());
  for (const Locus& locus : kPairLoci) {
    CHECK(std::abs(det_invariant(plus, locus)) < 1e-12);
  }
}

TEST_CASE("det_invariant rejects other loci and qubit counts") {
  const PureState psi = haar_random_state(4, 1);
  CHECK_THROWS_AS(det_invariant(psi, Locus({2, 3})), std::invalid_argument);
  CHECK_THROWS_AS(det_invariant(psi, Locus({1})), std::invalid_argument);
  CHECK_THROWS_AS(det_invariant(haar_random_state(3, 1), kPairLoci[0]),
                  std::invalid_argument);
}

TEST_CASE("det_invariant agrees with the general pipeline") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const PureState psi = haar_random_state(4, 7000 + seed);
    for (const Locus& locus : kPairLoci) {
      const double via_det = det_invariant(psi, locus);
      const double via_minors = d_monotone_minors(reduce(psi, locus));
      const double via_schmidt = d_monotone(psi, locus);
      CHECK(std::abs(via_det - via_minors) <= 1e-10 * std::max(1.0, via_det));
      CHECK(std::abs(via_det - via_schmidt) <= 1e-10 * std::max(1.0, via_det));
    }
  }
}

TEST_CASE("zero-count classification") {
  CHECK(slocc_group_from_zero_count(0) == SloccGroup::no_zeros);
  CHECK(slocc_group_from_zero_count(1) == SloccGroup::one_zero);
  CHECK(slocc_group_from_zero_count(2) == SloccGroup::anomalous);
  CHECK(slocc_group_from_zero_count(3) == SloccGroup::all_zeros);
  CHECK_THROWS_AS(slocc_group_from_zero_count(4), std::invalid_argument);
  CHECK(std::string(to_string(SloccGroup::anomalous)) == "anomalous");
}

TEST_CASE("fingerprint groups for the named states") {
  CHECK(fingerprint(make_state(StateLabel::psi_minus())).group ==
        SloccGroup::one_zero);
  CHECK(fingerprint(make_state(StateLabel::cluster4())).group ==
        SloccGroup::one_zero);
  CHECK(fingerprint(make_state(StateLabel::ghz(4))).group ==
        SloccGroup::all_zeros);
  CHECK(fingerprint(make_state(StateLabel::w(4))).group == SloccGroup::all_zeros);
  CHECK(fingerprint(make_state(StateLabel::psi_plus())).group ==
        SloccGroup::all_zeros);
  // A Haar-random state is generic: no vanishing invariant.
  CHECK(fingerprint(haar_random_state(4, 3141)).group == SloccGroup::no_zeros);

  const Fingerprint fp = fingerprint(make_state(StateLabel::cluster4()));
  CHECK(fp.zero_pattern == std::array<bool, 3>{false, true, false});
  CHECK(fp.threshold == kFingerprintZeroThreshold);
}

TEST_CASE("local unitaries never change the zero pattern") {
  std::mt19937_64 rng(271828);
  const PureState bases[3] = {make_state(StateLabel::cluster4()),
                              make_state(StateLabel::psi_minus()),
                              haar_random_state(4, 161)};
  for (int trial = 0; trial < 200; ++trial) {
    const PureState& base = bases[trial % 3];
    const int target = 1 + trial % 4;
    const PureState rotated =
        apply_local_unitary(base, LocalUnitary(target, haar_unitary(2, rng)));
    CHECK(fingerprint(rotated).zero_pattern == fingerprint(base).zero_pattern);
  }
}
