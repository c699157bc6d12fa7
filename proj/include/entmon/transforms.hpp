#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <optional>
#include <random>

#include "entmon/bipartition.hpp"

namespace entmon {

/// Entrywise tolerance for U^dagger U = I checks.
inline constexpr double kUnitaryTol = 1e-12;

/// Outcome probabilities below this are degenerate: the branch state cannot be
/// normalized meaningfully and contributes nothing to averages.
inline constexpr double kDegenerateProbability = 1e-14;

/// 2x2 unitary acting on one qubit. Unitarity is checked at construction.
class LocalUnitary {
 public:
  LocalUnitary(int target, Eigen::Matrix2cd matrix);

  int target() const noexcept { return target_; }
  const Eigen::Matrix2cd& matrix() const noexcept { return matrix_; }

 private:
  int target_;
  Eigen::Matrix2cd matrix_;
};

PureState apply_local_unitary(const PureState& state, const LocalUnitary& lu);

/// Applies an l x l unitary to the locus index of the vector family {V_X}.
/// For a single-qubit locus this coincides with apply_local_unitary.
PureState apply_subspace_unitary(const PureState& state, const Locus& locus,
                                 const Eigen::MatrixXcd& matrix);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the
/// R-diagonal phases folded back into Q. Deterministic per seed.
Eigen::MatrixXcd haar_unitary(int dim, std::uint64_t seed);
Eigen::MatrixXcd haar_unitary(int dim, std::mt19937_64& rng);

/// Two-outcome POVM in singular-value form:
///   A_1 = u1 diag(a, b) v,   A_2 = u2 diag(sqrt(1-a^2), sqrt(1-b^2)) v,
/// acting on one qubit. Completeness A_1^+ A_1 + A_2^+ A_2 = I is checked at
/// construction.
class TwoOutcomePovm {
 public:
  TwoOutcomePovm(int target, double a, double b, Eigen::Matrix2cd v,
                 Eigen::Matrix2cd u1, Eigen::Matrix2cd u2);

  /// Harness sampling: a, b uniform on [0,1]; u1, u2, v Haar unitaries.
  static TwoOutcomePovm sample(int target, std::mt19937_64& rng);

  int target() const noexcept { return target_; }
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  Eigen::Matrix2cd element(int i) const;

 private:
  int target_;
  double a_, b_;
  Eigen::Matrix2cd v_, u1_, u2_;
};

struct PovmOutcome {
  std::optional<PureState> state;  ///< empty when the branch is degenerate
  double probability = 0.0;
  bool degenerate = false;
};

/// Both measurement branches, normalized; p_1 + p_2 = 1 within 1e-12.
std::array<PovmOutcome, 2> apply_povm(const PureState& state,
                                      const TwoOutcomePovm& povm);

struct MonotonicityTrial {
  double lhs = 0.0;  ///< sum_i p_i D^nu(phi_i)
  double rhs = 0.0;  ///< D^nu(psi)
  bool ok = false;   ///< lhs <= rhs + slack
};

MonotonicityTrial monotonicity_trial(const PureState& state, const Locus& locus,
                                     const TwoOutcomePovm& povm, double nu,
                                     double slack = 1e-9);

/// Analytic ratio <D^nu>/D^nu for a POVM on a locus qubit:
///   p1 (a^2 b^2 / p1^2)^nu + p2 ((1-a^2)(1-b^2) / p2^2)^nu.
/// The squared denominators follow from D being homogeneous of degree four in
/// the amplitudes. Degenerate branches contribute zero.
double povm_forefactor(const TwoOutcomePovm& povm, double p1, double p2,
                       double nu);

} // namespace entmon
