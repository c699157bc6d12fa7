#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entmon/bipartition.hpp"

namespace entmon {

/// Bipartition weights <V~_i|V~_i> (eigenvalues of the reduction Gram matrix),
/// sorted descending and clamped at zero.
struct SchmidtSpectrum {
  std::vector<double> weights;
  std::size_t size() const noexcept { return weights.size(); }
};

/// Weights below this are treated as exact zeros: the Hermitian eigensolve
/// resolves eigenvalues of a unit-trace Gram matrix to about 1e-15, so smaller
/// values are indistinguishable from rank deficiency.
inline constexpr double kSpectrumZeroTol = 1e-12;

SchmidtSpectrum schmidt_spectrum(const ReducedVectors& rv);

/// l^2 (prod_i w_i)^(2/l). Zero whenever any weight is zero; one exactly when
/// all weights equal 1/l. Evaluated as exp((2/l) sum log w_i); a product below
/// 1e-300 reports 0.
double d_monotone_schmidt(const SchmidtSpectrum& spectrum);

/// Minor-sum form: l^2 (sum over column l-subsets |det|^2)^(2/l) for the
/// l x 2^(N-n) row matrix of reduced vectors. Enumerates minors when
/// C(2^(N-n), l) <= minor_cap; otherwise evaluates the equal Gram determinant.
double d_monotone_minors(const ReducedVectors& rv,
                         std::uint64_t minor_cap = 1'000'000);

/// eta_n (1 - sum_i w_i^2) with eta_n = 2^n / (2^n - 1).
double linear_entropy(const SchmidtSpectrum& spectrum);

/// 4 sum_{X<Y} |V0(X) V1(Y) - V0(Y) V1(X)|^2 for a single-qubit locus.
/// Throws std::invalid_argument unless the reduction has exactly two vectors.
double d1_direct(const ReducedVectors& rv);

/// Convenience: D for one bipartition through the Schmidt route.
double d_monotone(const PureState& state, const Locus& locus);

/// Mean of D_1 over all qubits. Zero for a single qubit, which admits no
/// bipartition.
double q1_measure(const PureState& state);

struct LocusMeasure {
  Locus locus;
  int n = 0;
  double d_value = 0.0;
  double s_value = 0.0;
  SchmidtSpectrum schmidt;
};

struct ReportOptions {
  bool minor_spot_check = true;
  /// Spot-check a locus only when it has at most this many minors.
  std::uint64_t spot_check_cap = 10'000;
  std::uint64_t minor_cap = 1'000'000;
  int n_filter = 0;                 ///< 0 keeps every admissible n
  std::vector<Locus> locus_filter;  ///< empty keeps every locus
};

struct MonotoneReport {
  std::string state_name;
  int num_qubits = 0;
  double q1 = 0.0;
  std::vector<LocusMeasure> measures;  ///< ordered by (n, locus)
};

/// D_n and S_n for every enumerated locus (filters permitting) plus Q1.
/// Loci are evaluated concurrently; the result ordering is by (n, locus).
MonotoneReport full_report(const PureState& state, std::string state_name = {},
                           const ReportOptions& options = {});

} // namespace entmon
