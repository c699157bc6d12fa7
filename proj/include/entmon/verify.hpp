#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace entmon::verify {

/// Shared knobs for the randomized property suites. Trial i draws everything
/// it needs from an RNG seeded with (seed + i), so any trial is reproducible
/// as trial 0 of a one-trial run with that seed.
struct HarnessOptions {
  std::uint64_t seed = 1;
  int trials = 1000;
  int min_qubits = 2;
  int max_qubits = 6;       ///< oracle and local-unitary suites
  int povm_max_qubits = 5;  ///< POVM suite
  std::vector<double> nu_grid = {0.25, 0.5, 1.0};
  double rel_tolerance = 1e-10;        ///< route equivalence and LU invariance
  double povm_slack = 1e-9;            ///< monotonicity inequality slack
  double forefactor_tolerance = 1e-9;  ///< analytic forefactor agreement
  std::uint64_t minor_cap = 1'000'000;
};

struct Violation {
  std::string suite;
  std::uint64_t trial_seed = 0;
  std::string detail;  ///< all trial inputs and the failed comparison
  std::string rerun;   ///< command line reproducing the trial
};

struct SuiteReport {
  std::string name;
  int trials = 0;
  long checks = 0;  ///< individual comparisons performed
  std::optional<Violation> violation;  ///< first failure in trial order
  bool passed() const { return !violation.has_value(); }
};

/// Minor-enumeration D against the Schmidt-spectrum D on Haar-random states,
/// every locus; also asserts value ranges and the D_1 = S_1 identity.
SuiteReport run_oracle_suite(const HarnessOptions& options);

/// Haar 2x2 unitaries on random qubits and Haar l x l unitaries on random
/// loci leave every D unchanged.
SuiteReport run_lu_suite(const HarnessOptions& options);

/// <D^nu> <= D^nu under random two-outcome POVMs for every nu in the grid,
/// <S> <= S at nu = 1, and the analytic forefactor when the POVM target lies
/// inside the locus.
SuiteReport run_povm_suite(const HarnessOptions& options);

} // namespace entmon::verify
