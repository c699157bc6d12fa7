// Acceptance suite: every guaranteed numeric property of the library, one
// criterion per line, with the timing budgets enforced where they apply.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "entmon/four_qubit.hpp"
#include "entmon/monotones.hpp"
#include "entmon/state.hpp"
#include "entmon/transforms.hpp"
#include "entmon/verify.hpp"

using namespace entmon;

namespace {

double eta(int n) {
  const double l = std::ldexp(1.0, n);
  return l / (l - 1.0);
}

// Returns std::nullopt on success, otherwise the first failure description.
using CriterionFn = std::function<std::optional<std::string>()>;

std::optional<std::string> ghz_closed_forms() {
  for (int n = 2; n <= 8; ++n) {
    const PureState ghz = make_state(StateLabel::ghz(n));
    for (const Locus& locus : all_loci(n)) {
      const SchmidtSpectrum spectrum = schmidt_spectrum(reduce(ghz, locus));
      const double d = d_monotone_schmidt(spectrum);
      const double s = linear_entropy(spectrum);
      const double d_expected = locus.size() == 1 ? 1.0 : 0.0;
      const double s_expected = eta(locus.size()) / 2.0;
      if (std::abs(d - d_expected) > 1e-10 || std::abs(s - s_expected) > 1e-10) {
        std::ostringstream out;
        out << "N=" << n << " locus=" << locus.to_string() << " D=" << d
            << " S=" << s;
        return out.str();
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> w_closed_forms() {
  for (int n = 2; n <= 8; ++n) {
    const PureState w = make_state(StateLabel::w(n));
    for (const Locus& locus : all_loci(n)) {
      const SchmidtSpectrum spectrum = schmidt_spectrum(reduce(w, locus));
      const double d = d_monotone_schmidt(spectrum);
      const double s = linear_entropy(spectrum);
      const int size = locus.size();
      const double d_expected =
          size == 1 ? 4.0 * (n - 1) / (double(n) * n) : 0.0;
      const double s_expected =
          2.0 * eta(size) * (n - size) * size / (double(n) * n);
      if (std::abs(d - d_expected) > 1e-10 || std::abs(s - s_expected) > 1e-10) {
        std::ostringstream out;
        out << "N=" << n << " locus=" << locus.to_string() << " D=" << d
            << " S=" << s;
        return out.str();
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> psi_pair_independence() {
  const MonotoneReport plus = full_report(make_state(StateLabel::psi_plus()));
  const MonotoneReport minus = full_report(make_state(StateLabel::psi_minus()));
  for (std::size_t i = 0; i < plus.measures.size(); ++i) {
    if (std::abs(plus.measures[i].s_value - minus.measures[i].s_value) > 1e-10) {
      return "linear entropies differ at locus " +
             plus.measures[i].locus.to_string();
    }
    if (plus.measures[i].n == 2 && std::abs(plus.measures[i].d_value) > 1e-10) {
      return "psi+ has nonzero D_2 at locus " + plus.measures[i].locus.to_string();
    }
  }
  const double expected[3] = {0.5, 0.5, 0.0};
  const Locus loci[3] = {Locus({1, 2}), Locus({1, 3}), Locus({1, 4})};
  for (int i = 0; i < 3; ++i) {
    for (const auto& m : minus.measures) {
      if (m.locus == loci[i] && std::abs(m.d_value - expected[i]) > 1e-10) {
        return "psi- D_2 mismatch at locus " + loci[i].to_string();
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> cluster_triple() {
  const PureState cluster = make_state(StateLabel::cluster4());
  const double expected[3] = {1.0, 0.0, 1.0};
  const Locus loci[3] = {Locus({1, 2}), Locus({1, 3}), Locus({1, 4})};
  for (int i = 0; i < 3; ++i) {
    const double d = d_monotone(cluster, loci[i]);
    if (std::abs(d - expected[i]) > 1e-10) {
      std::ostringstream out;
      out << "locus " << loci[i].to_string() << ": D=" << d;
      return out.str();
    }
  }
  return std::nullopt;
}

std::optional<std::string> concurrence_identity() {
  for (int i = 0; i < 200; ++i) {
    const PureState psi = haar_random_state(2, 100'000 + i);
    const auto& a = psi.amplitudes();
    const double reference = 4.0 * std::norm(a[0] * a[3] - a[1] * a[2]);
    const double d = d_monotone_minors(reduce(psi, Locus({1})));
    if (std::abs(d - reference) > 1e-12 * std::max(reference, 1e-300)) {
      std::ostringstream out;
      out << "seed=" << 100'000 + i << " D=" << d << " 4|det A|^2=" << reference;
      return out.str();
    }
  }
  return std::nullopt;
}

std::optional<std::string> four_qubit_determinants() {
  const Locus loci[3] = {Locus({1, 2}), Locus({1, 3}), Locus({1, 4})};
  for (int i = 0; i < 500; ++i) {
    const PureState psi = haar_random_state(4, 200'000 + i);
    for (const Locus& locus : loci) {
      const double via_det = det_invariant(psi, locus);
      const double via_pipeline = d_monotone(psi, locus);
      if (std::abs(via_det - via_pipeline) > 1e-10 * std::max(1.0, via_det)) {
        std::ostringstream out;
        out << "seed=" << 200'000 + i << " locus=" << locus.to_string()
            << " det=" << via_det << " pipeline=" << via_pipeline;
        return out.str();
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> suite_failure(const verify::SuiteReport& report) {
  if (report.passed()) return std::nullopt;
  return report.violation->detail;
}

std::optional<std::string> oracle_equivalence() {
  verify::HarnessOptions options;
  options.seed = 300'000;
  options.trials = 500;
  options.min_qubits = 2;
  options.max_qubits = 6;
  options.rel_tolerance = 1e-10;
  return suite_failure(verify::run_oracle_suite(options));
}

std::optional<std::string> lu_invariance() {
  verify::HarnessOptions options;
  options.seed = 400'000;
  options.trials = 200;  // 200 local-unitary trials, 200 subspace trials
  options.min_qubits = 2;
  options.max_qubits = 6;
  options.rel_tolerance = 1e-10;
  return suite_failure(verify::run_lu_suite(options));
}

std::optional<std::string> povm_monotonicity() {
  verify::HarnessOptions options;
  options.seed = 500'000;
  options.trials = 10'000;
  options.min_qubits = 2;
  options.povm_max_qubits = 5;
  options.nu_grid = {0.25, 0.5, 1.0};
  options.povm_slack = 1e-9;
  return suite_failure(verify::run_povm_suite(options));
}

std::optional<std::string> forefactor_identity() {
  // 500 accepted trials: POVM target inside the locus and D(psi) > 1e-6.
  const double nu_grid[3] = {0.25, 0.5, 1.0};
  int accepted = 0;
  std::uint64_t trial_seed = 600'000;
  while (accepted < 500) {
    std::mt19937_64 rng(trial_seed++);
    const int n = std::uniform_int_distribution<int>(2, 5)(rng);
    const PureState psi = haar_random_state(n, rng);
    const auto loci = all_loci(n);
    const Locus locus =
        loci[std::uniform_int_distribution<std::size_t>(0, loci.size() - 1)(rng)];
    const auto& members = locus.indices();
    const int target = members[std::uniform_int_distribution<std::size_t>(
        0, members.size() - 1)(rng)];
    const TwoOutcomePovm povm = TwoOutcomePovm::sample(target, rng);
    const double d_psi = d_monotone(psi, locus);
    if (d_psi <= 1e-6) continue;
    ++accepted;
    const auto outcomes = apply_povm(psi, povm);
    for (const double nu : nu_grid) {
      double lhs = 0.0;
      for (const auto& outcome : outcomes) {
        if (outcome.degenerate) continue;
        lhs += outcome.probability *
               std::pow(d_monotone(*outcome.state, locus), nu);
      }
      const double ratio = lhs / std::pow(d_psi, nu);
      const double factor = povm_forefactor(povm, outcomes[0].probability,
                                            outcomes[1].probability, nu);
      if (std::abs(ratio - factor) > 1e-9) {
        std::ostringstream out;
        out << "seed=" << trial_seed - 1 << " locus=" << locus.to_string()
            << " target=" << target << " nu=" << nu << " ratio=" << ratio
            << " analytic=" << factor;
        return out.str();
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> d1_equals_s1() {
  for (int i = 0; i < 500; ++i) {
    const int n = 2 + i % 7;  // N in 2..8
    const PureState psi = haar_random_state(n, 700'000 + i);
    for (int k = 1; k <= n; ++k) {
      const SchmidtSpectrum spectrum = schmidt_spectrum(reduce(psi, Locus({k})));
      const double d = d_monotone_schmidt(spectrum);
      const double s = linear_entropy(spectrum);
      if (std::abs(d - s) > 1e-10) {
        std::ostringstream out;
        out << "seed=" << 700'000 + i << " qubit=" << k << " D=" << d
            << " S=" << s;
        return out.str();
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> support_condition() {
  std::mt19937_64 rng(800'000);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int num_qubits = 4 + trial % 3;
    const int n = 1 + trial % (num_qubits / 2);
    const std::size_t limit = std::size_t{1} << n;
    const std::size_t support =
        1 + std::uniform_int_distribution<std::size_t>(0, limit - 2)(rng);
    std::vector<cplx> amps(std::size_t{1} << num_qubits, 0.0);
    std::uniform_int_distribution<std::size_t> position(0, amps.size() - 1);
    std::size_t placed = 0;
    while (placed < support) {
      const std::size_t x = position(rng);
      if (amps[x] == cplx{0.0, 0.0}) {
        amps[x] = {gauss(rng), gauss(rng)};
        ++placed;
      }
    }
    const PureState psi(num_qubits, std::move(amps));
    for (const Locus& locus : enumerate_loci(num_qubits, n)) {
      const double d = d_monotone(psi, locus);
      if (std::abs(d) > 1e-12) {
        std::ostringstream out;
        out << "trial=" << trial << " N=" << num_qubits << " n=" << n
            << " support=" << support << " locus=" << locus.to_string()
            << " D=" << d;
        return out.str();
      }
    }
  }
  return std::nullopt;
}

struct Criterion {
  std::string name;
  CriterionFn run;
  double time_budget_seconds;  // <= 0 means unbounded
};

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"ghz-closed-forms", ghz_closed_forms, 5.0},
      {"w-closed-forms", w_closed_forms, 0.0},
      {"psi-pair-independence", psi_pair_independence, 0.0},
      {"cluster-d2-triple", cluster_triple, 0.0},
      {"two-qubit-concurrence-identity", concurrence_identity, 0.0},
      {"four-qubit-determinant-agreement", four_qubit_determinants, 10.0},
      {"minor-gram-route-equivalence", oracle_equivalence, 0.0},
      {"local-unitary-invariance", lu_invariance, 0.0},
      {"povm-monotonicity", povm_monotonicity, 60.0},
      {"povm-forefactor-identity", forefactor_identity, 0.0},
      {"d1-equals-s1", d1_equals_s1, 0.0},
      {"support-condition", support_condition, 0.0},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::optional<std::string> failure;
    try {
      failure = criteria[i].run();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (!failure && criteria[i].time_budget_seconds > 0.0 &&
        elapsed > criteria[i].time_budget_seconds) {
      std::ostringstream out;
      out << "exceeded " << criteria[i].time_budget_seconds << " s budget";
      failure = out.str();
    }
    char line[512];
    if (failure) {
      ++failures;
      std::snprintf(line, sizeof(line), "[FAIL] %02zu %s (%.2f s): %s", i + 1,
                    criteria[i].name.c_str(), elapsed, failure->c_str());
    } else {
      std::snprintf(line, sizeof(line), "[PASS] %02zu %s (%.2f s)", i + 1,
                    criteria[i].name.c_str(), elapsed);
    }
    std::cout << line << "\n";
  }
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
