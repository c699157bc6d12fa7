#include "entmon/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "detail/parallel.hpp"
#include "entmon/monotones.hpp"
#include "entmon/transforms.hpp"

namespace entmon::verify {

namespace {

std::string format_nu_grid(const std::vector<double>& grid) {
  std::ostringstream out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0) out << ",";
    out << grid[i];
  }
  return out.str();
}

std::string rerun_command(const std::string& suite, std::uint64_t trial_seed,
                          const HarnessOptions& options) {
  std::ostringstream out;
  out << "entmon verify --suite " << suite << " --trials 1 --seed " << trial_seed
      << " --min-qubits " << options.min_qubits << " --max-qubits "
      << options.max_qubits << " --povm-max-qubits " << options.povm_max_qubits
      << " --nu " << format_nu_grid(options.nu_grid) << " --tolerance "
      << options.rel_tolerance;
  return out.str();
}

int draw_qubits(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Locus draw_locus(std::mt19937_64& rng, int num_qubits) {
  const auto loci = all_loci(num_qubits);
  const std::size_t pick =
      std::uniform_int_distribution<std::size_t>(0, loci.size() - 1)(rng);
  return loci[pick];
}

// Runs one function per trial, collecting the first violation in trial order.
template <typename TrialFn>
SuiteReport run_suite(std::string name, const HarnessOptions& options,
                      TrialFn&& trial_fn) {
  SuiteReport report;
  report.name = std::move(name);
  report.trials = options.trials;
  const std::size_t count = options.trials < 0 ? 0 : options.trials;
  std::vector<std::optional<Violation>> violations(count);
  std::vector<long> checks(count, 0);
  detail::parallel_for(count, [&](std::size_t i) {
    const std::uint64_t trial_seed = options.seed + i;
    std::mt19937_64 rng(trial_seed);
    violations[i] = trial_fn(rng, trial_seed, checks[i]);
  });
  for (std::size_t i = 0; i < count; ++i) {
    report.checks += checks[i];
    if (violations[i] && !report.violation) {
      report.violation = violations[i];
    }
  }
  return report;
}

} // namespace

SuiteReport run_oracle_suite(const HarnessOptions& options) {
  return run_suite(
      "oracle-equivalence", options,
      [&](std::mt19937_64& rng, std::uint64_t trial_seed,
          long& checks) -> std::optional<Violation> {
        const int n = draw_qubits(rng, options.min_qubits, options.max_qubits);
        const PureState psi = haar_random_state(n, rng);
        for (const Locus& locus : all_loci(n)) {
          const ReducedVectors rv = reduce(psi, locus);
          const SchmidtSpectrum spectrum = schmidt_spectrum(rv);
          const double d_schmidt = d_monotone_schmidt(spectrum);
          const double d_minors = d_monotone_minors(rv, options.minor_cap);
          const double s = linear_entropy(spectrum);
          checks += 3;
          std::ostringstream fail;
          if (std::abs(d_minors - d_schmidt) >
              options.rel_tolerance * std::max(1.0, d_schmidt)) {
            fail << "minor route " << d_minors << " != Schmidt route "
                 << d_schmidt;
          } else if (d_schmidt < -1e-10 || d_schmidt > 1.0 + 1e-10 ||
                     s < -1e-10 || s > 1.0 + 1e-10) {
            fail << "value out of [0,1]: D=" << d_schmidt << " S=" << s;
          } else if (locus.size() == 1 && std::abs(d_schmidt - s) > 1e-10) {
            fail << "D_1=" << d_schmidt << " != S_1=" << s;
          } else {
            continue;
          }
          Violation v;
          v.suite = "oracle";
          v.trial_seed = trial_seed;
          std::ostringstream detail;
          detail << "seed=" << trial_seed << " N=" << n << " locus="
                 << locus.to_string() << ": " << fail.str();
          v.detail = detail.str();
          v.rerun = rerun_command("oracle", trial_seed, options);
          return v;
        }
        return std::nullopt;
      });
}

SuiteReport run_lu_suite(const HarnessOptions& options) {
  return run_suite(
      "lu-invariance", options,
      [&](std::mt19937_64& rng, std::uint64_t trial_seed,
          long& checks) -> std::optional<Violation> {
        const int n = draw_qubits(rng, options.min_qubits, options.max_qubits);
        const PureState psi = haar_random_state(n, rng);
        const int target = draw_qubits(rng, 1, n);
        const LocalUnitary lu(target, haar_unitary(2, rng));
        const PureState rotated = apply_local_unitary(psi, lu);
        for (const Locus& locus : all_loci(n)) {
          const double before = d_monotone(psi, locus);
          const double after = d_monotone(rotated, locus);
          ++checks;
          if (std::abs(before - after) >
              options.rel_tolerance * std::max(1.0, before)) {
            Violation v;
            v.suite = "lu";
            v.trial_seed = trial_seed;
            std::ostringstream detail;
            detail << "seed=" << trial_seed << " N=" << n << " qubit=" << target
                   << " locus=" << locus.to_string() << ": D " << before
                   << " -> " << after;
            v.detail = detail.str();
            v.rerun = rerun_command("lu", trial_seed, options);
            return v;
          }
        }
        const Locus locus = draw_locus(rng, n);
        const Eigen::MatrixXcd subspace =
            haar_unitary(1 << locus.size(), rng);
        const double before = d_monotone(psi, locus);
        const double after =
            d_monotone(apply_subspace_unitary(psi, locus, subspace), locus);
        ++checks;
        if (std::abs(before - after) >
            options.rel_tolerance * std::max(1.0, before)) {
          Violation v;
          v.suite = "lu";
          v.trial_seed = trial_seed;
          std::ostringstream detail;
          detail << "seed=" << trial_seed << " N=" << n << " subspace locus="
                 << locus.to_string() << ": D " << before << " -> " << after;
          v.detail = detail.str();
          v.rerun = rerun_command("lu", trial_seed, options);
          return v;
        }
        return std::nullopt;
      });
}

SuiteReport run_povm_suite(const HarnessOptions& options) {
  return run_suite(
      "povm-monotonicity", options,
      [&](std::mt19937_64& rng, std::uint64_t trial_seed,
          long& checks) -> std::optional<Violation> {
        const int n = draw_qubits(rng, options.min_qubits,
                                  options.povm_max_qubits);
        const PureState psi = haar_random_state(n, rng);
        const Locus locus = draw_locus(rng, n);
        const int target = draw_qubits(rng, 1, n);
        const TwoOutcomePovm povm = TwoOutcomePovm::sample(target, rng);

        const auto report_violation = [&](const std::string& what) {
          Violation v;
          v.suite = "povm";
          v.trial_seed = trial_seed;
          std::ostringstream detail;
          detail << "seed=" << trial_seed << " N=" << n << " locus="
                 << locus.to_string() << " target=" << target << " a="
                 << povm.a() << " b=" << povm.b() << ": " << what;
          v.detail = detail.str();
          v.rerun = rerun_command("povm", trial_seed, options);
          return v;
        };

        const SchmidtSpectrum spectrum = schmidt_spectrum(reduce(psi, locus));
        const double d_psi = d_monotone_schmidt(spectrum);
        const double s_psi = linear_entropy(spectrum);
        const auto outcomes = apply_povm(psi, povm);

        double d_branch[2] = {0.0, 0.0};
        double s_branch[2] = {0.0, 0.0};
        for (int i = 0; i < 2; ++i) {
          if (outcomes[i].degenerate) continue;
          const SchmidtSpectrum branch =
              schmidt_spectrum(reduce(*outcomes[i].state, locus));
          d_branch[i] = d_monotone_schmidt(branch);
          s_branch[i] = linear_entropy(branch);
        }

        for (const double nu : options.nu_grid) {
          double lhs = 0.0;
          for (int i = 0; i < 2; ++i) {
            if (outcomes[i].degenerate) continue;
            lhs += outcomes[i].probability * std::pow(d_branch[i], nu);
          }
          const double rhs = std::pow(d_psi, nu);
          ++checks;
          if (lhs > rhs + options.povm_slack) {
            std::ostringstream what;
            what << "nu=" << nu << " <D^nu>=" << lhs << " > D^nu=" << rhs;
            return report_violation(what.str());
          }
          if (locus.contains(target) && d_psi > 1e-6) {
            const double factor = povm_forefactor(
                povm, outcomes[0].probability, outcomes[1].probability, nu);
            ++checks;
            if (std::abs(lhs / rhs - factor) > options.forefactor_tolerance) {
              std::ostringstream what;
              what << "nu=" << nu << " forefactor " << lhs / rhs
                   << " != analytic " << factor;
              return report_violation(what.str());
            }
          }
        }

        double s_avg = 0.0;
        for (int i = 0; i < 2; ++i) {
          if (!outcomes[i].degenerate) {
            s_avg += outcomes[i].probability * s_branch[i];
          }
        }
        ++checks;
        if (s_avg > s_psi + options.povm_slack) {
          std::ostringstream what;
          what << "<S>=" << s_avg << " > S=" << s_psi;
          return report_violation(what.str());
        }
        return std::nullopt;
      });
}

} // namespace entmon::verify
