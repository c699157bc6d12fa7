// entmon: bipartite entanglement monotones for N-qubit pure states.
//
// Subcommands:
//   compute      D_n / S_n report for every bipartition of a state
//   fingerprint  four-qubit invariant triple and SLOCC group
//   make-state   write a named state as an amplitude file
//   verify       randomized property suites (route equivalence, unitary
//                invariance, POVM monotonicity)

#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "entmon/four_qubit.hpp"
#include "entmon/kernels.hpp"
#include "entmon/monotones.hpp"
#include "entmon/report_io.hpp"
#include "entmon/state.hpp"
#include "entmon/transforms.hpp"
#include "entmon/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInputFormat = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StateSelection {
  std::string label;
  std::string input_path;
  int qubits = 0;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;

  void add_options(CLI::App& cmd, bool allow_input = true) {
    cmd.add_option("--state", label,
                   "named state: ghz, w, psi-plus, psi-minus, cluster4, basis, random");
    if (allow_input) {
      cmd.add_option("--input", input_path, "amplitude file to load");
    }
    cmd.add_option("--qubits", qubits, "number of qubits for --state");
    cmd.add_option("--seed", seed, "seed for --state random");
    cmd.add_option("--index", index, "basis index for --state basis");
  }

  entmon::StateLabel resolve_label() const {
    static const std::map<std::string, entmon::StateKind> kinds = {
        {"ghz", entmon::StateKind::ghz},
        {"w", entmon::StateKind::w},
        {"psi-plus", entmon::StateKind::psi_plus},
        {"psi-minus", entmon::StateKind::psi_minus},
        {"cluster4", entmon::StateKind::cluster4},
        {"cluster", entmon::StateKind::cluster4},
        {"basis", entmon::StateKind::basis},
        {"random", entmon::StateKind::random},
    };
    const auto it = kinds.find(label);
    if (it == kinds.end()) {
      throw UsageError("unknown state label '" + label + "'");
    }
    const entmon::StateKind kind = it->second;
    int n = qubits;
    const bool four_qubit_label = kind == entmon::StateKind::psi_plus ||
                                  kind == entmon::StateKind::psi_minus ||
                                  kind == entmon::StateKind::cluster4;
    if (four_qubit_label) {
      if (n == 0) n = 4;
      if (n != 4) {
        throw UsageError("'" + label + "' is a four-qubit state");
      }
    } else if (n == 0) {
      throw UsageError("--qubits is required for --state " + label);
    }
    entmon::StateLabel out;
    out.kind = kind;
    out.num_qubits = n;
    out.basis_index = index;
    out.seed = seed;
    return out;
  }

  struct Resolved {
    entmon::PureState state;
    std::string name;
    std::optional<double> input_norm;
  };

  Resolved resolve() const {
    if (label.empty() == input_path.empty()) {
      throw UsageError("exactly one of --state and --input is required");
    }
    if (!input_path.empty()) {
      entmon::LoadedState loaded = entmon::load_amplitude_file(input_path);
      return {std::move(loaded.state), input_path, loaded.input_norm};
    }
    const entmon::StateLabel resolved = resolve_label();
    return {entmon::make_state(resolved), resolved.to_string(), std::nullopt};
  }
};

std::vector<double> parse_nu_grid(const std::string& text) {
  std::vector<double> grid;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      grid.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw UsageError("cannot parse --nu value '" + token + "'");
    }
    if (grid.back() <= 0.0 || grid.back() > 1.0) {
      throw UsageError("--nu values must lie in (0, 1]");
    }
  }
  if (grid.empty()) {
    throw UsageError("--nu requires at least one value");
  }
  return grid;
}

// Simple `key = value` file; '#' starts a comment.
std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw entmon::FileFormatError("cannot open config file: " + path);
  }
  std::map<std::string, std::string> values;
  std::string line;
  std::size_t line_no = 0;
  const auto trim = [](std::string s) {
    const auto begin = s.find_first_not_of(" \t\r");
    const auto end = s.find_last_not_of(" \t\r");
    return begin == std::string::npos ? std::string() : s.substr(begin, end - begin + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string trimmed = trim(line);
    if (trimmed.empty()) continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw entmon::FileFormatError("config line " + std::to_string(line_no) +
                                    ": expected `key = value`");
    }
    values[trim(trimmed.substr(0, eq))] = trim(trimmed.substr(eq + 1));
  }
  return values;
}

int run_compute(const StateSelection& selection, const std::string& format,
                const std::vector<std::string>& locus_filters, int n_filter,
                int max_qubits) {
  auto resolved = selection.resolve();
  const int num_qubits = resolved.state.num_qubits();
  if (num_qubits > max_qubits) {
    throw UsageError("state has " + std::to_string(num_qubits) +
                     " qubits; raise --max-qubits to allow it");
  }
  entmon::ReportOptions options;
  options.n_filter = n_filter;
  if (n_filter != 0 && (n_filter < 1 || n_filter > num_qubits / 2)) {
    throw UsageError("--n must lie in 1..floor(N/2)");
  }
  for (const auto& text : locus_filters) {
    entmon::Locus locus = entmon::Locus::parse(text);
    entmon::validate_locus(locus, num_qubits);
    options.locus_filter.push_back(std::move(locus));
  }
  const entmon::MonotoneReport report =
      entmon::full_report(resolved.state, resolved.name, options);
  if (format == "json") {
    std::cout << entmon::report_to_json(report, resolved.input_norm).dump(2)
              << "\n";
  } else {
    entmon::write_report_table(std::cout, report, resolved.input_norm);
  }
  return kExitOk;
}

int run_fingerprint(const StateSelection& selection, const std::string& format,
                    double threshold) {
  auto resolved = selection.resolve();
  const entmon::Fingerprint fp =
      entmon::fingerprint(resolved.state, threshold);
  if (format == "json") {
    std::cout << entmon::fingerprint_to_json(fp, resolved.name).dump(2) << "\n";
  } else {
    entmon::write_fingerprint_table(std::cout, fp, resolved.name);
  }
  return kExitOk;
}

int run_make_state(const StateSelection& selection, const std::string& output) {
  const entmon::StateLabel label = selection.resolve_label();
  const entmon::PureState state = entmon::make_state(label);
  if (output.empty()) {
    entmon::save_amplitude_file(std::cout, state);
  } else {
    entmon::save_amplitude_file(output, state);
  }
  return kExitOk;
}

int run_verify(CLI::App& cmd, const std::string& config_path,
               std::string suite, entmon::verify::HarnessOptions options,
               const std::string& nu_text) {
  if (!config_path.empty()) {
    // Config supplies defaults; explicit flags win.
    const auto values = parse_config_file(config_path);
    static const std::set<std::string> known = {
        "trials",     "seed", "suite",     "min_qubits", "max_qubits",
        "povm_max_qubits", "nu",   "tolerance"};
    for (const auto& [key, value] : values) {
      if (!known.contains(key)) {
        throw entmon::FileFormatError("config file has unknown key '" + key + "'");
      }
    }
    const auto lookup = [&](const char* key) -> const std::string* {
      const auto it = values.find(key);
      return it == values.end() ? nullptr : &it->second;
    };
    try {
      if (const auto* v = lookup("trials"); v && cmd.count("--trials") == 0)
        options.trials = std::stoi(*v);
      if (const auto* v = lookup("seed"); v && cmd.count("--seed") == 0)
        options.seed = std::stoull(*v);
      if (const auto* v = lookup("suite"); v && cmd.count("--suite") == 0)
        suite = *v;
      if (const auto* v = lookup("min_qubits"); v && cmd.count("--min-qubits") == 0)
        options.min_qubits = std::stoi(*v);
      if (const auto* v = lookup("max_qubits"); v && cmd.count("--max-qubits") == 0)
        options.max_qubits = std::stoi(*v);
      if (const auto* v = lookup("povm_max_qubits");
          v && cmd.count("--povm-max-qubits") == 0)
        options.povm_max_qubits = std::stoi(*v);
      if (const auto* v = lookup("nu"); v && cmd.count("--nu") == 0)
        options.nu_grid = parse_nu_grid(*v);
      if (const auto* v = lookup("tolerance"); v && cmd.count("--tolerance") == 0)
        options.rel_tolerance = std::stod(*v);
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception&) {
      throw entmon::FileFormatError("config file has a malformed value");
    }
  }
  if (cmd.count("--nu") > 0) {
    options.nu_grid = parse_nu_grid(nu_text);
  }
  if (options.trials < 1) {
    throw UsageError("--trials must be positive");
  }
  if (options.min_qubits < 2 || options.max_qubits < options.min_qubits ||
      options.povm_max_qubits < options.min_qubits) {
    throw UsageError("qubit range must satisfy 2 <= min <= max");
  }

  std::vector<entmon::verify::SuiteReport> reports;
  if (suite == "all" || suite == "oracle") {
    reports.push_back(entmon::verify::run_oracle_suite(options));
  }
  if (suite == "all" || suite == "lu") {
    reports.push_back(entmon::verify::run_lu_suite(options));
  }
  if (suite == "all" || suite == "povm") {
    reports.push_back(entmon::verify::run_povm_suite(options));
  }
  if (reports.empty()) {
    throw UsageError("unknown suite '" + suite + "' (all, oracle, lu, povm)");
  }

  std::cout << "kernels: " << entmon::kernels::isa_name(entmon::kernels::active_isa())
            << "\n";
  bool failed = false;
  for (const auto& report : reports) {
    std::cout << "suite " << report.name << ": trials=" << report.trials
              << " checks=" << report.checks
              << (report.passed() ? " ok" : " FAIL") << "\n";
    if (!report.passed()) {
      failed = true;
      std::cout << "counterexample: " << report.violation->detail << "\n";
      std::cout << "rerun: " << report.violation->rerun << "\n";
    }
  }
  std::cout << (failed ? "verification failed" : "verification passed") << "\n";
  return failed ? kExitVerification : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"bipartite entanglement monotones for N-qubit pure states"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "D_n/S_n report for a state");
  StateSelection compute_selection;
  compute_selection.add_options(*compute);
  std::string compute_format = "table";
  std::vector<std::string> locus_filters;
  int n_filter = 0;
  int max_qubits = 12;
  compute->add_option("--format", compute_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  compute->add_option("--locus", locus_filters,
                      "restrict to this locus, e.g. 1,3 (repeatable)");
  compute->add_option("--n", n_filter, "restrict to one bipartition size");
  compute->add_option("--max-qubits", max_qubits,
                      "refuse states larger than this (default 12)");

  // fingerprint
  auto* fingerprint = app.add_subcommand(
      "fingerprint", "four-qubit D_2 triple and SLOCC group");
  StateSelection fingerprint_selection;
  fingerprint_selection.add_options(*fingerprint);
  std::string fingerprint_format = "table";
  double threshold = entmon::kFingerprintZeroThreshold;
  fingerprint->add_option("--format", fingerprint_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  fingerprint->add_option("--threshold", threshold, "zero threshold");

  // make-state
  auto* make_state =
      app.add_subcommand("make-state", "write a named state as an amplitude file");
  StateSelection make_selection;
  make_selection.add_options(*make_state, /*allow_input=*/false);
  std::string output_path;
  make_state->add_option("--output", output_path,
                         "output file (stdout when omitted)");

  // verify
  auto* verify = app.add_subcommand("verify", "randomized property suites");
  entmon::verify::HarnessOptions harness;
  std::string suite = "all";
  std::string nu_text;
  std::string config_path;
  verify->add_option("--trials", harness.trials, "trials per suite");
  verify->add_option("--seed", harness.seed, "base seed; trial i uses seed+i");
  verify->add_option("--suite", suite, "all, oracle, lu, or povm");
  verify->add_option("--min-qubits", harness.min_qubits, "smallest state size");
  verify->add_option("--max-qubits", harness.max_qubits,
                     "largest state size (oracle/lu suites)");
  verify->add_option("--povm-max-qubits", harness.povm_max_qubits,
                     "largest state size for the POVM suite");
  verify->add_option("--nu", nu_text, "comma-separated nu grid, e.g. 0.25,0.5,1");
  verify->add_option("--tolerance", harness.rel_tolerance,
                     "relative tolerance for equivalence checks");
  verify->add_option("--config", config_path, "key = value defaults file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (compute->parsed()) {
      return run_compute(compute_selection, compute_format, locus_filters,
                         n_filter, max_qubits);
    }
    if (fingerprint->parsed()) {
      return run_fingerprint(fingerprint_selection, fingerprint_format,
                             threshold);
    }
    if (make_state->parsed()) {
      return run_make_state(make_selection, output_path);
    }
    if (verify->parsed()) {
      return run_verify(*verify, config_path, suite, harness, nu_text);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const entmon::FileFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputFormat;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitUsage;
}
