#include "entmon/report_io.hpp"

#include <iomanip>
#include <ostream>

namespace entmon {

nlohmann::ordered_json report_to_json(const MonotoneReport& report,
                                      std::optional<double> input_norm) {
  nlohmann::ordered_json doc;
  doc["state"] = report.state_name;
  doc["n_qubits"] = report.num_qubits;
  if (input_norm) {
    doc["input_norm"] = *input_norm;
  }
  doc["measures"] = nlohmann::ordered_json::array();
  for (const auto& m : report.measures) {
    nlohmann::ordered_json entry;
    entry["locus"] = m.locus.indices();
    entry["n"] = m.n;
    entry["D"] = m.d_value;
    entry["S"] = m.s_value;
    entry["schmidt_weights"] = m.schmidt.weights;
    doc["measures"].push_back(std::move(entry));
  }
  doc["q1"] = report.q1;
  return doc;
}

namespace {

struct StreamStateGuard {
  std::ostream& out;
  std::ios::fmtflags flags = out.flags();
  std::streamsize precision = out.precision();
  ~StreamStateGuard() {
    out.flags(flags);
    out.precision(precision);
  }
};

} // namespace

void write_report_table(std::ostream& out, const MonotoneReport& report,
                        std::optional<double> input_norm) {
  StreamStateGuard guard{out};
  out << "state: " << report.state_name << "\n";
  out << "n_qubits: " << report.num_qubits << "\n";
  if (input_norm) {
    out << "input_norm: " << std::fixed << std::setprecision(6) << *input_norm
        << "\n";
  }
  out << "q1: " << std::fixed << std::setprecision(6) << report.q1 << "\n";
  out << "\n";
  out << std::left << std::setw(14) << "locus" << std::setw(4) << "n"
      << std::setw(12) << "D" << std::setw(12) << "S"
      << "schmidt_weights\n";
  for (const auto& m : report.measures) {
    out << std::left << std::setw(14) << m.locus.to_string() << std::setw(4)
        << m.n << std::setw(12) << m.d_value << std::setw(12) << m.s_value;
    for (std::size_t i = 0; i < m.schmidt.weights.size(); ++i) {
      if (i > 0) out << " ";
      out << m.schmidt.weights[i];
    }
    out << "\n";
  }
}

nlohmann::ordered_json fingerprint_to_json(const Fingerprint& fp,
                                           const std::string& state_name) {
  nlohmann::ordered_json doc;
  doc["state"] = state_name;
  doc["d2_values"] = fp.d2_values;
  doc["zero_pattern"] = fp.zero_pattern;
  doc["group"] = to_string(fp.group);
  doc["threshold"] = fp.threshold;
  doc["note"] =
      "membership in the generic family (nonzero hyperdeterminant) is not tested";
  return doc;
}

void write_fingerprint_table(std::ostream& out, const Fingerprint& fp,
                             const std::string& state_name) {
  StreamStateGuard guard{out};
  static const char* kLoci[3] = {"1,2", "1,3", "1,4"};
  out << "state: " << state_name << "\n";
  out << std::fixed << std::setprecision(6);
  for (int i = 0; i < 3; ++i) {
    out << "D2(" << kLoci[i] << "): " << fp.d2_values[i] << "\n";
  }
  out << "zero_pattern:";
  for (const bool z : fp.zero_pattern) {
    out << " " << (z ? 1 : 0);
  }
  out << "\n";
  out << "group: " << to_string(fp.group) << "\n";
  out.unsetf(std::ios::floatfield);
  out << "threshold: " << fp.threshold << "\n";
  out << "note: membership in the generic family (nonzero hyperdeterminant) "
         "is not tested\n";
}

} // namespace entmon
