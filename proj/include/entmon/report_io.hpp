#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "entmon/four_qubit.hpp"
#include "entmon/monotones.hpp"

namespace entmon {

/// Machine-readable report: {state, n_qubits, input_norm?, measures, q1} with
/// full-precision doubles. Field order is fixed.
nlohmann::ordered_json report_to_json(const MonotoneReport& report,
                                      std::optional<double> input_norm = {});

/// Key/value header plus one row per locus, values rounded to six decimals.
void write_report_table(std::ostream& out, const MonotoneReport& report,
                        std::optional<double> input_norm = {});

nlohmann::ordered_json fingerprint_to_json(const Fingerprint& fp,
                                           const std::string& state_name);

void write_fingerprint_table(std::ostream& out, const Fingerprint& fp,
                             const std::string& state_name);

} // namespace entmon
