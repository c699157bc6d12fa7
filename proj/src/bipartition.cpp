#include "entmon/bipartition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace entmon {

Locus::Locus(std::vector<int> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) {
    throw std::invalid_argument("locus must contain at least one qubit");
  }
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 1) {
      throw std::invalid_argument("locus indices are 1-based");
    }
    if (i > 0 && indices_[i] <= indices_[i - 1]) {
      throw std::invalid_argument("locus indices must be strictly increasing");
    }
  }
}

Locus Locus::parse(const std::string& text) {
  std::vector<int> indices;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse locus '" + text + "'");
    }
    while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) {
      ++used;
    }
    if (used != token.size()) {
      throw std::invalid_argument("cannot parse locus '" + text + "'");
    }
    indices.push_back(value);
  }
  if (indices.empty()) {
    throw std::invalid_argument("empty locus '" + text + "'");
  }
  return Locus(std::move(indices));
}

bool Locus::contains(int qubit) const noexcept {
  return std::binary_search(indices_.begin(), indices_.end(), qubit);
}

std::string Locus::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i > 0) out << ",";
    out << indices_[i];
  }
  return out.str();
}

void validate_locus(const Locus& locus, int num_qubits) {
  const int n = locus.size();
  if (n < 1 || n > num_qubits / 2) {
    throw std::invalid_argument("locus size " + std::to_string(n) +
                                " out of range for " + std::to_string(num_qubits) +
                                " qubits (1..floor(N/2))");
  }
  if (locus.indices().back() > num_qubits) {
    throw std::invalid_argument("locus index " +
                                std::to_string(locus.indices().back()) +
                                " exceeds qubit count " + std::to_string(num_qubits));
  }
}

std::vector<Locus> enumerate_loci(int num_qubits, int n) {
  if (num_qubits < 1) {
    throw std::invalid_argument("number of qubits must be at least 1");
  }
  if (n < 1 || n > num_qubits / 2) {
    throw std::invalid_argument("bipartition size n=" + std::to_string(n) +
                                " out of range for N=" + std::to_string(num_qubits));
  }
  const bool halve = (2 * n == num_qubits);
  std::vector<Locus> loci;
  std::vector<int> combo(n);
  for (int i = 0; i < n; ++i) combo[i] = i + 1;
  while (true) {
    if (!halve || combo[0] == 1) {
      loci.emplace_back(combo);
    }
    int i = n - 1;
    while (i >= 0 && combo[i] == num_qubits - (n - 1 - i)) --i;
    if (i < 0) break;
    ++combo[i];
    for (int j = i + 1; j < n; ++j) combo[j] = combo[j - 1] + 1;
  }
  return loci;
}

std::vector<Locus> all_loci(int num_qubits) {
  std::vector<Locus> loci;
  for (int n = 1; n <= num_qubits / 2; ++n) {
    auto level = enumerate_loci(num_qubits, n);
    loci.insert(loci.end(), std::make_move_iterator(level.begin()),
                std::make_move_iterator(level.end()));
  }
  return loci;
}

IndexTables make_index_tables(int num_qubits, const Locus& locus) {
  validate_locus(locus, num_qubits);
  const int n = locus.size();
  const int rest = num_qubits - n;

  // Bit position (from the LSB) of qubit k is N - k; qubit 1 is the MSB.
  std::vector<int> locus_pos(n);
  for (int i = 0; i < n; ++i) locus_pos[i] = num_qubits - locus.indices()[i];
  std::vector<int> rest_pos;
  rest_pos.reserve(rest);
  for (int k = 1; k <= num_qubits; ++k) {
    if (!locus.contains(k)) rest_pos.push_back(num_qubits - k);
  }

  IndexTables tables;
  tables.locus_part.resize(std::size_t{1} << n);
  for (std::size_t x = 0; x < tables.locus_part.size(); ++x) {
    std::size_t bits = 0;
    for (int i = 0; i < n; ++i) {
      bits |= ((x >> (n - 1 - i)) & 1u) << locus_pos[i];
    }
    tables.locus_part[x] = bits;
  }
  tables.complement_part.resize(std::size_t{1} << rest);
  for (std::size_t y = 0; y < tables.complement_part.size(); ++y) {
    std::size_t bits = 0;
    for (int i = 0; i < rest; ++i) {
      bits |= ((y >> (rest - 1 - i)) & 1u) << rest_pos[i];
    }
    tables.complement_part[y] = bits;
  }
  return tables;
}

std::size_t compose_index(int num_qubits, const Locus& locus, std::size_t x,
                          std::size_t y) {
  const auto tables = make_index_tables(num_qubits, locus);
  return tables.locus_part.at(x) | tables.complement_part.at(y);
}

ReducedVectors reduce(const PureState& state, const Locus& locus) {
  const int num_qubits = state.num_qubits();
  const auto tables = make_index_tables(num_qubits, locus);
  const std::size_t l = tables.locus_part.size();
  const std::size_t len = tables.complement_part.size();

  ReducedVectors rv;
  rv.locus = locus;
  rv.num_qubits = num_qubits;
  rv.vector_count = l;
  rv.vector_length = len;
  rv.data.resize(l * len);
  const auto& amps = state.amplitudes();
  for (std::size_t x = 0; x < l; ++x) {
    const std::size_t base = tables.locus_part[x];
    cplx* row = rv.data.data() + x * len;
    for (std::size_t y = 0; y < len; ++y) {
      row[y] = amps[base | tables.complement_part[y]];
    }
  }
  return rv;
}

} // namespace entmon
