#include "entmon/state.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "entmon/kernels.hpp"

namespace entmon {

namespace {

// 2^30 amplitudes is already 16 GiB; anything larger is a caller bug.
constexpr int kMaxQubitsHard = 30;

void check_qubit_count(int num_qubits) {
  if (num_qubits < 1) {
    throw std::invalid_argument("number of qubits must be at least 1");
  }
  if (num_qubits > kMaxQubitsHard) {
    throw std::invalid_argument("number of qubits exceeds the hard limit of 30");
  }
}

std::size_t dimension_of(int num_qubits) {
  return std::size_t{1} << num_qubits;
}

} // namespace

std::vector<cplx> normalize(std::vector<cplx> amplitudes) {
  const double n2 = kernels::norm_sq(amplitudes.data(), amplitudes.size());
  if (n2 == 0.0) {
    throw std::invalid_argument("cannot normalize the zero vector");
  }
  // Inputs already unit to 1e-12 are kept bit-for-bit; rescaling them would
  // only churn the last ulp.
  if (std::abs(n2 - 1.0) > 1e-12) {
    kernels::scale(amplitudes.data(), 1.0 / std::sqrt(n2), amplitudes.size());
  }
  return amplitudes;
}

PureState::PureState(int num_qubits, std::vector<cplx> amplitudes)
    : num_qubits_(num_qubits) {
  check_qubit_count(num_qubits);
  if (amplitudes.size() != dimension_of(num_qubits)) {
    throw std::invalid_argument("amplitude vector length must be 2^num_qubits");
  }
  amplitudes_ = normalize(std::move(amplitudes));
}

StateLabel StateLabel::ghz(int num_qubits) {
  return {StateKind::ghz, num_qubits, 0, 0};
}

StateLabel StateLabel::w(int num_qubits) {
  return {StateKind::w, num_qubits, 0, 0};
}

StateLabel StateLabel::psi_plus() { return {StateKind::psi_plus, 4, 0, 0}; }

StateLabel StateLabel::psi_minus() { return {StateKind::psi_minus, 4, 0, 0}; }

StateLabel StateLabel::cluster4() { return {StateKind::cluster4, 4, 0, 0}; }

StateLabel StateLabel::basis(int num_qubits, std::uint64_t index) {
  return {StateKind::basis, num_qubits, index, 0};
}

StateLabel StateLabel::random(int num_qubits, std::uint64_t seed) {
  return {StateKind::random, num_qubits, 0, seed};
}

std::string StateLabel::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case StateKind::ghz:
      out << "ghz(" << num_qubits << ")";
      break;
    case StateKind::w:
      out << "w(" << num_qubits << ")";
      break;
    case StateKind::psi_plus:
      out << "psi-plus(4)";
      break;
    case StateKind::psi_minus:
      out << "psi-minus(4)";
      break;
    case StateKind::cluster4:
      out << "cluster4(4)";
      break;
    case StateKind::basis:
      out << "basis(" << num_qubits << ",index=" << basis_index << ")";
      break;
    case StateKind::random:
      out << "random(" << num_qubits << ",seed=" << seed << ")";
      break;
  }
  return out.str();
}

namespace {

PureState make_psi_pair(double sign) {
  // (|0000> + |0001> s|0110> s|0111> s|1001> + |1010> + |1100> + |1111>)/sqrt(8)
  std::vector<cplx> amps(16, 0.0);
  const double c = 1.0 / std::sqrt(8.0);
  amps[0] = c;
  amps[1] = c;
  amps[6] = sign * c;
  amps[7] = sign * c;
  amps[9] = sign * c;
  amps[10] = c;
  amps[12] = c;
  amps[15] = c;
  return PureState(4, std::move(amps));
}

} // namespace

PureState make_state(const StateLabel& label) {
  check_qubit_count(label.num_qubits);
  const int n = label.num_qubits;
  const std::size_t dim = dimension_of(n);
  switch (label.kind) {
    case StateKind::ghz: {
      std::vector<cplx> amps(dim, 0.0);
      const double c = 1.0 / std::sqrt(2.0);
      amps.front() = c;
      amps.back() = c;
      return PureState(n, std::move(amps));
    }
    case StateKind::w: {
      std::vector<cplx> amps(dim, 0.0);
      const double c = 1.0 / std::sqrt(static_cast<double>(n));
      for (int j = 1; j <= n; ++j) {
        amps[std::size_t{1} << (n - j)] = c;  // single excitation on qubit j
      }
      return PureState(n, std::move(amps));
    }
    case StateKind::psi_plus:
    case StateKind::psi_minus: {
      if (n != 4) {
        throw std::invalid_argument("psi-plus/psi-minus are four-qubit states");
      }
      return make_psi_pair(label.kind == StateKind::psi_plus ? 1.0 : -1.0);
    }
    case StateKind::cluster4: {
      if (n != 4) {
        throw std::invalid_argument("cluster4 is a four-qubit state");
      }
      std::vector<cplx> amps(16, 0.0);
      amps[0] = amps[5] = amps[10] = amps[15] = 0.5;
      return PureState(4, std::move(amps));
    }
    case StateKind::basis: {
      if (label.basis_index >= dim) {
        throw std::invalid_argument("basis index out of range for qubit count");
      }
      std::vector<cplx> amps(dim, 0.0);
      amps[label.basis_index] = 1.0;
      return PureState(n, std::move(amps));
    }
    case StateKind::random:
      return haar_random_state(n, label.seed);
  }
  throw std::invalid_argument("unknown state label");
}

PureState haar_random_state(int num_qubits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return haar_random_state(num_qubits, rng);
}

PureState haar_random_state(int num_qubits, std::mt19937_64& rng) {
  check_qubit_count(num_qubits);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cplx> amps(dimension_of(num_qubits));
  for (auto& a : amps) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    a = {re, im};
  }
  return PureState(num_qubits, std::move(amps));
}

PureState tensor_product(const PureState& a, const PureState& b) {
  const int n = a.num_qubits() + b.num_qubits();
  check_qubit_count(n);
  std::vector<cplx> amps(dimension_of(n));
  const std::size_t db = b.dimension();
  for (std::size_t x = 0; x < a.dimension(); ++x) {
    const cplx ax = a.amplitudes()[x];
    for (std::size_t y = 0; y < db; ++y) {
      amps[x * db + y] = ax * b.amplitudes()[y];
    }
  }
  return PureState(n, std::move(amps));
}

LoadedState load_amplitude_file(std::istream& in) {
  std::string line;
  int num_qubits = -1;
  std::vector<cplx> amps;
  std::vector<bool> seen;
  std::size_t dim = 0;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (num_qubits < 0) {
      if (!(fields >> num_qubits) || num_qubits < 1 || num_qubits > kMaxQubitsHard) {
        throw FileFormatError("line " + std::to_string(line_no) +
                              ": expected the qubit count on the first data line");
      }
      dim = dimension_of(num_qubits);
      amps.assign(dim, 0.0);
      seen.assign(dim, false);
      continue;
    }
    std::uint64_t index = 0;
    double re = 0.0, im = 0.0;
    if (!(fields >> index >> re >> im)) {
      throw FileFormatError("line " + std::to_string(line_no) +
                            ": expected `index re im`");
    }
    if (index >= dim) {
      throw FileFormatError("line " + std::to_string(line_no) +
                            ": index " + std::to_string(index) +
                            " out of range for " + std::to_string(num_qubits) +
                            " qubits");
    }
    if (seen[index]) {
      throw FileFormatError("line " + std::to_string(line_no) +
                            ": duplicate index " + std::to_string(index));
    }
    seen[index] = true;
    amps[index] = {re, im};
  }
  if (num_qubits < 0) {
    throw FileFormatError("empty amplitude file");
  }
  const double norm = std::sqrt(kernels::norm_sq(amps.data(), amps.size()));
  if (norm == 0.0) {
    throw FileFormatError("amplitude file describes the zero vector");
  }
  return {PureState(num_qubits, std::move(amps)), norm};
}

LoadedState load_amplitude_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw FileFormatError("cannot open amplitude file: " + path);
  }
  return load_amplitude_file(in);
}

void save_amplitude_file(std::ostream& out, const PureState& state) {
  out << state.num_qubits() << "\n";
  out << std::setprecision(17);
  const auto& amps = state.amplitudes();
  for (std::size_t x = 0; x < amps.size(); ++x) {
    if (amps[x] != cplx{0.0, 0.0}) {
      out << x << " " << amps[x].real() << " " << amps[x].imag() << "\n";
    }
  }
}

void save_amplitude_file(const std::string& path, const PureState& state) {
  std::ofstream out(path);
  if (!out) {
    throw FileFormatError("cannot open output file: " + path);
  }
  save_amplitude_file(out, state);
}

} // namespace entmon
