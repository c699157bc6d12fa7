#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace entmon {

using cplx = std::complex<double>;

/// Normalized pure state of N qubits. Amplitude index X is the decimal of the
/// bit-string b1..bN with qubit 1 as the most significant bit.
class PureState {
 public:
  /// Takes ownership of the amplitudes and scales them to unit norm.
  /// Throws std::invalid_argument for num_qubits < 1, a length other than
  /// 2^num_qubits, or a zero vector.
  PureState(int num_qubits, std::vector<cplx> amplitudes);

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  const std::vector<cplx>& amplitudes() const noexcept { return amplitudes_; }
  cplx amplitude(std::size_t index) const { return amplitudes_.at(index); }

 private:
  int num_qubits_;
  std::vector<cplx> amplitudes_;
};

/// Scales a raw amplitude vector to unit norm.
/// Throws std::invalid_argument on the zero vector.
std::vector<cplx> normalize(std::vector<cplx> amplitudes);

enum class StateKind { ghz, w, psi_plus, psi_minus, cluster4, basis, random };

struct StateLabel {
  StateKind kind = StateKind::ghz;
  int num_qubits = 0;
  std::uint64_t basis_index = 0;  // StateKind::basis only
  std::uint64_t seed = 0;         // StateKind::random only

  static StateLabel ghz(int num_qubits);
  static StateLabel w(int num_qubits);
  static StateLabel psi_plus();
  static StateLabel psi_minus();
  static StateLabel cluster4();
  static StateLabel basis(int num_qubits, std::uint64_t index);
  static StateLabel random(int num_qubits, std::uint64_t seed);

  std::string to_string() const;
};

/// Builds the named state. The four-qubit labels (psi_plus, psi_minus,
/// cluster4) require num_qubits == 4; basis requires index < 2^N; random is
/// drawn uniformly on the unit sphere and is deterministic per seed.
PureState make_state(const StateLabel& label);

/// Uniformly random state on the 2^N sphere (independent complex Gaussian
/// amplitudes, then normalization).
PureState haar_random_state(int num_qubits, std::uint64_t seed);
PureState haar_random_state(int num_qubits, std::mt19937_64& rng);

/// (Na+Nb)-qubit product state c_{XY} = a_X b_Y; the qubits of `a` occupy the
/// high-significance positions.
PureState tensor_product(const PureState& a, const PureState& b);

// --- amplitude file format --------------------------------------------------
// line 1:           N
// following lines:  X re im     (decimal basis index, real part, imag part)
// Omitted indices are zero; blank lines and lines starting with '#' are
// ignored. The loader normalizes and reports the pre-normalization norm.

struct FileFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LoadedState {
  PureState state;
  double input_norm;  ///< Euclidean norm of the amplitudes as written in the file.
};

LoadedState load_amplitude_file(std::istream& in);
LoadedState load_amplitude_file(const std::string& path);
void save_amplitude_file(std::ostream& out, const PureState& state);
void save_amplitude_file(const std::string& path, const PureState& state);

} // namespace entmon
