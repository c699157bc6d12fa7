#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "entmon/state.hpp"

namespace entmon {

/// Strictly increasing 1-based qubit indices naming one side of a bipartition.
class Locus {
 public:
  Locus() = default;
  explicit Locus(std::vector<int> indices);

  /// Parses comma-separated 1-based indices, e.g. "1,3".
  static Locus parse(const std::string& text);

  const std::vector<int>& indices() const noexcept { return indices_; }
  int size() const noexcept { return static_cast<int>(indices_.size()); }
  bool contains(int qubit) const noexcept;
  std::string to_string() const;

  friend bool operator==(const Locus&, const Locus&) = default;
  friend auto operator<=>(const Locus&, const Locus&) = default;

 private:
  std::vector<int> indices_;
};

/// Throws std::invalid_argument unless 1 <= n <= floor(N/2) and all indices
/// lie in 1..N.
void validate_locus(const Locus& locus, int num_qubits);

/// All C(N,n) size-n loci in lexicographic order. When n == N/2 (N even) the
/// conjugate of each locus names the same bipartition, so only the C(N,n)/2
/// loci containing qubit 1 are returned.
std::vector<Locus> enumerate_loci(int num_qubits, int n);

/// enumerate_loci for every admissible n, ordered by (n, lexicographic).
/// Empty for a single qubit.
std::vector<Locus> all_loci(int num_qubits);

/// The 2^n vectors produced by projecting the locus qubits onto each
/// bit-pattern X and deleting them. Row-major: row X has length 2^(N-n), and
/// component Y addresses the remaining qubits in their original order.
struct ReducedVectors {
  Locus locus;
  int num_qubits = 0;            ///< N of the source state
  std::size_t vector_count = 0;  ///< l = 2^n
  std::size_t vector_length = 0; ///< 2^(N-n)
  std::vector<cplx> data;

  std::span<const cplx> vector(std::size_t x) const {
    return {data.data() + x * vector_length, vector_length};
  }
};

/// Precomputed index scaffolding for one bipartition: a full-state index is
/// locus_part[X] | complement_part[Y].
struct IndexTables {
  std::vector<std::size_t> locus_part;       ///< size 2^n
  std::vector<std::size_t> complement_part;  ///< size 2^(N-n)
};

IndexTables make_index_tables(int num_qubits, const Locus& locus);

/// Single-call form of the table lookup, for tests and one-off indexing.
std::size_t compose_index(int num_qubits, const Locus& locus, std::size_t x,
                          std::size_t y);

ReducedVectors reduce(const PureState& state, const Locus& locus);

} // namespace entmon
