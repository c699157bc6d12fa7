#include "entmon/transforms.hpp"

#include <cmath>
#include <stdexcept>

#include "entmon/kernels.hpp"
#include "entmon/monotones.hpp"

namespace entmon {

namespace {

void check_unitary(const Eigen::MatrixXcd& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(what) + " must be square");
  }
  const Eigen::MatrixXcd residual =
      m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  if (residual.cwiseAbs().maxCoeff() > kUnitaryTol) {
    throw std::invalid_argument(std::string(what) + " is not unitary");
  }
}

void check_target(int target, int num_qubits) {
  if (target < 1 || target > num_qubits) {
    throw std::invalid_argument("target qubit out of range");
  }
}

// Butterfly over the target qubit's bit; valid for any 2x2 matrix, so the
// POVM elements reuse it.
void apply_single_qubit_matrix(std::vector<cplx>& amps, int num_qubits,
                               int target, const Eigen::Matrix2cd& m) {
  const cplx coeffs[4] = {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
  const std::size_t stride = std::size_t{1} << (num_qubits - target);
  for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
    kernels::apply_pair_rotation(amps.data() + base, amps.data() + base + stride,
                                 coeffs, stride);
  }
}

} // namespace

LocalUnitary::LocalUnitary(int target, Eigen::Matrix2cd matrix)
    : target_(target), matrix_(std::move(matrix)) {
  if (target_ < 1) {
    throw std::invalid_argument("target qubit out of range");
  }
  check_unitary(matrix_, "local unitary");
}

PureState apply_local_unitary(const PureState& state, const LocalUnitary& lu) {
  check_target(lu.target(), state.num_qubits());
  std::vector<cplx> amps = state.amplitudes();
  apply_single_qubit_matrix(amps, state.num_qubits(), lu.target(), lu.matrix());
  return PureState(state.num_qubits(), std::move(amps));
}

PureState apply_subspace_unitary(const PureState& state, const Locus& locus,
                                 const Eigen::MatrixXcd& matrix) {
  const auto tables = make_index_tables(state.num_qubits(), locus);
  const std::size_t l = tables.locus_part.size();
  if (static_cast<std::size_t>(matrix.rows()) != l) {
    throw std::invalid_argument("matrix dimension does not match locus size");
  }
  check_unitary(matrix, "subspace unitary");
  std::vector<cplx> amps = state.amplitudes();
  Eigen::VectorXcd column(l);
  for (const std::size_t rest : tables.complement_part) {
    for (std::size_t x = 0; x < l; ++x) {
      column(x) = amps[tables.locus_part[x] | rest];
    }
    column = matrix * column;
    for (std::size_t x = 0; x < l; ++x) {
      amps[tables.locus_part[x] | rest] = column(x);
    }
  }
  return PureState(state.num_qubits(), std::move(amps));
}

Eigen::MatrixXcd haar_unitary(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return haar_unitary(dim, rng);
}

Eigen::MatrixXcd haar_unitary(int dim, std::mt19937_64& rng) {
  if (dim < 1) {
    throw std::invalid_argument("unitary dimension must be at least 1");
  }
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd ginibre(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      ginibre(r, c) = cplx{re, im};
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fixing the R-diagonal phases makes the distribution Haar rather than
  // merely unitary.
  for (int c = 0; c < dim; ++c) {
    const cplx d = r(c, c);
    const double mag = std::abs(d);
    q.col(c) *= (mag > 0.0) ? d / mag : cplx{1.0, 0.0};
  }
  return q;
}

TwoOutcomePovm::TwoOutcomePovm(int target, double a, double b,
                               Eigen::Matrix2cd v, Eigen::Matrix2cd u1,
                               Eigen::Matrix2cd u2)
    : target_(target), a_(a), b_(b), v_(std::move(v)), u1_(std::move(u1)),
      u2_(std::move(u2)) {
  if (target_ < 1) {
    throw std::invalid_argument("target qubit out of range");
  }
  if (a_ < 0.0 || a_ > 1.0 || b_ < 0.0 || b_ > 1.0) {
    throw std::invalid_argument("POVM singular values must lie in [0, 1]");
  }
  check_unitary(v_, "POVM factor V");
  check_unitary(u1_, "POVM factor U1");
  check_unitary(u2_, "POVM factor U2");
  const Eigen::Matrix2cd a1 = element(0);
  const Eigen::Matrix2cd a2 = element(1);
  const Eigen::Matrix2cd completeness =
      a1.adjoint() * a1 + a2.adjoint() * a2 - Eigen::Matrix2cd::Identity();
  if (completeness.cwiseAbs().maxCoeff() > kUnitaryTol) {
    throw std::invalid_argument("POVM elements do not resolve the identity");
  }
}

TwoOutcomePovm TwoOutcomePovm::sample(int target, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const double a = uniform(rng);
  const double b = uniform(rng);
  Eigen::Matrix2cd u1 = haar_unitary(2, rng);
  Eigen::Matrix2cd u2 = haar_unitary(2, rng);
  Eigen::Matrix2cd v = haar_unitary(2, rng);
  return TwoOutcomePovm(target, a, b, std::move(v), std::move(u1), std::move(u2));
}

Eigen::Matrix2cd TwoOutcomePovm::element(int i) const {
  Eigen::Vector2d diag;
  if (i == 0) {
    diag << a_, b_;
    return u1_ * diag.asDiagonal() * v_;
  }
  if (i == 1) {
    diag << std::sqrt(1.0 - a_ * a_), std::sqrt(1.0 - b_ * b_);
    return u2_ * diag.asDiagonal() * v_;
  }
  throw std::invalid_argument("POVM element index must be 0 or 1");
}

std::array<PovmOutcome, 2> apply_povm(const PureState& state,
                                      const TwoOutcomePovm& povm) {
  check_target(povm.target(), state.num_qubits());
  std::array<PovmOutcome, 2> outcomes;
  double total = 0.0;
  for (int i = 0; i < 2; ++i) {
    std::vector<cplx> amps = state.amplitudes();
    apply_single_qubit_matrix(amps, state.num_qubits(), povm.target(),
                              povm.element(i));
    const double p = kernels::norm_sq(amps.data(), amps.size());
    total += p;
    outcomes[i].probability = p;
    if (p < kDegenerateProbability) {
      outcomes[i].degenerate = true;
    } else {
      kernels::scale(amps.data(), 1.0 / std::sqrt(p), amps.size());
      outcomes[i].state.emplace(state.num_qubits(), std::move(amps));
    }
  }
  // The constructor admits POVMs with completeness residual up to 1e-12, so
  // the branch probabilities of such a POVM may be off by a few parts in 1e12.
  if (std::abs(total - 1.0) > 5e-12) {
    throw std::runtime_error("POVM branch probabilities do not sum to one");
  }
  if (outcomes[0].degenerate && outcomes[1].degenerate) {
    throw std::runtime_error("both POVM branches are degenerate");
  }
  return outcomes;
}

MonotonicityTrial monotonicity_trial(const PureState& state, const Locus& locus,
                                     const TwoOutcomePovm& povm, double nu,
                                     double slack) {
  if (nu <= 0.0 || nu > 1.0) {
    throw std::invalid_argument("nu must lie in (0, 1]");
  }
  MonotonicityTrial trial;
  trial.rhs = std::pow(d_monotone(state, locus), nu);
  const auto outcomes = apply_povm(state, povm);
  for (const auto& outcome : outcomes) {
    if (outcome.degenerate) continue;
    trial.lhs +=
        outcome.probability * std::pow(d_monotone(*outcome.state, locus), nu);
  }
  trial.ok = trial.lhs <= trial.rhs + slack;
  return trial;
}

double povm_forefactor(const TwoOutcomePovm& povm, double p1, double p2,
                       double nu) {
  const double a2 = povm.a() * povm.a();
  const double b2 = povm.b() * povm.b();
  double factor = 0.0;
  if (p1 >= kDegenerateProbability) {
    factor += p1 * std::pow(a2 * b2 / (p1 * p1), nu);
  }
  if (p2 >= kDegenerateProbability) {
    factor += p2 * std::pow((1.0 - a2) * (1.0 - b2) / (p2 * p2), nu);
  }
  return factor;
}

} // namespace entmon
