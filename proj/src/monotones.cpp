#include "entmon/monotones.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "detail/parallel.hpp"
#include "detail/small_det.hpp"
#include "entmon/kernels.hpp"

namespace entmon {

namespace {

Eigen::MatrixXcd gram_matrix(const ReducedVectors& rv) {
  const std::size_t l = rv.vector_count;
  Eigen::MatrixXcd g(l, l);
  for (std::size_t x = 0; x < l; ++x) {
    const cplx* row_x = rv.data.data() + x * rv.vector_length;
    for (std::size_t y = x; y < l; ++y) {
      const cplx* row_y = rv.data.data() + y * rv.vector_length;
      const cplx inner = kernels::cdot(row_x, row_y, rv.vector_length);
      g(x, y) = inner;
      g(y, x) = std::conj(inner);
    }
  }
  return g;
}

} // namespace

SchmidtSpectrum schmidt_spectrum(const ReducedVectors& rv) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram_matrix(rv),
                                                         Eigen::EigenvaluesOnly);
  SchmidtSpectrum spectrum;
  spectrum.weights.assign(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + rv.vector_count);
  for (double& w : spectrum.weights) {
    if (w < kSpectrumZeroTol) w = 0.0;
  }
  std::sort(spectrum.weights.begin(), spectrum.weights.end(), std::greater<>());
  return spectrum;
}

double d_monotone_schmidt(const SchmidtSpectrum& spectrum) {
  const std::size_t l = spectrum.size();
  if (l < 2) {
    throw std::invalid_argument("spectrum must have at least two weights");
  }
  double log_product = 0.0;
  for (double w : spectrum.weights) {
    if (w <= 0.0) return 0.0;
    log_product += std::log(w);
  }
  static const double kLogProductFloor = std::log(1e-300);
  if (log_product < kLogProductFloor) return 0.0;
  const double ld = static_cast<double>(l);
  return ld * ld * std::exp((2.0 / ld) * log_product);
}

double d_monotone_minors(const ReducedVectors& rv, std::uint64_t minor_cap) {
  const std::size_t l = rv.vector_count;
  const std::size_t len = rv.vector_length;
  if (l > len) {
    throw std::invalid_argument("reduction has more vectors than components");
  }
  const int k = static_cast<int>(l);
  double sum = 0.0;
  if (detail::binomial_capped(len, l, minor_cap) <= minor_cap) {
    std::vector<std::size_t> cols(l);
    std::iota(cols.begin(), cols.end(), 0);
    std::vector<cplx> minor(l * l);
    while (true) {
      for (std::size_t r = 0; r < l; ++r) {
        const cplx* row = rv.data.data() + r * len;
        for (std::size_t c = 0; c < l; ++c) {
          minor[r * l + c] = row[cols[c]];
        }
      }
      sum += std::norm(detail::det_inplace(minor.data(), k));
      // next column combination; cols[i] tops out at len - l + i
      int i = k - 1;
      while (i >= 0 && cols[i] == len - (l - i)) --i;
      if (i < 0) break;
      ++cols[i];
      for (int j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
  } else {
    // Cauchy-Binet: the minor-square sum equals det(G) for G = M M^dagger.
    Eigen::MatrixXcd g = gram_matrix(rv);
    std::vector<cplx> buffer(g.data(), g.data() + l * l);
    sum = std::max(0.0, detail::det_inplace(buffer.data(), k).real());
  }
  const double ld = static_cast<double>(l);
  return ld * ld * std::pow(sum, 2.0 / ld);
}

double linear_entropy(const SchmidtSpectrum& spectrum) {
  const std::size_t l = spectrum.size();
  if (l < 2) {
    throw std::invalid_argument("spectrum must have at least two weights");
  }
  double purity = 0.0;
  for (double w : spectrum.weights) purity += w * w;
  const double ld = static_cast<double>(l);
  return ld / (ld - 1.0) * (1.0 - purity);
}

double d1_direct(const ReducedVectors& rv) {
  if (rv.vector_count != 2) {
    throw std::invalid_argument("d1_direct requires a single-qubit locus");
  }
  const cplx* v0 = rv.data.data();
  const cplx* v1 = rv.data.data() + rv.vector_length;
  double sum = 0.0;
  for (std::size_t x = 0; x < rv.vector_length; ++x) {
    for (std::size_t y = x + 1; y < rv.vector_length; ++y) {
      sum += std::norm(v0[x] * v1[y] - v0[y] * v1[x]);
    }
  }
  return 4.0 * sum;
}

double d_monotone(const PureState& state, const Locus& locus) {
  return d_monotone_schmidt(schmidt_spectrum(reduce(state, locus)));
}

double q1_measure(const PureState& state) {
  const int n = state.num_qubits();
  if (n < 2) return 0.0;
  double total = 0.0;
  for (int k = 1; k <= n; ++k) {
    total += d_monotone(state, Locus({k}));
  }
  return total / n;
}

MonotoneReport full_report(const PureState& state, std::string state_name,
                           const ReportOptions& options) {
  MonotoneReport report;
  report.state_name = std::move(state_name);
  report.num_qubits = state.num_qubits();

  std::vector<Locus> loci;
  for (int n = 1; n <= state.num_qubits() / 2; ++n) {
    if (options.n_filter != 0 && n != options.n_filter) continue;
    for (auto& locus : enumerate_loci(state.num_qubits(), n)) {
      if (!options.locus_filter.empty() &&
          std::find(options.locus_filter.begin(), options.locus_filter.end(),
                    locus) == options.locus_filter.end()) {
        continue;
      }
      loci.push_back(std::move(locus));
    }
  }

  report.measures.resize(loci.size());
  detail::parallel_for(loci.size(), [&](std::size_t i) {
    const ReducedVectors rv = reduce(state, loci[i]);
    SchmidtSpectrum spectrum = schmidt_spectrum(rv);
    LocusMeasure& m = report.measures[i];
    m.locus = loci[i];
    m.n = loci[i].size();
    m.d_value = d_monotone_schmidt(spectrum);
    m.s_value = linear_entropy(spectrum);
    if (options.minor_spot_check &&
        detail::binomial_capped(rv.vector_length, rv.vector_count,
                                options.spot_check_cap) <= options.spot_check_cap) {
      const double via_minors = d_monotone_minors(rv, options.minor_cap);
      if (std::abs(via_minors - m.d_value) > 1e-8 * std::max(1.0, m.d_value)) {
        std::ostringstream message;
        message << "minor/Schmidt route mismatch at locus " << loci[i].to_string()
                << ": " << via_minors << " vs " << m.d_value;
        throw std::runtime_error(message.str());
      }
    }
    m.schmidt = std::move(spectrum);
  });
  report.q1 = q1_measure(state);
  return report;
}

} // namespace entmon
