#include <cmath>
#include <sstream>

#include "doctest.h"
#include "entmon/bipartition.hpp"
#include "entmon/kernels.hpp"
#include "entmon/state.hpp"

using namespace entmon;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("make_state builds the named amplitude patterns") {
  SUBCASE("ghz N=2") {
    const PureState s = make_state(StateLabel::ghz(2));
    CHECK(s.amplitude(0).real() == doctest::Approx(kInvSqrt2).epsilon(1e-14));
    CHECK(s.amplitude(1) == cplx{0.0, 0.0});
    CHECK(s.amplitude(2) == cplx{0.0, 0.0});
    CHECK(s.amplitude(3).real() == doctest::Approx(kInvSqrt2).epsilon(1e-14));
  }
  SUBCASE("w N=2") {
    const PureState s = make_state(StateLabel::w(2));
    CHECK(s.amplitude(0) == cplx{0.0, 0.0});
    CHECK(s.amplitude(1).real() == doctest::Approx(kInvSqrt2).epsilon(1e-14));
    CHECK(s.amplitude(2).real() == doctest::Approx(kInvSqrt2).epsilon(1e-14));
    CHECK(s.amplitude(3) == cplx{0.0, 0.0});
  }
  SUBCASE("basis index 5 of N=3") {
    const PureState s = make_state(StateLabel::basis(3, 5));
    for (std::size_t x = 0; x < 8; ++x) {
      CHECK(s.amplitude(x) == (x == 5 ? cplx{1.0, 0.0} : cplx{0.0, 0.0}));
    }
  }
  SUBCASE("psi-plus/psi-minus support and signs") {
    const PureState plus = make_state(StateLabel::psi_plus());
    const PureState minus = make_state(StateLabel::psi_minus());
    const double c = 1.0 / std::sqrt(8.0);
    const std::size_t positive[5] = {0, 1, 10, 12, 15};
    const std::size_t signed_terms[3] = {6, 7, 9};
    for (const std::size_t x : positive) {
      CHECK(plus.amplitude(x).real() == doctest::Approx(c));
      CHECK(minus.amplitude(x).real() == doctest::Approx(c));
    }
    for (const std::size_t x : signed_terms) {
      CHECK(plus.amplitude(x).real() == doctest::Approx(c));
      CHECK(minus.amplitude(x).real() == doctest::Approx(-c));
    }
    CHECK(plus.amplitude(2) == cplx{0.0, 0.0});
  }
  SUBCASE("cluster4 support") {
    const PureState s = make_state(StateLabel::cluster4());
    for (const std::size_t x : {0, 5, 10, 15}) {
      CHECK(s.amplitude(x).real() == doctest::Approx(0.5));
    }
    CHECK(s.amplitude(3) == cplx{0.0, 0.0});
  }
}

TEST_CASE("make_state output has unit norm for every label") {
  for (int n = 1; n <= 8; ++n) {
    for (const StateLabel& label :
         {StateLabel::ghz(n), StateLabel::w(n), StateLabel::random(n, 11u + n)}) {
      const PureState s = make_state(label);
      const double norm =
          kernels::norm_sq(s.amplitudes().data(), s.dimension());
      CHECK(std::abs(norm - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("make_state rejects invalid labels") {
  CHECK_THROWS_AS(make_state(StateLabel::ghz(0)), std::invalid_argument);
  CHECK_THROWS_AS(make_state({StateKind::psi_plus, 3, 0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_state(StateLabel::basis(3, 8)), std::invalid_argument);
}

TEST_CASE("normalize scales and rejects the zero vector") {
  CHECK(normalize({{2.0, 0.0}, 0.0, 0.0, 0.0})[0] == cplx{1.0, 0.0});
  const auto half = normalize({{1.0, 0.0}, {1.0, 0.0}, 0.0, 0.0});
  CHECK(half[0].real() == doctest::Approx(kInvSqrt2).epsilon(1e-15));
  CHECK(half[1].real() == doctest::Approx(kInvSqrt2).epsilon(1e-15));
  CHECK_THROWS_AS(normalize({0.0, 0.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("tensor_product stacks qubits of a above qubits of b") {
  const PureState zero = make_state(StateLabel::basis(1, 0));
  const PureState one = make_state(StateLabel::basis(1, 1));
  const PureState zero_one = tensor_product(zero, one);
  CHECK(zero_one.amplitude(1) == cplx{1.0, 0.0});

  const PureState ghz_zero = tensor_product(make_state(StateLabel::ghz(2)), zero);
  CHECK(ghz_zero.amplitude(0).real() == doctest::Approx(kInvSqrt2));
  CHECK(ghz_zero.amplitude(6).real() == doctest::Approx(kInvSqrt2));
  CHECK(ghz_zero.amplitude(7) == cplx{0.0, 0.0});

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const PureState a = haar_random_state(2, seed);
    const PureState b = haar_random_state(3, seed + 100);
    const PureState ab = tensor_product(a, b);
    CHECK(std::abs(kernels::norm_sq(ab.amplitudes().data(), ab.dimension()) -
                   1.0) < 1e-12);
  }
}

TEST_CASE("reducing a product state over the left factor reproduces the right factor") {
  const PureState a = haar_random_state(2, 31);
  const PureState b = haar_random_state(3, 32);
  const PureState ab = tensor_product(a, b);
  const std::size_t db = b.dimension();
  for (const Locus& locus : {Locus({1}), Locus({2}), Locus({1, 2})}) {
    const ReducedVectors rv = reduce(ab, locus);
    // Every reduced vector factors over b: each length-db block is lambda * b.
    for (std::size_t x = 0; x < rv.vector_count; ++x) {
      const auto row = rv.vector(x);
      for (std::size_t block = 0; block < rv.vector_length / db; ++block) {
        const cplx lambda_b0 = row[block * db];
        for (std::size_t y = 0; y < db; ++y) {
          CHECK(std::abs(row[block * db + y] * b.amplitudes()[0] -
                         lambda_b0 * b.amplitudes()[y]) < 1e-12);
        }
      }
    }
    if (locus == Locus({1, 2})) {
      // Exactly the qubits of `a`: V_X = a_X * b entrywise.
      for (std::size_t x = 0; x < rv.vector_count; ++x) {
        for (std::size_t y = 0; y < db; ++y) {
          CHECK(std::abs(rv.vector(x)[y] -
                         a.amplitudes()[x] * b.amplitudes()[y]) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("random states are deterministic per seed") {
  const PureState first = haar_random_state(4, 7);
  const PureState second = haar_random_state(4, 7);
  CHECK(first.amplitudes() == second.amplitudes());
  const PureState other = haar_random_state(4, 8);
  CHECK(first.amplitudes() != other.amplitudes());
}

TEST_CASE("random state amplitudes are uniform on the sphere") {
  // E|a_0|^2 = 1/8 at N=3; |a_0|^2 ~ Beta(1,7), variance 7/(64*9).
  const int draws = 10'000;
  double mean = 0.0;
  for (int i = 0; i < draws; ++i) {
    const PureState s = haar_random_state(3, 5000 + i);
    mean += std::norm(s.amplitude(0));
  }
  mean /= draws;
  const double standard_error = std::sqrt(7.0 / (64.0 * 9.0) / draws);
  CHECK(std::abs(mean - 0.125) < 3.0 * standard_error);
}

TEST_CASE("amplitude files round-trip and report the input norm") {
  const PureState s = make_state(StateLabel::w(3));
  std::stringstream file;
  save_amplitude_file(file, s);
  const LoadedState loaded = load_amplitude_file(file);
  CHECK(loaded.state.num_qubits() == 3);
  CHECK(loaded.state.amplitudes() == s.amplitudes());
  CHECK(loaded.input_norm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("amplitude file parser normalizes and validates") {
  SUBCASE("unnormalized input") {
    std::stringstream file("2\n0 2 0\n3 1 0\n");
    const LoadedState loaded = load_amplitude_file(file);
    CHECK(loaded.input_norm == doctest::Approx(std::sqrt(5.0)));
    CHECK(loaded.state.amplitude(0).real() ==
          doctest::Approx(2.0 / std::sqrt(5.0)));
    CHECK(loaded.state.amplitude(1) == cplx{0.0, 0.0});
  }
  SUBCASE("comments and blank lines are ignored") {
    std::stringstream file("# header\n\n2\n# middle\n0 1 0\n");
    CHECK(load_amplitude_file(file).state.amplitude(0) == cplx{1.0, 0.0});
  }
  SUBCASE("malformed inputs") {
    std::stringstream missing_n("x\n");
    CHECK_THROWS_AS(load_amplitude_file(missing_n), FileFormatError);
    std::stringstream bad_row("2\n0 broken\n");
    CHECK_THROWS_AS(load_amplitude_file(bad_row), FileFormatError);
    std::stringstream out_of_range("2\n4 1 0\n");
    CHECK_THROWS_AS(load_amplitude_file(out_of_range), FileFormatError);
    std::stringstream duplicate("2\n1 1 0\n1 0 1\n");
    CHECK_THROWS_AS(load_amplitude_file(duplicate), FileFormatError);
    std::stringstream zero_vector("2\n0 0 0\n");
    CHECK_THROWS_AS(load_amplitude_file(zero_vector), FileFormatError);
    std::stringstream empty("");
    CHECK_THROWS_AS(load_amplitude_file(empty), FileFormatError);
  }
}
