#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "argcurv/families.hpp"
#include "argcurv/spectra.hpp"
#include "argcurv/sym_matrix.hpp"
#include "support.hpp"

using namespace argcurv;

static constexpr double kTol = 1e-8;
static const double kPi = std::acos(-1.0);

static void expect_spectrum(const Spectrum& got, const std::vector<double>& want) {
  REQUIRE(got.eigenvalues.size() == want.size());
  for (size_t i = 0; i < want.size(); ++i)
    CHECK(got.eigenvalues[i] == doctest::Approx(want[i]).epsilon(kTol));
}

TEST_CASE("adjacency spectra of small named graphs") {
  expect_spectrum(adjacency_spectrum(complete(3)), {-1, -1, 2});

  double golden = 2 * std::cos(2 * kPi / 5);        //  0.618...
  double anti = 2 * std::cos(4 * kPi / 5);          // -1.618...
  expect_spectrum(adjacency_spectrum(cycle(5)), {anti, anti, golden, golden, 2});

  expect_spectrum(adjacency_spectrum(hypercube(3)), {-3, -1, -1, -1, 1, 1, 1, 3});

  std::vector<double> pet(10, 1.0);
  std::fill(pet.begin(), pet.begin() + 4, -2.0);
  pet.back() = 3.0;
  expect_spectrum(adjacency_spectrum(petersen()), pet);
}

TEST_CASE("johnson(8,4) spectrum") {
  Spectrum s = adjacency_spectrum(johnson(8, 4));
  REQUIRE(s.eigenvalues.size() == 70);
  CHECK(theta_top(s) == doctest::Approx(16).epsilon(kTol));
  CHECK(theta_bottom(s) == doctest::Approx(-4).epsilon(kTol));
  int bottom_mult = 0;
  for (double ev : s.eigenvalues)
    if (std::abs(ev - (-4)) < 1e-6) ++bottom_mult;
  CHECK(bottom_mult == 14);
  // eigenvalues are (4-j)^2 - j with multiplicities 1, 7, 20, 28, 14
  std::vector<double> expected;
  int mult[] = {14, 28, 20, 7, 1};
  double vals[] = {-4, -2, 2, 8, 16};
  for (int k = 0; k < 5; ++k) expected.insert(expected.end(), mult[k], vals[k]);
  expect_spectrum(s, expected);
}

TEST_CASE("eigensolve reconstructs random symmetric matrices") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int trial = 0; trial < 5; ++trial) {
    int n = 3 + static_cast<int>(rng() % 8);
    SymMatrix m(n);
    double trace = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        double v = u(rng);
        m.set(i, j, v);
        if (i == j) trace += v;
      }
    EigenResult res = eigensolve(m);
    CHECK(res.spectrum.residual < 1e-9 * (1 + m.frobenius()));
    double evsum = 0;
    for (double ev : res.spectrum.eigenvalues) evsum += ev;
    CHECK(evsum == doctest::Approx(trace).epsilon(1e-9));
    CHECK(std::is_sorted(res.spectrum.eigenvalues.begin(), res.spectrum.eigenvalues.end()));

    // A v = lambda v for every returned pair, and the vectors are orthonormal
    for (int k = 0; k < n; ++k) {
      const auto& v = res.vectors[k];
      double norm = 0;
      for (int i = 0; i < n; ++i) norm += v[i] * v[i];
      CHECK(norm == doctest::Approx(1.0).epsilon(1e-9));
      for (int i = 0; i < n; ++i) {
        double av = 0;
        for (int j = 0; j < n; ++j) av += m.at(i, j) * v[j];
        CHECK(av == doctest::Approx(res.spectrum.eigenvalues[k] * v[i]).epsilon(1e-7));
      }
    }
  }
}

TEST_CASE("local spectra of vertex links") {
  // icosahedron links are 5-cycles
  Spectrum ico = local_spectrum(icosahedron(), 0);
  double golden = 2 * std::cos(2 * kPi / 5);
  double anti = 2 * std::cos(4 * kPi / 5);
  expect_spectrum(ico, {anti, anti, golden, golden, 2});

  // rook(4) links are two triangles: eigenvalues {2, 2, -1, -1, -1, -1}
  expect_spectrum(local_spectrum(rook(4), 0), {-1, -1, -1, -1, 2, 2});

  // shrikhande links are 6-cycles: 2cos(pi k / 3)
  expect_spectrum(local_spectrum(shrikhande(), 0), {-2, -1, -1, 1, 1, 2});

  // hypercube links are empty graphs
  expect_spectrum(local_spectrum(hypercube(4), 0), {0, 0, 0, 0});
}

TEST_CASE("spectrum accessors and corpus sanity") {
  for (const auto& e : testsupport::full_corpus()) {
    CAPTURE(e.name);
    Spectrum s = adjacency_spectrum(e.g);
    int d = *e.g.regular_degree();
    CHECK(theta_top(s) == doctest::Approx(d).epsilon(kTol));
    CHECK(theta_second(s) < d - 1e-6);  // connected: top eigenvalue simple
    bool bip = e.g.bipartite_classes().has_value();
    CHECK((std::abs(theta_bottom(s) + d) < 1e-7) == bip);
  }
}
