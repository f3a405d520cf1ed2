#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "argcurv/rational.hpp"

using argcurv::Rational;

TEST_CASE("rational normalization") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(1, -2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(3, -9).num() == -1);
  CHECK(Rational(3, -9).den() == 3);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic and comparisons") {
  Rational a(1, 6), b(1, 10);
  CHECK(a + b == Rational(4, 15));
  CHECK(a - b == Rational(1, 15));
  CHECK(a * b == Rational(1, 60));
  CHECK(a / b == Rational(5, 3));
  CHECK(-a == Rational(-1, 6));
  CHECK(a < Rational(1, 5));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 3) > Rational(2));
  CHECK(Rational(2, 3) <= Rational(2, 3));
  CHECK(abs(Rational(-5, 4)) == Rational(5, 4));
}

TEST_CASE("rational randomized arithmetic agrees with doubles") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 500; ++it) {
    long long pn = static_cast<long long>(rng() % 2001) - 1000;
    long long pd = 1 + static_cast<long long>(rng() % 1000);
    long long qn = static_cast<long long>(rng() % 2001) - 1000;
    long long qd = 1 + static_cast<long long>(rng() % 1000);
    Rational p(pn, pd), q(qn, qd);
    double dp = double(pn) / pd, dq = double(qn) / qd;
    CHECK((p + q).to_double() == doctest::Approx(dp + dq).epsilon(1e-12));
    CHECK((p * q).to_double() == doctest::Approx(dp * dq).epsilon(1e-12));
    if (std::abs(dp - dq) > 1e-9) CHECK((p < q) == (dp < dq));
  }
}

TEST_CASE("rational string form is always p/q") {
  CHECK(Rational(0).str() == "0/1");
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(-3, 6).str() == "-1/2");
  CHECK(Rational(4).str() == "4/1");
}

TEST_CASE("rational overflow is detected") {
  long long big = std::numeric_limits<long long>::max() / 2;
  Rational a(big, 1), b(big + 2, 1);  // sum exceeds the representable range
  CHECK_THROWS_AS(a * b, std::overflow_error);
  CHECK_THROWS_AS(a + b, std::overflow_error);
  CHECK(a + Rational(1) == Rational(big + 1));  // still fits
}

TEST_CASE("ceil_div") {
  CHECK(argcurv::ceil_div(6, 3) == 2);
  CHECK(argcurv::ceil_div(7, 3) == 3);
  CHECK(argcurv::ceil_div(0, 5) == 0);
  CHECK(argcurv::ceil_div(1, 5) == 1);
  CHECK_THROWS_AS(argcurv::ceil_div(1, 0), std::domain_error);
}
