#include <doctest.h>

#include <cmath>
#include <numbers>

#include "jcm/error.hpp"
#include "jcm/specfun.hpp"
#include "oracles/reference_values.hpp"
#include "oracles/series_oracles.hpp"

using namespace jcm::specfun;

namespace {

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("hermite at the origin") {
  CHECK(hermite_at_zero(0) == 1.0);
  CHECK(hermite_at_zero(1) == 0.0);
  CHECK(hermite_at_zero(4) == 12.0);
  for (int n = 0; n <= 30; ++n) {
    CHECK(hermite_at_zero(n) == doctest::Approx(static_cast<double>(oracle::hermite_zero_explicit(n))).epsilon(1e-15));
  }
  CHECK_THROWS_AS(hermite_at_zero(-1), jcm::InvalidArgument);
}

TEST_CASE("log hermite matches direct value and survives large n") {
  for (const int n : {0, 2, 6, 10, 40}) {
    const SignedLog l = log_hermite_at_zero(n);
    CHECK(l.sign * std::exp(l.log_abs) == doctest::Approx(hermite_at_zero(n)).epsilon(1e-13));
  }
  CHECK(log_hermite_at_zero(7).sign == 0);
  const SignedLog big = log_hermite_at_zero(1000);
  CHECK(std::isfinite(big.log_abs));
  CHECK(big.sign == 1);  // 500 is even
}

TEST_CASE("hermite zero weights") {
  const std::vector<double> table = hermite_zero_weights(60);
  for (int n = 0; n <= 60; ++n) {
    const double want = static_cast<double>(oracle::zero_weight_explicit(n));
    CHECK(table[static_cast<std::size_t>(n)] == doctest::Approx(want).epsilon(1e-13));
    CHECK(hermite_zero_weight(n) == doctest::Approx(want).epsilon(1e-12));
  }
  CHECK(hermite_zero_weight(2001) == 0.0);
  CHECK(hermite_zero_weight(2000) > 0.0);
}

TEST_CASE("laguerre recurrence") {
  CHECK(laguerre(0, 7.3) == 1.0);
  CHECK(laguerre(1, 2.0) == -1.0);
  CHECK(laguerre(5, 3.7) == doctest::Approx(oracle::ref::kLaguerre5At3p7).epsilon(1e-12));
  CHECK(laguerre(5, 3.7) == doctest::Approx(static_cast<double>(oracle::laguerre_explicit(5, 3.7L))).epsilon(1e-12));
  SUBCASE("matches explicit series for n <= 25, |x| <= 50") {
    double worst = 0.0;
    for (int n = 0; n <= 25; ++n) {
      for (double x = -50.0; x <= 50.0; x += 2.5) {
        const double want = static_cast<double>(oracle::laguerre_explicit(n, x));
        const double got = laguerre(n, x);
        const double scale = std::max(std::abs(want), 1.0);
        worst = std::max(worst, std::abs(got - want) / scale);
      }
    }
    CHECK(worst < 1e-9);
  }
  CHECK_THROWS_AS(laguerre(-1, 0.0), jcm::InvalidArgument);
}

TEST_CASE("bessel_i small arguments") {
  CHECK(bessel_i(0, 0.0) == Complex{1.0, 0.0});
  CHECK(bessel_i(1, 0.0) == Complex{0.0, 0.0});
  const auto want = oracle::bessel_series(0, {4.0L, 0.0L});
  CHECK(rel(bessel_i(0, 4.0), {static_cast<double>(want.real()), 0.0}) < 1e-10);
}

TEST_CASE("bessel_i against the long-double series on both branches") {
  for (const double r : {0.5, 3.0, 9.9, 10.1, 14.0, 16.0}) {
    for (const double theta : {0.0, 0.3, 1.2, std::numbers::pi / 2, 2.5, std::numbers::pi}) {
      const std::complex<long double> z = std::polar<long double>(r, theta);
      for (const int nu : {0, 1}) {
        const auto want = oracle::bessel_series(nu, z);
        const Complex got = bessel_i(nu, Complex(std::polar(r, theta)));
        CHECK(rel(got, Complex(static_cast<double>(want.real()), static_cast<double>(want.imag()))) < 1e-10);
      }
    }
  }
}

TEST_CASE("bessel_i against frozen high-precision values") {
  for (const auto& c : oracle::ref::kBessel) {
    const Complex z = std::polar(c.x, c.theta);
    CHECK(rel(bessel_i(0, z), c.i0) < 1e-10);
    CHECK(rel(bessel_i(1, z), c.i1) < 1e-10);
  }
}

TEST_CASE("bessel_i on the positive axis is real, >= 1 and increasing") {
  double previous = 0.0;
  for (double x = 0.0; x <= 100.0; x += 0.25) {
    const Complex v = bessel_i(0, x);
    CHECK(v.imag() == 0.0);
    CHECK(v.real() >= 1.0);
    CHECK(v.real() > previous);
    previous = v.real();
  }
}

TEST_CASE("bessel_i errors") {
  CHECK_THROWS_AS(bessel_i(2, 1.0), jcm::InvalidArgument);
  CHECK_THROWS_AS(bessel_i(0, 701.0), jcm::Overflow);
  CHECK_NOTHROW(bessel_i(0, kBesselMaxAbsArg));
}

TEST_CASE("log rising factorial") {
  CHECK(log_rising_factorial(0, 1) == 0.0);
  CHECK(log_rising_factorial(7, 0) == 0.0);
  CHECK(log_rising_factorial(1, 2) == doctest::Approx(std::log(6.0)).epsilon(1e-15));
  const long double exact = std::log(101.0L * 102.0L * 103.0L);
  CHECK(log_rising_factorial(100, 3) == doctest::Approx(static_cast<double>(exact)).epsilon(1e-13));
  for (int n = 0; n <= 20; ++n) {
    for (int k = 0; n + k <= 20; ++k) {
      const long double product = oracle::factorial(n + k) / oracle::factorial(n);
      CHECK(std::exp(log_rising_factorial(n, k)) == doctest::Approx(static_cast<double>(product)).epsilon(1e-12));
    }
  }
  // lgamma branch
  CHECK(log_rising_factorial(10, 100) ==
        doctest::Approx(std::lgamma(111.0) - std::lgamma(11.0)).epsilon(1e-13));
}

TEST_CASE("hermite functions are the normalized number-state wavefunctions") {
  for (const double x : {-2.3, 0.0, 0.7, 4.1}) {
    const std::vector<double> psi = hermite_functions(12, x);
    for (int n = 0; n <= 12; ++n) {
      const long double want = oracle::hermite_explicit(n, x) * std::exp(-0.5L * x * x) /
                               std::sqrt(std::pow(2.0L, n) * oracle::factorial(n) * std::sqrt(std::numbers::pi_v<long double>));
      CHECK(psi[static_cast<std::size_t>(n)] == doctest::Approx(static_cast<double>(want)).epsilon(1e-11));
    }
  }
  for (const int n : {0, 3, 20}) {
    const double norm = oracle::simpson([&](double x) {
      const double v = hermite_functions(n, x).back();
      return v * v;
    }, -12.0, 12.0, 4000);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
  }
}
