#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "oracle_values.hpp"
#include "pade/arith.hpp"
#include "pade/errors.hpp"

using namespace pade;

TEST_CASE("rising and falling factorials") {
    CHECK(rising_factorial<Rational>(Rational(3), 4) == Rational(360));
    CHECK(falling_factorial<Rational>(Rational(5), 3) == Rational(60));
    CHECK(rising_factorial<Rational>(Rational(1, 2), 0) == Rational(1));
    CHECK(falling_factorial<Rational>(Rational(2), 3) == Rational(0));
    const Complex r = rising_factorial<Complex>(Complex(0.5, 1.0), 2);
    CHECK(std::abs(r - Complex(0.5, 1.0) * Complex(1.5, 1.0)) < 1e-15);
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(10, -1) == 0);
    CHECK(binomial(10, 11) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(66, 33) == 7219428434016265740ULL);
    CHECK_THROWS_AS(binomial(70, 35), std::overflow_error);
    CHECK(binomial_big(70, 35) == BigInt("112186277816662845432"));
    CHECK(factorial_as<Rational>(20) == Rational(BigInt("2432902008176640000")));
}

TEST_CASE("log_gamma against high-precision values") {
    for (const auto& [x, expected] : oracle::log_gamma) {
        const Complex got = log_gamma(x);
        INFO("x = " << x.real() << " + " << x.imag() << "i");
        CHECK(std::abs(got - expected) <= 1e-13 * std::max(1.0, std::abs(expected)));
    }
}

TEST_CASE("log_gamma small integers and poles") {
    for (int n = 1; n <= 20; ++n) {
        const double expected = std::lgamma(static_cast<double>(n));
        CHECK(std::abs(log_gamma(Complex(n, 0.0)) - Complex(expected, 0.0)) < 1e-13 * std::max(1.0, expected));
    }
    CHECK_THROWS_AS(log_gamma(Complex(0.0, 0.0)), PoleError);
    CHECK_THROWS_AS(log_gamma(Complex(-3.0, 0.0)), PoleError);
    CHECK_NOTHROW(log_gamma(Complex(-3.0, 1e-6)));
}

TEST_CASE("sin_pi reduces the real part") {
    CHECK(sin_pi(Complex(4.0, 0.0)) == Complex(0.0, 0.0));
    CHECK(std::abs(sin_pi(Complex(0.5, 0.0)) - 1.0) < 1e-16);
    CHECK(std::abs(sin_pi(Complex(1e6 + 0.25, 0.0)) - std::sin(M_PI / 4)) < 1e-14);
    const Complex z(0.3, 0.7);
    CHECK(std::abs(sin_pi(z) - std::sin(M_PI * z)) < 1e-14);
    CHECK(std::abs(sin_pi(z + 2.0) - sin_pi(z)) < 1e-14);
    CHECK(std::abs(sin_pi(z + 1.0) + sin_pi(z)) < 1e-14);
}

TEST_CASE("rational literals") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(parse_rational("-0.25") == Rational(-1, 4));
    CHECK(parse_rational(" 7 / 21 ") == Rational(1, 3));
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}
