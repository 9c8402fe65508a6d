#include <doctest.h>

#include "pade/polyseries.hpp"

using namespace pade;

namespace {

Polynomial<Rational> P(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Polynomial<Rational>(v);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
    const auto a = P({1, 2});      // 1 + 2z
    const auto b = P({-1, 0, 3});  // -1 + 3z^2
    CHECK(a * b == P({-1, -2, 3, 6}));
    CHECK((a + b).coeffs() == P({0, 2, 3}).coeffs());
    CHECK(derivative(b) == P({0, 6}));
    CHECK(poly_eval_in<Rational>(b, Rational(2)) == Rational(11));
    CHECK(*b.degree() == 2);
    CHECK_FALSE(Polynomial<Rational>().degree());
}

TEST_CASE("shifted basis conversion") {
    // 2 + 3(z - 1) + (z - 1)^2 = z^2 + z
    const auto p = from_shifted_basis(std::vector<Rational>{2, 3, 1});
    CHECK(p == P({0, 1, 1}));
}

TEST_CASE("gcd and remainder") {
    const auto f = P({-1, 0, 1});  // (z-1)(z+1)
    const auto g = P({-1, 1});     // z-1
    CHECK(poly_mod(f, g).is_zero());
    CHECK(poly_gcd(f, P({1, 1, 0})) == P({1, 1}));
    CHECK(*poly_gcd(P({1, 1}), P({2, 1})).degree() == 0);
}

TEST_CASE("binomial series") {
    // (1 - z)^{1/2} = 1 - z/2 - z^2/8 - z^3/16
    const auto s = binomial_series(Rational(1, 2), 3);
    CHECK(s[0] == Rational(1));
    CHECK(s[1] == Rational(-1, 2));
    CHECK(s[2] == Rational(-1, 8));
    CHECK(s[3] == Rational(-1, 16));
    // (1 - z)^a (1 - z)^b = (1 - z)^{a + b}
    const auto prod = series_mul(binomial_series(Rational(1, 3), 8), binomial_series(Rational(2, 5), 8));
    CHECK(prod == binomial_series(Rational(11, 15), 8));
    // A nonnegative integer exponent truncates.
    const auto cube = binomial_series(Rational(3), 6);
    CHECK(cube[3] == Rational(-1));
    CHECK(cube[4] == Rational(0));
}

TEST_CASE("series order and evaluation") {
    TruncatedSeries<Complex> s(std::vector<Complex>{0.0, 1e-14, 0.0, 2.0});
    CHECK(*series_order(s, 1e-12) == 3);
    CHECK(*series_order(s, 0.0) == 1);
    CHECK(!series_order(TruncatedSeries<Complex>::zero(4), 0.0));
    CHECK(std::abs(series_eval(s, Complex(0.5, 0.0)) - Complex(0.25 + 0.5e-14, 0.0)) < 1e-16);
    CHECK_THROWS_AS(TruncatedSeries<Complex>(std::vector<Complex>{}), TruncationError);
    CHECK_THROWS_AS(derivative(TruncatedSeries<Rational>::one(0)), TruncationError);
}

TEST_CASE("d_omega on a binomial") {
    // d_w (1 - z)^a = (1 - z)^{w+1} d/dz (1 - z)^{a - w} = (w - a)(1 - z)^a
    const Rational a(1, 3), w(-2, 5);
    const auto out = apply_d_omega(binomial_series(a, 10), w);
    const auto expected = binomial_series(a, 9);
    for (std::size_t k = 0; k <= 9; ++k) CHECK(out[k] == (w - a) * expected[k]);
}
