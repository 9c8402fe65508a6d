#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle_values.hpp"
#include "pade/errors.hpp"
#include "pade/pade.hpp"
#include "pade/quadrature.hpp"
#include "support.hpp"

using namespace pade;

namespace {

ProblemInstance reference_instance() {
    return ProblemInstance::floating(oracle::reference_omega, oracle::reference_rho);
}

double rel(Complex a, Complex b) {
    return std::abs(a - b) / std::abs(b);
}

}  // namespace

TEST_CASE("Gauss-Legendre rule") {
    const auto rule = gauss_legendre(5);
    double sum = 0.0, x4 = 0.0, x9 = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
        sum += rule.weights[i];
        x4 += rule.weights[i] * std::pow(rule.nodes[i], 4);
        x9 += rule.weights[i] * std::pow(rule.nodes[i], 9);
    }
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(x4 == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(std::abs(x9) < 1e-15);
    const auto big = gauss_legendre(128);
    double e = 0.0;
    for (std::size_t i = 0; i < 128; ++i) e += big.weights[i] * std::exp(big.nodes[i]);
    CHECK(e == doctest::Approx(std::exp(1.0) - std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("remainder contour against the oracle") {
    const auto inst = reference_instance();
    CHECK(rel(remainder_contour(inst, 0.3).value, oracle::reference_G_03) < 1e-7);
    CHECK(rel(remainder_contour(inst, Complex(0.4, 0.2)).value, oracle::reference_G_04_02) < 1e-7);
    QuadratureConfig wide;
    wide.circle_radius = default_contour_radius(inst) + 5.0;
    CHECK(rel(remainder_contour(inst, 0.3, wide).value, oracle::reference_G_03) < 1e-7);
    // G is analytic off the cut, so the contour also works outside the unit disc.
    const Complex far(-2.0, 0.5);
    CHECK(std::isfinite(std::abs(remainder_contour(inst, far).value)));
    CHECK_THROWS_AS(remainder_contour(inst, 1.5), DomainError);
    QuadratureConfig tight;
    tight.circle_radius = 1.0;
    CHECK_THROWS_AS(remainder_contour(inst, 0.3, tight), DomainError);
}

TEST_CASE("approximant contour and torus against the closed form") {
    const auto inst = reference_instance();
    for (std::size_t m = 0; m < 3; ++m) {
        const auto h = Polynomial<Complex>(oracle::reference_approximants[m]);
        for (Complex z : {Complex(0.5, 0.0), Complex(-1.3, 0.8), Complex(1.0, 0.0), Complex(0.2, -2.0)}) {
            INFO("m = " << m << ", z = " << z);
            CHECK(rel(approximant_contour(inst, m, z).value, poly_eval(h, z)) < 1e-10);
        }
        CHECK(rel(approximant_torus(inst, m, 0.5).value, poly_eval(h, 0.5)) < 1e-8);
        CHECK(rel(approximant_torus(inst, m, Complex(-0.7, 1.1)).value, poly_eval(h, Complex(-0.7, 1.1))) < 1e-8);
    }
    CHECK_THROWS_AS(approximant_contour(inst, 0, 2.0), DomainError);
    CHECK_THROWS_AS(approximant_torus(ProblemInstance::floating({0.5}, {2}), 0, 0.5), DomainError);
    const auto close = ProblemInstance::floating({Complex(0.0, 0.0), Complex(1.0, 1e-8)}, {1, 1});
    CHECK_THROWS_AS(approximant_contour(close, 0, 0.5), PoleSeparationError);
}

TEST_CASE("real integral forms") {
    const auto inst = reference_instance();
    const auto order = integrable_ordering(inst);
    REQUIRE(order);
    CHECK(*order == std::vector<std::size_t>{2, 0, 1});
    const auto g = remainder_series<Complex>(inst, 150);
    for (double z : {0.2, 0.4, 0.7}) {
        const Complex ref = series_eval(g, z);
        CHECK(rel(remainder_iterated(inst, z).value, ref) < 1e-9);
    }
    const auto pair = ProblemInstance::floating({Complex(-0.3, 0.2), Complex(1.45, -0.1)}, {2, 1});
    const auto gp = remainder_series<Complex>(pair, 150);
    const Complex ref = series_eval(gp, 0.4);
    const auto iter = remainder_iterated(pair, 0.4);
    const auto cube = remainder_cube(pair, 0.4);
    CHECK(rel(iter.value, ref) < 1e-10);
    CHECK(rel(cube.value, ref) < 1e-10);

    QuadratureConfig cfg;
    cfg.mc_samples = 200000;
    cfg.seed = 11;
    const auto mc = remainder_cube_monte_carlo(pair, 0.4, cfg);
    CHECK(std::abs(mc.value - ref) < 5.0 * mc.error_estimate);
    CHECK(remainder_cube_monte_carlo(pair, 0.4, cfg).value == mc.value);

    CHECK_THROWS_AS(remainder_iterated(pair, 1.2), DomainError);
    CHECK_THROWS_AS(remainder_iterated(ProblemInstance::floating({0.5}, {1}), 0.4), DomainError);
    const auto flat = ProblemInstance::floating({Complex(0.0, 0.0), Complex(0.0, 0.5)}, {1, 1});
    CHECK_FALSE(integrable_ordering(flat));
    CHECK_THROWS_AS(remainder_cube(flat, 0.4), DomainError);
}

TEST_CASE("contour quadrature on random instances") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 6; ++trial) {
        const auto inst = testing_support::random_instance(rng, 1 + trial % 2, 2);
        const auto g = remainder_series<Complex>(inst, inst.sigma() + 80);
        CHECK(rel(remainder_contour(inst, 0.3).value, series_eval(g, 0.3)) < 1e-6);
        const auto h = approximant_explicit<Complex>(inst, 1);
        CHECK(rel(approximant_contour(inst, 1, 0.3).value, poly_eval(h, 0.3)) < 1e-8);
    }
}
