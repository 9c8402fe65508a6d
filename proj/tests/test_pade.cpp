#include <doctest.h>

#include <numeric>
#include <random>

#include "oracle_values.hpp"
#include "pade/pade.hpp"
#include "support.hpp"

using namespace pade;

namespace {

ProblemInstance reference_instance() {
    return ProblemInstance::floating(oracle::reference_omega, oracle::reference_rho);
}

double deviation_from_reference(const std::vector<Polynomial<Complex>>& h) {
    std::vector<Polynomial<Complex>> ref;
    for (const auto& c : oracle::reference_approximants) ref.emplace_back(c);
    return max_relative_deviation(ref, h);
}

std::vector<Polynomial<Rational>> rational_system(const std::vector<std::vector<const char*>>& text) {
    std::vector<Polynomial<Rational>> out;
    for (const auto& row : text) {
        std::vector<Rational> c;
        for (const char* s : row) c.push_back(parse_rational(s));
        out.emplace_back(c);
    }
    return out;
}

}  // namespace

TEST_CASE("every float form reproduces the high-precision approximants") {
    const auto inst = reference_instance();
    for (Source s : {Source::explicit_sum, Source::hypergeometric, Source::gamma_form, Source::oracle}) {
        INFO("source " << to_string(s));
        CHECK(deviation_from_reference(build_system<Complex>(inst, s).H) < 1e-12);
    }
}

TEST_CASE("remainder coefficients of the reference instance") {
    const auto inst = reference_instance();
    for (const auto& g : {remainder_series<Complex>(inst, 10), remainder_from_approximants<Complex>(inst, 10)}) {
        for (std::size_t n = 0; n < 6; ++n) CHECK(std::abs(g[n]) < 1e-15);
        for (std::size_t n = 6; n <= 10; ++n)
            CHECK(std::abs(g[n] - oracle::reference_remainder_tail[n - 6]) < 1e-13);
    }
    const auto long_series = remainder_series<Complex>(inst, 120);
    CHECK(std::abs(series_eval(long_series, Complex(0.3, 0.0)) - oracle::reference_G_03) <
          1e-9 * std::abs(oracle::reference_G_03));
}

TEST_CASE("exact forms reproduce the rational oracle") {
    const auto pair = ProblemInstance::exact({Rational(0), Rational(1, 3)}, {1, 1});
    const auto triple = ProblemInstance::exact({Rational(1, 2), Rational(-2, 7), Rational(5, 3)}, {2, 0, 1});
    for (Source s : {Source::explicit_sum, Source::hypergeometric, Source::oracle}) {
        INFO("source " << to_string(s));
        CHECK(build_system<Rational>(pair, s).H == rational_system(oracle::exact_pair));
        CHECK(build_system<Rational>(triple, s).H == rational_system(oracle::exact_triple));
    }
    CHECK_THROWS_AS(build_system<Rational>(pair, Source::gamma_form), InstanceError);
}

TEST_CASE("M = 0 base case") {
    for (unsigned rho0 : {0u, 1u, 2u, 5u}) {
        const Rational w(3, 7);
        const auto inst = ProblemInstance::exact({w}, {rho0});
        const auto sys = build_system<Rational>(inst, Source::explicit_sum);
        CHECK(sys.H == base_case<Rational>(w, rho0).H);
        CHECK(sys.H[0] == Polynomial<Rational>::monomial(rho0, Rational(1) / factorial_as<Rational>(rho0)));
        const auto g = remainder_series<Rational>(inst, rho0 + 8);
        const auto b = binomial_series(w, 8);
        for (std::size_t n = 0; n <= rho0 + 8; ++n)
            CHECK(g[n] == (n < rho0 ? Rational(0) : b[n - rho0] / factorial_as<Rational>(rho0)));
    }
}

TEST_CASE("contracts and common roots") {
    const auto inst = ProblemInstance::exact({Rational(1, 2), Rational(-2, 7), Rational(5, 3)}, {2, 0, 1});
    const auto sys = build_system<Rational>(inst, Source::explicit_sum);
    const auto rep = check_contracts(sys, 12);
    CHECK(rep.degrees_exact);
    CHECK(rep.order_ok);
    CHECK(*rep.order == inst.sigma() - 1);
    CHECK(rep.normalization_error == 0.0);
    CHECK(no_common_root(sys));

    const auto fsys = build_system<Complex>(reference_instance(), Source::gamma_form);
    const auto frep = check_contracts(fsys, 20);
    CHECK(frep.order_ok);
    CHECK(frep.normalization_error < 1e-12);
}

TEST_CASE("symmetries and the d_omega step") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        const auto inst = testing_support::random_instance(rng, 2, 3);
        const std::vector<std::size_t> perm = {2, 0, 1};
        const auto rep = check_symmetries<Complex>(inst, Complex(-0.6, 0.45), perm);
        CHECK(rep.permutation < 1e-12);
        CHECK(rep.shift_approximants < 1e-12);
        CHECK(rep.shift_remainder < 1e-12);
        CHECK(check_d_omega_recursion<Complex>(inst, inst.sigma() + 8) < 1e-10);
        CHECK(check_d_omega_recursion<Complex>(inst.with_rho({0, 2, 1}), 20) < 1e-10);
    }
    const auto exact = ProblemInstance::exact({Rational(1, 4), Rational(2, 3)}, {0, 2});
    CHECK(check_d_omega_recursion<Rational>(exact, 12) == 0.0);
    const std::vector<std::size_t> swap = {1, 0};
    const auto rep = check_symmetries<Rational>(exact, Rational(-5, 3), swap);
    CHECK(rep.permutation == 0.0);
    CHECK(rep.shift_approximants == 0.0);
    CHECK(rep.shift_remainder == 0.0);
}

TEST_CASE("invalid instances and arguments") {
    CHECK_THROWS_AS(ProblemInstance::floating({0.0, 1.0}, {1, 1}), InstanceError);
    CHECK_THROWS_AS(ProblemInstance::floating({Complex(0.5, 0.2), Complex(-1.5, 0.2)}, {1, 1}), InstanceError);
    CHECK_THROWS_AS(ProblemInstance::floating({0.5}, {1, 1}), InstanceError);
    CHECK_THROWS_AS(ProblemInstance::floating({}, {}), InstanceError);
    CHECK_THROWS_AS(ProblemInstance::exact({Rational(1, 3), Rational(-2, 3)}, {0, 0}), InstanceError);
    const auto inst = reference_instance();
    CHECK_THROWS_AS(approximant_explicit<Complex>(inst, 3), InstanceError);
    CHECK_THROWS_AS(oracle_linear_solve<Complex>(inst, 4), TruncationError);
    CHECK_THROWS_AS(remainder_series<Complex>(inst, 3), TruncationError);
    CHECK_THROWS_AS(inst.omega_exact(), InstanceError);
}

TEST_CASE("terminating hypergeometric series") {
    // 2F1(-2, 1; 3; x) = 1 - 2x/3 + x^2/6
    const std::vector<Rational> numer = {Rational(-2), Rational(1)};
    const std::vector<Rational> denom = {Rational(3)};
    const auto c = terminating_hypergeometric<Rational>(numer, denom);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == Rational(1));
    CHECK(c[1] == Rational(-2, 3));
    CHECK(c[2] == Rational(1, 6));
}
