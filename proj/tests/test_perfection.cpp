#include <doctest.h>

#include <random>

#include "pade/errors.hpp"
#include "pade/perfection.hpp"
#include "support.hpp"

using namespace pade;

TEST_CASE("S, T and alpha") {
    const auto id = EpsilonFamily::identity(4);
    const auto hyp = hypothesis_report(id);
    CHECK(hyp.S == 4);
    CHECK(hyp.T == 1);
    CHECK(hyp.alpha == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(hyp.satisfied);

    const EpsilonFamily zero(std::vector<std::vector<int>>(3, std::vector<int>(3, 0)));
    const auto z = compute_S_and_alpha(zero);
    CHECK(z.S == 0);
    CHECK_FALSE(z.alpha);
    CHECK(z.tie_witnesses.size() == 2);
    CHECK_FALSE(hypothesis_report(zero).satisfied);

    const EpsilonFamily sums({{2, 0, 0}, {0, 1, 0}, {1, 1, 1}});
    CHECK(compute_T(sums) == 1);

    const EpsilonFamily dup({{1, 0}, {1, 0}});
    const auto d = hypothesis_report(dup);
    CHECK_FALSE(d.alpha_unique);
    CHECK_FALSE(d.satisfied);

    const EpsilonFamily gap({{2, 0}, {0, 2}});
    const auto g = hypothesis_report(gap);
    CHECK(g.alpha_unique);
    CHECK_FALSE(g.degree_condition);
    CHECK(g.gap() == 1);

    CHECK_THROWS_AS(compute_S_and_alpha(EpsilonFamily::identity(11)), SizeError);
    CHECK_THROWS_AS(EpsilonFamily({{1, 0}, {0}}), InstanceError);
}

TEST_CASE("unit lower-triangular families satisfy the hypothesis") {
    const auto fam = EpsilonFamily::unit_lower({{}, {0}, {0, 1}, {1}});
    CHECK(fam.rows()[2] == std::vector<int>{1, 1, 1, 0});
    const auto hyp = hypothesis_report(fam);
    CHECK(hyp.satisfied);
    CHECK(hyp.S == 4);
    CHECK(hyp.T == 1);
    CHECK_THROWS_AS(EpsilonFamily::unit_lower({{}, {1}}), InstanceError);
    CHECK_THROWS_AS(EpsilonFamily::unit_lower({{}, {0, 0}}), InstanceError);
}

TEST_CASE("determinant of the identity family") {
    std::mt19937_64 rng(99);
    for (std::size_t M = 0; M <= 3; ++M) {
        const auto inst = testing_support::random_instance(rng, M, 2);
        const auto det = determinant_test(inst, EpsilonFamily::identity(M + 1));
        CHECK(det.is_monomial);
        CHECK(det.exponent == inst.sigma());
        CHECK(det.residual < 1e-9);
        CHECK(det.degree_bound == static_cast<long>(inst.sigma()));
    }
}

TEST_CASE("exact and float determinants agree") {
    const auto inst = ProblemInstance::exact({Rational(0), Rational(1, 3), Rational(-3, 4)}, {1, 0, 2});
    const auto fam = EpsilonFamily::unit_lower({{}, {0}, {1}});
    const auto exact = determinant_test(inst, fam);
    const auto flt = determinant_test(inst.as_floating(), fam);
    REQUIRE(exact.is_monomial);
    REQUIRE(flt.is_monomial);
    CHECK(exact.residual == 0.0);
    CHECK(exact.exponent == flt.exponent);
    CHECK(exact.exponent == inst.sigma() + hypothesis_report(fam).T - 1);
    CHECK(std::abs(flt.C->real() / exact.C_exact->get_d() - 1.0) < 1e-10);
}

TEST_CASE("lifted symmetries keep the exponent") {
    std::mt19937_64 rng(5);
    const auto inst = testing_support::random_instance(rng, 2, 2, 1);
    const auto fam = EpsilonFamily::unit_lower({{}, {0}, {0, 1}});
    const auto base = determinant_test(inst, fam);
    const std::vector<std::size_t> perm = {1, 2, 0};
    const auto permuted = determinant_test(inst.permuted(perm), fam.permuted_columns(perm));
    const auto moved = determinant_test(inst.shifted(Complex(0.8, -0.3)), fam);
    CHECK(base.is_monomial);
    CHECK(permuted.is_monomial);
    CHECK(moved.is_monomial);
    CHECK(permuted.exponent == base.exponent);
    CHECK(moved.exponent == base.exponent);
}

TEST_CASE("determinant input errors and sweep") {
    const auto inst = ProblemInstance::floating({Complex(0.1, 0.2), Complex(0.7, -0.1)}, {0, 1});
    CHECK_THROWS_AS(determinant_test(inst, EpsilonFamily({{-1, 0}, {0, 1}})), InstanceError);
    CHECK_THROWS_AS(determinant_test(inst, EpsilonFamily::identity(3)), InstanceError);

    const auto sweep = sweep_families(inst, 1);
    CHECK(sweep.size() == 16);
    for (const auto& entry : sweep) {
        if (!entry.hypothesis.satisfied) continue;
        CHECK(entry.determinant.is_monomial);
        CHECK(entry.determinant.exponent == inst.sigma() + entry.hypothesis.T - 1);
    }
    CHECK_THROWS_AS(sweep_families(inst, 3, 100), SizeError);
}
