#include <doctest.h>

#include <random>

#include "pade/pade.hpp"
#include "pade/verify.hpp"
#include "support.hpp"

using namespace pade;

TEST_CASE("random rational instances: all exact forms coincide") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        const auto inst = testing_support::random_exact_instance(rng, trial % 4, 3);
        INFO("trial " << trial);
        const auto explicit_sys = build_system<Rational>(inst, Source::explicit_sum);
        CHECK(explicit_sys.H == build_system<Rational>(inst, Source::hypergeometric).H);
        CHECK(explicit_sys.H == oracle_linear_solve<Rational>(inst, inst.sigma() + 2).H);
        const auto rep = check_contracts(explicit_sys, inst.sigma() + 4);
        CHECK(rep.degrees_exact);
        CHECK(rep.order_ok);
        CHECK(rep.normalization_error == 0.0);
        if (inst.M() > 0) CHECK(no_common_root(explicit_sys));
        CHECK(remainder_series<Rational>(inst, inst.sigma() + 4) ==
              remainder_from_approximants<Rational>(inst, inst.sigma() + 4));
    }
}

TEST_CASE("random float instances pass the verification suite") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 12; ++trial) {
        const auto inst = testing_support::random_instance(rng, trial % 3, 2);
        const auto report = verify_instance(inst);
        INFO("trial " << trial);
        for (const auto& c : report.checks) {
            INFO(c.name << ": " << c.detail << " residual " << c.residual.value_or(-1.0));
            CHECK(c.status != CheckStatus::fail);
        }
    }
}

TEST_CASE("random exact instances pass the verification suite") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 6; ++trial) {
        const auto inst = testing_support::random_exact_instance(rng, trial % 3, 2);
        const auto report = verify_instance(inst);
        INFO("trial " << trial);
        for (const auto& c : report.checks) {
            INFO(c.name << ": " << c.detail << " residual " << c.residual.value_or(-1.0));
            CHECK(c.status != CheckStatus::fail);
        }
    }
}
