#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "pade/instance.hpp"

namespace testing_support {

using pade::Complex;
using pade::ProblemInstance;
using pade::Rational;

/// Smallest distance of ω_i - ω_j to an integer, over all pairs.
inline double integer_margin(const std::vector<Complex>& omega) {
    double margin = 1.0;
    for (std::size_t i = 0; i < omega.size(); ++i)
        for (std::size_t j = i + 1; j < omega.size(); ++j) {
            const Complex d = omega[i] - omega[j];
            margin = std::min(margin, std::hypot(d.real() - std::round(d.real()), d.imag()));
        }
    return margin;
}

/// Complex exponents in [-2, 3] x [-1, 1] with every pairwise difference at
/// least `margin` away from the integers.
inline ProblemInstance random_instance(std::mt19937_64& rng, std::size_t M, unsigned max_rho,
                                       unsigned min_rho = 0, double margin = 0.1) {
    std::uniform_real_distribution<double> re(-2.0, 3.0), im(-1.0, 1.0);
    std::uniform_int_distribution<unsigned> deg(min_rho, max_rho);
    std::vector<Complex> omega;
    do {
        omega.clear();
        for (std::size_t m = 0; m <= M; ++m) omega.emplace_back(re(rng), im(rng));
    } while (integer_margin(omega) < margin);
    std::vector<unsigned> rho;
    for (std::size_t m = 0; m <= M; ++m) rho.push_back(deg(rng));
    return ProblemInstance::floating(std::move(omega), std::move(rho));
}

/// Rational exponents p/q with 2 <= q <= 9, |p/q| <= 3, no two an integer apart.
inline ProblemInstance random_exact_instance(std::mt19937_64& rng, std::size_t M, unsigned max_rho) {
    std::uniform_int_distribution<int> den(2, 9), num(-27, 27);
    std::uniform_int_distribution<unsigned> deg(0, max_rho);
    std::vector<Rational> omega;
    auto clash = [&] {
        for (std::size_t i = 0; i < omega.size(); ++i)
            for (std::size_t j = i + 1; j < omega.size(); ++j) {
                const Rational d = omega[i] - omega[j];
                if (d.get_den() == 1) return true;
            }
        return false;
    };
    do {
        omega.clear();
        for (std::size_t m = 0; m <= M; ++m) {
            const int q = den(rng);
            Rational w(num(rng) % (3 * q), q);
            w.canonicalize();
            omega.push_back(w);
        }
    } while (clash());
    std::vector<unsigned> rho;
    for (std::size_t m = 0; m <= M; ++m) rho.push_back(deg(rng));
    return ProblemInstance::exact(std::move(omega), std::move(rho));
}

}  // namespace testing_support
