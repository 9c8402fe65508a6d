#pragma once

#include <cstdint>

#include "pade/scalar.hpp"

namespace pade {

/// x (x+1) ... (x+r-1); 1 when r == 0.
template <class T>
T rising_factorial(const T& x, unsigned r) {
    T acc = ScalarTraits<T>::from_int(1);
    for (unsigned i = 0; i < r; ++i) {
        T f = x + ScalarTraits<T>::from_int(static_cast<long>(i));
        acc *= f;
    }
    return acc;
}

/// x (x-1) ... (x-r+1); 1 when r == 0.
template <class T>
T falling_factorial(const T& x, unsigned r) {
    T acc = ScalarTraits<T>::from_int(1);
    for (unsigned i = 0; i < r; ++i) {
        T f = x - ScalarTraits<T>::from_int(static_cast<long>(i));
        acc *= f;
    }
    return acc;
}

/// Binomial coefficient C(n, r), zero outside 0 <= r <= n.
/// Throws std::overflow_error when the value does not fit in 64 bits.
std::uint64_t binomial(unsigned n, long r);

/// Exact binomial coefficient as a big integer.
BigInt binomial_big(unsigned n, long r);

/// C(n, r) converted into the scalar field T without intermediate overflow.
template <class T>
T binomial_as(unsigned n, long r) {
    return ScalarTraits<T>::from_big(binomial_big(n, r));
}

/// n! in the scalar field T.
template <class T>
T factorial_as(unsigned n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return ScalarTraits<T>::from_big(f);
}

/// Distance below which an argument counts as sitting on a pole of Γ.
inline constexpr double kPoleTolerance = 1e-12;

/// Principal branch of log Γ(x). Lanczos approximation for Re x >= 1/2,
/// reflection otherwise. Throws PoleError near x in {0, -1, -2, ...}.
Complex log_gamma(Complex x);

/// sin(πx) with the real part reduced modulo 2 before evaluation.
Complex sin_pi(Complex x);

}  // namespace pade
