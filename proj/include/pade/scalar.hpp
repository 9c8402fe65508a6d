#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include <boost/multiprecision/complex128.hpp>
#include <gmpxx.h>

namespace pade {

using Complex = std::complex<double>;
using Rational = mpq_class;
using BigInt = mpz_class;
/// 113-bit complex numbers for the float-mode computations that are dominated
/// by cancellation (the dense oracle solve, vanishing-order checks, determinants).
using Extended = boost::multiprecision::complex128;

/// Uniform access to the two scalar fields the library computes in:
/// floating complex numbers and exact rationals.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
    static constexpr bool exact = false;
    /// Relative size below which a cancelled coefficient counts as zero.
    static constexpr double vanishing_tol = 1e-9;
    static Complex from_int(long v) { return Complex(static_cast<double>(v), 0.0); }
    static Complex from_big(const BigInt& v) { return Complex(v.get_d(), 0.0); }
    static double magnitude(const Complex& v) { return std::abs(v); }
    static bool is_zero(const Complex& v) { return v == Complex(0.0, 0.0); }
    static Complex to_complex(const Complex& v) { return v; }
};

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static constexpr double vanishing_tol = 0.0;
    static Rational from_int(long v) { return Rational(v); }
    static Rational from_big(const BigInt& v) { return Rational(v); }
    static double magnitude(const Rational& v) { return std::abs(v.get_d()); }
    static bool is_zero(const Rational& v) { return sgn(v) == 0; }
    static Complex to_complex(const Rational& v) { return Complex(v.get_d(), 0.0); }
};

template <>
struct ScalarTraits<Extended> {
    static constexpr bool exact = false;
    static constexpr double vanishing_tol = 1e-24;
    static Extended from_int(long v) { return Extended(v); }
    static Extended from_big(const BigInt& v) { return Extended(boost::multiprecision::float128(v.get_str())); }
    static double magnitude(const Extended& v) { return static_cast<double>(abs(v)); }
    static bool is_zero(const Extended& v) { return v == Extended(0); }
    static Complex to_complex(const Extended& v) {
        return Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    }
};

inline Extended to_extended(const Complex& v) {
    return Extended(v.real(), v.imag());
}

template <class T>
inline double magnitude(const T& v) {
    return ScalarTraits<T>::magnitude(v);
}

template <class T>
inline Complex to_complex(const T& v) {
    return ScalarTraits<T>::to_complex(v);
}

/// Parses "p/q", "p", or a decimal literal such as "-0.25" into an exact rational.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& v);

}  // namespace pade
