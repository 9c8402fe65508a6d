#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pade/arith.hpp"
#include "pade/errors.hpp"
#include "pade/scalar.hpp"

namespace pade {

/// Relative threshold used when trimming vanishing leading coefficients.
inline constexpr double kTrimTolerance = 1e-10;

/// Dense univariate polynomial; coeffs[k] multiplies z^k.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {}

    static Polynomial monomial(std::size_t power, const T& coeff) {
        std::vector<T> c(power + 1, ScalarTraits<T>::from_int(0));
        c[power] = coeff;
        return Polynomial(std::move(c));
    }

    const std::vector<T>& coeffs() const noexcept { return coeffs_; }
    std::vector<T>& coeffs() noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    const T& operator[](std::size_t k) const { return coeffs_[k]; }
    T& operator[](std::size_t k) { return coeffs_[k]; }

    /// Coefficient of z^k, zero past the stored length.
    T coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : ScalarTraits<T>::from_int(0);
    }

    double max_magnitude() const {
        double m = 0.0;
        for (const auto& c : coeffs_) m = std::max(m, magnitude(c));
        return m;
    }

    /// Drops leading coefficients at or below rel_tol * max|c| (exact zeros
    /// only for rational scalars). The zero polynomial ends up empty.
    Polynomial& normalize(double rel_tol = kTrimTolerance) {
        const double cutoff = ScalarTraits<T>::exact ? 0.0 : rel_tol * max_magnitude();
        while (!coeffs_.empty()) {
            const T& back = coeffs_.back();
            const bool vanishing =
                ScalarTraits<T>::exact ? ScalarTraits<T>::is_zero(back) : magnitude(back) <= cutoff;
            if (!vanishing) break;
            coeffs_.pop_back();
        }
        return *this;
    }

    /// Degree after normalization; nullopt for the zero polynomial.
    std::optional<std::size_t> degree(double rel_tol = kTrimTolerance) const {
        Polynomial copy(*this);
        copy.normalize(rel_tol);
        if (copy.coeffs_.empty()) return std::nullopt;
        return copy.coeffs_.size() - 1;
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const T& c) { return ScalarTraits<T>::is_zero(c); });
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<T> coeffs_;
};

/// Rounds Extended coefficients to double.
inline Polynomial<Complex> to_double(const Polynomial<Extended>& p) {
    std::vector<Complex> c;
    c.reserve(p.size());
    for (const auto& v : p.coeffs()) c.push_back(ScalarTraits<Extended>::to_complex(v));
    return Polynomial<Complex>(std::move(c));
}

/// Maclaurin coefficients c_0..c_N of a function analytic at the origin.
template <class T>
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw TruncationError("a truncated series needs at least one coefficient");
    }

    static TruncatedSeries zero(std::size_t order) {
        return TruncatedSeries(std::vector<T>(order + 1, ScalarTraits<T>::from_int(0)));
    }

    /// The constant series 1 + 0 z + ... through z^order.
    static TruncatedSeries one(std::size_t order) {
        auto s = zero(order);
        s.coeffs_[0] = ScalarTraits<T>::from_int(1);
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<T>& coeffs() const noexcept { return coeffs_; }
    std::vector<T>& coeffs() noexcept { return coeffs_; }
    const T& operator[](std::size_t k) const { return coeffs_[k]; }
    T& operator[](std::size_t k) { return coeffs_[k]; }

    double max_magnitude() const {
        double m = 0.0;
        for (const auto& c : coeffs_) m = std::max(m, magnitude(c));
        return m;
    }

    /// Same function, fewer terms.
    TruncatedSeries truncated(std::size_t order) const {
        if (order > this->order()) throw TruncationError("cannot extend a truncated series");
        return TruncatedSeries(std::vector<T>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<T> coeffs_;
};

// ---------------------------------------------------------------------------
// Polynomial arithmetic

template <class T>
Polynomial<T> operator+(const Polynomial<T>& a, const Polynomial<T>& b) {
    std::vector<T> c(std::max(a.size(), b.size()), ScalarTraits<T>::from_int(0));
    for (std::size_t k = 0; k < a.size(); ++k) c[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) c[k] += b[k];
    return Polynomial<T>(std::move(c));
}

template <class T>
Polynomial<T> operator-(const Polynomial<T>& a, const Polynomial<T>& b) {
    std::vector<T> c(std::max(a.size(), b.size()), ScalarTraits<T>::from_int(0));
    for (std::size_t k = 0; k < a.size(); ++k) c[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) c[k] -= b[k];
    return Polynomial<T>(std::move(c));
}

template <class T>
Polynomial<T> operator*(const Polynomial<T>& a, const Polynomial<T>& b) {
    if (a.size() == 0 || b.size() == 0) return Polynomial<T>();
    std::vector<T> c(a.size() + b.size() - 1, ScalarTraits<T>::from_int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return Polynomial<T>(std::move(c));
}

template <class T>
Polynomial<T> scaled(const Polynomial<T>& p, const T& s) {
    auto c = p.coeffs();
    for (auto& v : c) v *= s;
    return Polynomial<T>(std::move(c));
}

template <class T>
Polynomial<T> derivative(const Polynomial<T>& p) {
    if (p.size() <= 1) return Polynomial<T>();
    std::vector<T> c(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) c[k - 1] = p[k] * ScalarTraits<T>::from_int(static_cast<long>(k));
    return Polynomial<T>(std::move(c));
}

/// Horner evaluation in the polynomial's own scalar field.
template <class T>
T poly_eval_in(const Polynomial<T>& p, const T& z) {
    T acc = ScalarTraits<T>::from_int(0);
    for (std::size_t k = p.size(); k-- > 0;) {
        acc *= z;
        acc += p[k];
    }
    return acc;
}

/// Horner evaluation at a complex point.
template <class T>
Complex poly_eval(const Polynomial<T>& p, const Complex& z) {
    Complex acc(0.0, 0.0);
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * z + to_complex(p[k]);
    return acc;
}

/// Rewrites Σ_r a_r (z - 1)^r in the monomial basis using exact integer
/// binomials: the z^j coefficient is Σ_{r>=j} a_r C(r, j) (-1)^{r-j}.
template <class T>
Polynomial<T> from_shifted_basis(const std::vector<T>& a) {
    std::vector<T> c(a.size(), ScalarTraits<T>::from_int(0));
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t j = 0; j <= r; ++j) {
            T term = a[r] * binomial_as<T>(static_cast<unsigned>(r), static_cast<long>(j));
            if ((r - j) % 2 == 1)
                c[j] -= term;
            else
                c[j] += term;
        }
    }
    return Polynomial<T>(std::move(c));
}

/// Remainder of a / b over a field; b must be nonzero after normalization.
template <class T>
Polynomial<T> poly_mod(Polynomial<T> a, Polynomial<T> b) {
    a.normalize();
    b.normalize();
    if (b.size() == 0) throw std::invalid_argument("poly_mod: division by the zero polynomial");
    auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    while (ac.size() >= bc.size() && !ac.empty()) {
        const T factor = ac.back() / bc.back();
        const std::size_t shift = ac.size() - bc.size();
        for (std::size_t k = 0; k < bc.size(); ++k) ac[shift + k] -= factor * bc[k];
        ac.pop_back();
        a.normalize();
    }
    return a;
}

/// Monic greatest common divisor (exact scalars); zero when both inputs vanish.
template <class T>
Polynomial<T> poly_gcd(Polynomial<T> a, Polynomial<T> b) {
    a.normalize();
    b.normalize();
    while (b.size() != 0) {
        Polynomial<T> r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.size() == 0) return a;
    const T lead = a.coeffs().back();
    for (auto& c : a.coeffs()) c /= lead;
    return a;
}

// ---------------------------------------------------------------------------
// Series arithmetic

/// Maclaurin coefficients of (1 - z)^omega: (-1)^i falling(omega, i) / i!.
template <class T>
TruncatedSeries<T> binomial_series(const T& omega, std::size_t order) {
    std::vector<T> c(order + 1);
    c[0] = ScalarTraits<T>::from_int(1);
    for (std::size_t i = 1; i <= order; ++i) {
        // c_i = c_{i-1} * (-(omega - i + 1)) / i
        T step = ScalarTraits<T>::from_int(static_cast<long>(i) - 1) - omega;
        c[i] = c[i - 1] * step;
        c[i] /= ScalarTraits<T>::from_int(static_cast<long>(i));
    }
    return TruncatedSeries<T>(std::move(c));
}

/// Cauchy product truncated at the smaller order.
template <class T>
TruncatedSeries<T> series_mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<T> c(n + 1, ScalarTraits<T>::from_int(0));
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
    return TruncatedSeries<T>(std::move(c));
}

template <class T>
TruncatedSeries<T> series_add(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<T> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) c[i] = a[i] + b[i];
    return TruncatedSeries<T>(std::move(c));
}

/// Promotes p to a series of the same order as s and multiplies.
template <class T>
TruncatedSeries<T> poly_mul_series(const Polynomial<T>& p, const TruncatedSeries<T>& s) {
    const std::size_t n = s.order();
    std::vector<T> c(n + 1, ScalarTraits<T>::from_int(0));
    for (std::size_t i = 0; i < p.size() && i <= n; ++i)
        for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += p[i] * s[j];
    return TruncatedSeries<T>(std::move(c));
}

/// Formal derivative; the order drops by one.
template <class T>
TruncatedSeries<T> derivative(const TruncatedSeries<T>& s) {
    if (s.order() == 0) throw TruncationError("cannot differentiate a series of order 0");
    std::vector<T> c(s.order());
    for (std::size_t k = 1; k <= s.order(); ++k) c[k - 1] = s[k] * ScalarTraits<T>::from_int(static_cast<long>(k));
    return TruncatedSeries<T>(std::move(c));
}

/// Index of the first coefficient with magnitude above tol (above zero for
/// exact scalars); nullopt means the order exceeds the truncation.
template <class T>
std::optional<std::size_t> series_order(const TruncatedSeries<T>& s, double tol) {
    for (std::size_t k = 0; k <= s.order(); ++k) {
        const bool nonzero = ScalarTraits<T>::exact ? !ScalarTraits<T>::is_zero(s[k]) : magnitude(s[k]) > tol;
        if (nonzero) return k;
    }
    return std::nullopt;
}

/// d_ω = (1-z)^{ω+1} d/dz (1-z)^{-ω}, result truncated at order N - 1.
template <class T>
TruncatedSeries<T> apply_d_omega(const TruncatedSeries<T>& s, const T& omega) {
    if (s.order() == 0) throw TruncationError("d_omega needs a series of order at least 1");
    const std::size_t n = s.order();
    const T one = ScalarTraits<T>::from_int(1);
    T neg_omega = -omega;
    T omega_plus_one = omega + one;
    auto inner = series_mul(binomial_series(neg_omega, n), s);
    return series_mul(binomial_series(omega_plus_one, n - 1), derivative(inner));
}

/// Horner evaluation of the truncated sum; meaningful for |z| < 1.
template <class T>
Complex series_eval(const TruncatedSeries<T>& s, const Complex& z) {
    Complex acc(0.0, 0.0);
    for (std::size_t k = s.order() + 1; k-- > 0;) acc = acc * z + to_complex(s[k]);
    return acc;
}

}  // namespace pade
