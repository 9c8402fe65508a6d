#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "pade/errors.hpp"
#include "pade/scalar.hpp"

namespace pade {

/// Dense row-major square matrix.
template <class T>
class Matrix {
public:
    explicit Matrix(std::size_t n) : n_(n), data_(n * n, ScalarTraits<T>::from_int(0)) {}

    std::size_t size() const noexcept { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    double max_magnitude() const {
        double m = 0.0;
        for (const auto& v : data_) m = std::max(m, magnitude(v));
        return m;
    }

private:
    std::size_t n_;
    std::vector<T> data_;
};

namespace detail {

// Row index of the pivot for column k, or n when the column is (numerically) zero.
template <class T>
std::size_t choose_pivot(const Matrix<T>& a, std::size_t k, double cutoff) {
    const std::size_t n = a.size();
    if constexpr (ScalarTraits<T>::exact) {
        for (std::size_t i = k; i < n; ++i)
            if (!ScalarTraits<T>::is_zero(a(i, k))) return i;
        return n;
    } else {
        std::size_t best = k;
        double best_mag = magnitude(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double mag = magnitude(a(i, k));
            if (mag > best_mag) {
                best = i;
                best_mag = mag;
            }
        }
        return best_mag > cutoff ? best : n;
    }
}

template <class T>
void swap_rows(Matrix<T>& a, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a.size(); ++c) std::swap(a(i, c), a(j, c));
}

}  // namespace detail

/// Solves A x = b by Gaussian elimination with partial pivoting (first
/// nonzero pivot for exact scalars). Throws SingularSystemError.
template <class T>
std::vector<T> solve_linear(Matrix<T> a, std::vector<T> b) {
    const std::size_t n = a.size();
    const double cutoff = ScalarTraits<T>::exact
                              ? 0.0
                              : static_cast<double>(n) * std::numeric_limits<double>::epsilon() * a.max_magnitude();
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t p = detail::choose_pivot(a, k, cutoff);
        if (p == n) throw SingularSystemError("elimination broke down at column " + std::to_string(k));
        if (p != k) {
            detail::swap_rows(a, p, k);
            std::swap(b[p], b[k]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (ScalarTraits<T>::is_zero(a(i, k))) continue;
            const T factor = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
            b[i] -= factor * b[k];
        }
    }
    std::vector<T> x(n);
    for (std::size_t k = n; k-- > 0;) {
        T acc = b[k];
        for (std::size_t j = k + 1; j < n; ++j) acc -= a(k, j) * x[j];
        x[k] = acc / a(k, k);
    }
    return x;
}

/// Determinant by the same elimination; zero for singular matrices.
template <class T>
T determinant(Matrix<T> a) {
    const std::size_t n = a.size();
    T det = ScalarTraits<T>::from_int(1);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t p = detail::choose_pivot(a, k, 0.0);
        if (p == n) return ScalarTraits<T>::from_int(0);
        if (p != k) {
            detail::swap_rows(a, p, k);
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (ScalarTraits<T>::is_zero(a(i, k))) continue;
            const T factor = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
        }
    }
    return det;
}

}  // namespace pade
