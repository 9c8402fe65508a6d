#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "pade/arith.hpp"
#include "pade/errors.hpp"
#include "pade/instance.hpp"
#include "pade/linalg.hpp"
#include "pade/polyseries.hpp"
#include "pade/scalar.hpp"

namespace pade {

/// Which construction produced a PadeSystem.
enum class Source { explicit_sum, hypergeometric, gamma_form, oracle };

std::string to_string(Source source);

/// The M+1 approximants H_m of an instance. H[m] multiplies (1-z)^{ω_m}.
template <class T>
struct PadeSystem {
    ProblemInstance instance;
    std::vector<Polynomial<T>> H;
    unsigned sigma = 0;
    Source source = Source::explicit_sum;
};

/// Truncation order used for remainder series unless the caller overrides it.
inline std::size_t default_truncation(const ProblemInstance& inst) {
    return inst.sigma() + 16;
}

namespace detail {

inline void check_index(const ProblemInstance& inst, std::size_t m) {
    if (m >= inst.size())
        throw InstanceError("approximant index " + std::to_string(m) + " out of range for M = " +
                            std::to_string(inst.M()));
}

template <class T>
T one() {
    return ScalarTraits<T>::from_int(1);
}

template <class T>
T from_unsigned(std::size_t v) {
    return ScalarTraits<T>::from_int(static_cast<long>(v));
}

template <class T>
void require_nonzero(const T& v, const char* what) {
    if (ScalarTraits<T>::is_zero(v) || (!ScalarTraits<T>::exact && !(magnitude(v) > 0.0)))
        throw InstanceError(std::string("vanishing ") + what + "; exponents differ by an integer");
}

template <class T>
ProblemInstance make_instance(std::vector<T> omega, std::vector<unsigned> rho);

template <>
inline ProblemInstance make_instance<Complex>(std::vector<Complex> omega, std::vector<unsigned> rho) {
    return ProblemInstance::floating(std::move(omega), std::move(rho));
}

template <>
inline ProblemInstance make_instance<Rational>(std::vector<Rational> omega, std::vector<unsigned> rho) {
    return ProblemInstance::exact(std::move(omega), std::move(rho));
}

/// Π_{k≠m} rising(ω_k - ω_m - r, ρ_k + 1).
template <class T>
T cross_product(const std::vector<T>& omega, std::span<const unsigned> rho, std::size_t m, unsigned r) {
    T acc = one<T>();
    for (std::size_t k = 0; k < omega.size(); ++k) {
        if (k == m) continue;
        T x = omega[k] - omega[m];
        x -= from_unsigned<T>(r);
        acc *= rising_factorial(x, rho[k] + 1);
    }
    return acc;
}

/// Coefficients a_r of H_m = Σ_r a_r (z - 1)^r:
/// a_r = C(ρ_m, r) / ρ_m! / Π_{k≠m} rising(ω_k - ω_m - r, ρ_k + 1).
template <class T>
std::vector<T> explicit_shifted_coeffs(const ProblemInstance& inst, std::size_t m) {
    const auto omega = inst.omega_as<T>();
    const auto& rho = inst.rho();
    const unsigned rm = rho[m];
    const T inv_fact = one<T>() / factorial_as<T>(rm);
    std::vector<T> a(rm + 1);
    for (unsigned r = 0; r <= rm; ++r) {
        const T denom = cross_product(omega, rho, m, r);
        require_nonzero(denom, "rising factorial");
        a[r] = binomial_as<T>(rm, r) * inv_fact / denom;
    }
    return a;
}

}  // namespace detail

/// Coefficients (powers of x) of a terminating pFq(a; b; x). One numerator
/// parameter must be a nonpositive integer -n; the sum stops at x^n.
template <class T>
std::vector<T> terminating_hypergeometric(std::span<const T> numer, std::span<const T> denom) {
    std::optional<std::size_t> stop;
    for (const auto& a : numer) {
        std::optional<long> as_int;
        if constexpr (ScalarTraits<T>::exact) {
            if (a.get_den() == 1 && a.get_num().fits_slong_p()) as_int = a.get_num().get_si();
        } else {
            const double re = static_cast<double>(a.real());
            if (a.imag() == 0 && a.real() == re && re == std::round(re)) as_int = static_cast<long>(re);
        }
        if (as_int && *as_int <= 0) {
            const auto n = static_cast<std::size_t>(-*as_int);
            stop = stop ? std::min(*stop, n) : n;
        }
    }
    if (!stop) throw std::invalid_argument("hypergeometric series does not terminate");

    std::vector<T> c(*stop + 1);
    c[0] = detail::one<T>();
    for (std::size_t n = 0; n < *stop; ++n) {
        T ratio = detail::one<T>();
        const T shift = detail::from_unsigned<T>(n);
        for (const auto& a : numer) {
            T f = a + shift;
            ratio *= f;
        }
        for (const auto& b : denom) {
            T f = b + shift;
            detail::require_nonzero(f, "hypergeometric denominator");
            ratio /= f;
        }
        ratio /= detail::from_unsigned<T>(n + 1);
        c[n + 1] = c[n] * ratio;
    }
    return c;
}

/// H_m as (1/ρ_m!) Σ_r (z-1)^r C(ρ_m, r) Π_{k≠m} 1 / rising(ω_k - ω_m - r, ρ_k + 1),
/// expanded into powers of z.
template <class T>
Polynomial<T> approximant_explicit(const ProblemInstance& inst, std::size_t m) {
    detail::check_index(inst, m);
    return from_shifted_basis(detail::explicit_shifted_coeffs<T>(inst, m));
}

/// H_m as a scaled (M+1)F(M) evaluated at 1 - z, with numerator parameters
/// ω_m - ω_k - ρ_k and denominator parameters 1 + ω_m - ω_k (k ≠ m).
template <class T>
Polynomial<T> approximant_hypergeometric(const ProblemInstance& inst, std::size_t m) {
    detail::check_index(inst, m);
    const auto omega = inst.omega_as<T>();
    const auto& rho = inst.rho();

    T prefactor = detail::one<T>() / factorial_as<T>(rho[m]);
    std::vector<T> numer;
    std::vector<T> denom;
    for (std::size_t k = 0; k < inst.size(); ++k) {
        T a = omega[m] - omega[k];
        a -= detail::from_unsigned<T>(rho[k]);
        numer.push_back(a);
        if (k == m) continue;
        T diff = omega[k] - omega[m];
        T rf = rising_factorial(diff, rho[k] + 1);
        detail::require_nonzero(rf, "rising factorial");
        prefactor /= rf;
        T b = detail::one<T>() + omega[m];
        b -= omega[k];
        denom.push_back(b);
    }

    // (1 - z)^n = (-1)^n (z - 1)^n
    auto c = terminating_hypergeometric<T>(numer, denom);
    for (std::size_t n = 0; n < c.size(); ++n) {
        c[n] *= prefactor;
        if (n % 2 == 1) c[n] = -c[n];
    }
    return from_shifted_basis(c);
}

/// H_m through Γ-function ratios and the reflection factor π / sin(πW).
/// Float only; throws PoleError if a Γ argument lands on a pole.
Polynomial<Complex> approximant_gamma_form(const ProblemInstance& inst, std::size_t m);

/// The factor C_{m,k,r} of the Γ-ratio form.
Complex gamma_form_factor(const ProblemInstance& inst, std::size_t m, std::size_t k, unsigned r);

/// M = 0 system: H_0 = z^{ρ_0} / ρ_0!.
template <class T>
PadeSystem<T> base_case(const T& omega0, unsigned rho0) {
    PadeSystem<T> sys{detail::make_instance<T>({omega0}, {rho0}), {}, rho0 + 1, Source::explicit_sum};
    sys.H.push_back(Polynomial<T>::monomial(rho0, detail::one<T>() / factorial_as<T>(rho0)));
    return sys;
}

/// Maclaurin coefficients c_n = g_n / n! of the remainder G through z^N, with
/// g_n = (-1)^n Σ_m (1/ρ_m!) Σ_r C(ρ_m, r) (-1)^r falling(ω_m + r, n)
///       / Π_{k≠m} rising(ω_k - ω_m - r, ρ_k + 1).
template <class T>
TruncatedSeries<T> remainder_series(const ProblemInstance& inst, std::size_t order) {
    if (order + 1 < inst.sigma()) throw TruncationError("remainder series needs order >= sigma - 1");
    const auto omega = inst.omega_as<T>();
    const auto& rho = inst.rho();

    // weight[m][r] = (1/ρ_m!) C(ρ_m, r) (-1)^r / Π_{k≠m} rising(...)
    std::vector<std::vector<T>> weight(inst.size());
    for (std::size_t m = 0; m < inst.size(); ++m) {
        const T inv_fact = detail::one<T>() / factorial_as<T>(rho[m]);
        for (unsigned r = 0; r <= rho[m]; ++r) {
            const T denom = detail::cross_product(omega, rho, m, r);
            detail::require_nonzero(denom, "rising factorial");
            T w = inv_fact * binomial_as<T>(rho[m], r) / denom;
            if (r % 2 == 1) w = -w;
            weight[m].push_back(w);
        }
    }

    std::vector<T> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        T g = ScalarTraits<T>::from_int(0);
        for (std::size_t m = 0; m < inst.size(); ++m) {
            for (unsigned r = 0; r <= rho[m]; ++r) {
                T x = omega[m] + detail::from_unsigned<T>(r);
                g += weight[m][r] * falling_factorial(x, static_cast<unsigned>(n));
            }
        }
        if (n % 2 == 1) g = -g;
        c[n] = g / factorial_as<T>(static_cast<unsigned>(n));
    }
    return TruncatedSeries<T>(std::move(c));
}

/// G = Σ_m H_m(z) (1-z)^{ω_m} through z^N, with H_m from the explicit sum.
template <class T>
TruncatedSeries<T> remainder_from_approximants(const ProblemInstance& inst, std::size_t order) {
    const auto omega = inst.omega_as<T>();
    auto total = TruncatedSeries<T>::zero(order);
    for (std::size_t m = 0; m < inst.size(); ++m) {
        const auto h = approximant_explicit<T>(inst, m);
        total = series_add(total, poly_mul_series(h, binomial_series(omega[m], order)));
    }
    return total;
}

/// Brute-force construction: all σ coefficients of all H_m as unknowns, the
/// z^0..z^{σ-2} coefficients of Σ H_m (1-z)^{ω_m} set to zero, and the z^{σ-1}
/// coefficient set to 1/(σ-1)!. One dense σ×σ solve; for Complex the solve
/// runs in Extended precision and the result is rounded, since the system is
/// too ill-conditioned for double elimination once σ reaches the high teens.
template <class T>
PadeSystem<T> oracle_linear_solve(const ProblemInstance& inst, std::size_t order) {
    if constexpr (std::is_same_v<T, Complex>) {
        const auto wide = oracle_linear_solve<Extended>(inst, order);
        PadeSystem<Complex> sys{inst, {}, wide.sigma, Source::oracle};
        for (const auto& h : wide.H) sys.H.push_back(to_double(h));
        return sys;
    }
    const unsigned sig = inst.sigma();
    if (order + 1 < sig) throw TruncationError("oracle needs order >= sigma - 1");
    const auto omega = inst.omega_as<T>();
    const auto& rho = inst.rho();

    Matrix<T> a(sig);
    std::size_t col = 0;
    for (std::size_t m = 0; m < inst.size(); ++m) {
        const auto b = binomial_series(omega[m], order);
        for (unsigned j = 0; j <= rho[m]; ++j, ++col)
            for (unsigned i = j; i < sig; ++i) a(i, col) = b[i - j];
    }
    std::vector<T> rhs(sig, ScalarTraits<T>::from_int(0));
    rhs[sig - 1] = detail::one<T>() / factorial_as<T>(sig - 1);

    const auto x = solve_linear(std::move(a), std::move(rhs));

    PadeSystem<T> sys{inst, {}, sig, Source::oracle};
    std::size_t at = 0;
    for (std::size_t m = 0; m < inst.size(); ++m) {
        std::vector<T> h(x.begin() + static_cast<std::ptrdiff_t>(at),
                         x.begin() + static_cast<std::ptrdiff_t>(at + rho[m] + 1));
        at += rho[m] + 1;
        sys.H.emplace_back(std::move(h));
    }
    return sys;
}

/// All H_m from one closed form. Source::oracle delegates to oracle_linear_solve.
template <class T>
PadeSystem<T> build_system(const ProblemInstance& inst, Source source) {
    if (source == Source::oracle) return oracle_linear_solve<T>(inst, default_truncation(inst));
    PadeSystem<T> sys{inst, {}, inst.sigma(), source};
    for (std::size_t m = 0; m < inst.size(); ++m) {
        switch (source) {
            case Source::explicit_sum: sys.H.push_back(approximant_explicit<T>(inst, m)); break;
            case Source::hypergeometric: sys.H.push_back(approximant_hypergeometric<T>(inst, m)); break;
            case Source::gamma_form:
                if constexpr (!std::is_same_v<T, Complex>)
                    throw InstanceError("the gamma-ratio form is evaluated in double precision only");
                else
                    sys.H.push_back(approximant_gamma_form(inst, m));
                break;
            case Source::oracle: break;
        }
    }
    return sys;
}

/// Largest coefficient difference between two systems, divided by the largest
/// coefficient magnitude of the first.
template <class T>
double max_relative_deviation(const std::vector<Polynomial<T>>& a, const std::vector<Polynomial<T>>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("systems differ in size");
    double scale = 0.0;
    double dev = 0.0;
    for (std::size_t m = 0; m < a.size(); ++m) {
        scale = std::max(scale, a[m].max_magnitude());
        const std::size_t n = std::max(a[m].size(), b[m].size());
        for (std::size_t k = 0; k < n; ++k) {
            T d = a[m].coeff(k) - b[m].coeff(k);
            dev = std::max(dev, magnitude(d));
        }
    }
    return scale > 0.0 ? dev / scale : dev;
}

template <class T>
double max_series_deviation(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    const std::size_t n = std::min(a.order(), b.order());
    double dev = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
        T d = a[k] - b[k];
        dev = std::max(dev, magnitude(d));
    }
    return dev;
}

/// Defining properties of one system, measured.
struct ContractReport {
    bool degrees_exact = false;          ///< deg H_m == ρ_m for all m
    std::optional<std::size_t> order;    ///< series order of Σ H_m (1-z)^{ω_m}
    double normalization_error = 0.0;    ///< |(σ-1)! c_{σ-1} - 1|
    bool order_ok = false;               ///< order == σ - 1
};

/// A float coefficient c_n counts as vanishing when |c_n| <= order_tol times
/// Σ_m max_j |h_{m,j}| Σ_j |b_{m,n-j}|, the magnitude of the terms that cancel
/// in it; exact coefficients must be exactly zero.
template <class T>
ContractReport check_contracts(const PadeSystem<T>& sys, std::size_t order,
                               double order_tol = ScalarTraits<T>::vanishing_tol) {
    ContractReport rep;
    const auto& inst = sys.instance;
    rep.degrees_exact = true;
    for (std::size_t m = 0; m < inst.size(); ++m) {
        const auto deg = sys.H[m].degree();
        if (!deg || *deg != inst.rho()[m]) rep.degrees_exact = false;
    }
    const auto omega = inst.template omega_as<T>();
    auto g = TruncatedSeries<T>::zero(order);
    std::vector<double> mass(order + 1, 0.0);
    for (std::size_t m = 0; m < inst.size(); ++m) {
        const auto b = binomial_series(omega[m], order);
        g = series_add(g, poly_mul_series(sys.H[m], b));
        // The largest coefficient of H_m stands in for each one, so rounding
        // noise in a coefficient that should vanish is not mistaken for signal.
        const double top = sys.H[m].max_magnitude();
        for (std::size_t j = 0; j < sys.H[m].size(); ++j)
            for (std::size_t n = j; n <= order; ++n) mass[n] += top * magnitude(b[n - j]);
    }
    for (std::size_t n = 0; n <= order && !rep.order; ++n) {
        const bool nonzero = ScalarTraits<T>::exact ? !ScalarTraits<T>::is_zero(g[n])
                                                    : magnitude(g[n]) > order_tol * mass[n];
        if (nonzero) rep.order = n;
    }
    rep.order_ok = rep.order && *rep.order + 1 == inst.sigma();
    if (inst.sigma() - 1 <= order) {
        T lead = g[inst.sigma() - 1] * factorial_as<T>(inst.sigma() - 1);
        lead -= detail::one<T>();
        rep.normalization_error = magnitude(lead);
    }
    return rep;
}

/// Exact-mode check that H_0, ..., H_M have no common root. Meaningful for
/// M >= 1; with M = 0 the single polynomial z^ρ/ρ! has its root at 0.
bool no_common_root(const PadeSystem<Rational>& sys);

/// Residuals of the permutation and shift symmetries.
struct SymmetryReport {
    double permutation = 0.0;  ///< H_m(ω, ρ) vs H_{π⁻¹(m)}(πω, πρ), relative
    double shift_approximants = 0.0;  ///< H_m(ω) vs H_m(α + ω), relative
    double shift_remainder = 0.0;     ///< (1-z)^α G(ω) vs G(α + ω), absolute
};

/// perm[i] names the source coordinate of entry i in the permuted instance.
template <class T>
SymmetryReport check_symmetries(const ProblemInstance& inst, const T& alpha, std::span<const std::size_t> perm,
                                std::optional<std::size_t> order = std::nullopt) {
    SymmetryReport rep;
    const std::size_t n_order = order.value_or(default_truncation(inst));
    const auto base = build_system<T>(inst, Source::explicit_sum);

    const auto permuted_inst = inst.permuted(perm);
    const auto permuted = build_system<T>(permuted_inst, Source::explicit_sum);
    // Entry i of the permuted system belongs to original coordinate perm[i].
    std::vector<Polynomial<T>> realigned(inst.size());
    for (std::size_t i = 0; i < inst.size(); ++i) realigned[perm[i]] = permuted.H[i];
    rep.permutation = max_relative_deviation(base.H, realigned);

    const auto moved_inst = inst.shifted(alpha);
    const auto moved = build_system<T>(moved_inst, Source::explicit_sum);
    rep.shift_approximants = max_relative_deviation(base.H, moved.H);

    const auto g = remainder_series<T>(inst, n_order);
    const auto lhs = series_mul(binomial_series(alpha, n_order), g);
    const auto rhs = remainder_series<T>(moved_inst, n_order);
    rep.shift_remainder = max_series_deviation(lhs, rhs);
    return rep;
}

/// d_{ω_0} applied to G(ω, ρ) against the G it should produce: G(ω + e_0, ρ - e_0)
/// when ρ_0 > 0, G(ω*0, ρ*0) when ρ_0 = 0. Returns the max series deviation
/// through order N - 1.
template <class T>
double check_d_omega_recursion(const ProblemInstance& inst, std::size_t order) {
    const auto omega = inst.omega_as<T>();
    const auto g = remainder_series<T>(inst, order);
    const auto lhs = apply_d_omega(g, omega[0]);
    const ProblemInstance target = inst.rho()[0] > 0 ? inst.stepped(0) : inst.without(0);
    const auto rhs = remainder_series<T>(target, order - 1);
    return max_series_deviation(lhs, rhs);
}

}  // namespace pade
