#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pade/scalar.hpp"

namespace pade {

enum class Mode { floating, exact };

/// Two exponents count as an integer apart when the imaginary part of their
/// difference and the distance of its real part to the nearest integer are
/// both below this.
inline constexpr double kIntegerDifferenceTolerance = 1e-9;

/// Above this σ the float closed forms lose enough digits to warrant a warning.
inline constexpr unsigned kConditioningSigma = 40;

/// Σ (ρ_m + 1).
unsigned sigma(std::span<const unsigned> rho);

/// Exponent vector ω and degree vector ρ of one Padé problem. Construction
/// validates that no two exponents differ by an integer.
class ProblemInstance {
public:
    static ProblemInstance floating(std::vector<Complex> omega, std::vector<unsigned> rho);
    /// Rational exponents; every closed form can then run in exact arithmetic.
    static ProblemInstance exact(std::vector<Rational> omega, std::vector<unsigned> rho);

    Mode mode() const noexcept { return mode_; }
    bool is_exact() const noexcept { return mode_ == Mode::exact; }

    /// Number of exponents, M + 1.
    std::size_t size() const noexcept { return rho_.size(); }
    std::size_t M() const noexcept { return rho_.size() - 1; }

    const std::vector<Complex>& omega() const noexcept { return omega_; }
    /// Throws InstanceError for floating instances.
    const std::vector<Rational>& omega_exact() const;
    const std::vector<unsigned>& rho() const noexcept { return rho_; }
    unsigned sigma() const noexcept { return pade::sigma(rho_); }

    /// ω in the scalar field T (Complex or Rational).
    template <class T>
    std::vector<T> omega_as() const;

    /// Same ω, different degrees.
    ProblemInstance with_rho(std::vector<unsigned> rho) const;
    /// α + ω; stays exact when both are exact.
    ProblemInstance shifted(const Complex& alpha) const;
    ProblemInstance shifted(const Rational& alpha) const;
    /// Coordinates reordered so that entry i of the result is entry perm[i] here.
    ProblemInstance permuted(std::span<const std::size_t> perm) const;
    /// Drops coordinate i.
    ProblemInstance without(std::size_t i) const;
    /// ω + e_i and ρ - e_i; requires ρ_i > 0.
    ProblemInstance stepped(std::size_t i) const;

    /// Float copy of an exact instance.
    ProblemInstance as_floating() const;

    bool needs_conditioning_warning() const noexcept {
        return mode_ == Mode::floating && sigma() > kConditioningSigma;
    }

private:
    ProblemInstance() = default;
    void validate() const;

    Mode mode_ = Mode::floating;
    std::vector<Complex> omega_;
    std::vector<Rational> omega_exact_;
    std::vector<unsigned> rho_;
};

template <>
inline std::vector<Complex> ProblemInstance::omega_as<Complex>() const {
    return omega_;
}

template <>
inline std::vector<Extended> ProblemInstance::omega_as<Extended>() const {
    std::vector<Extended> out;
    for (const auto& w : omega_) out.push_back(to_extended(w));
    return out;
}

template <>
inline std::vector<Rational> ProblemInstance::omega_as<Rational>() const {
    return omega_exact();
}

}  // namespace pade
