#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pade/instance.hpp"
#include "pade/scalar.hpp"

namespace pade {

/// Knobs shared by every integral representation.
struct QuadratureConfig {
    std::size_t contour_nodes = 2048;     ///< trapezoid nodes per circle
    double circle_radius = 0.0;           ///< big-contour radius; 0 picks max|ω_m + r| + 2
    std::size_t gauss_nodes_per_dim = 64; ///< Gauss–Legendre order per dimension
    std::size_t mc_samples = 1'000'000;
    std::uint64_t seed = 1;
    double rtol = 1e-8;                   ///< node-doubling tolerance
};

/// A quadrature value with its error estimate: the node-doubling difference
/// for deterministic rules, the standard error for Monte Carlo.
struct QuadratureResult {
    Complex value;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

/// Gauss–Legendre nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule gauss_legendre(std::size_t n);

/// Default radius of the contour enclosing every pole ω_m + r.
double default_contour_radius(const ProblemInstance& inst);

/// Remainder G(z) as (-1)^{σ-1}/(2πi) ∮ (1-z)^ξ Π_k 1/falling(ξ - ω_k, ρ_k + 1) dξ
/// over the circle |ξ| = R, by the periodic trapezoid rule.
QuadratureResult remainder_contour(const ProblemInstance& inst, Complex z, const QuadratureConfig& cfg = {});

/// Approximant H_m(z): the same integrand with (1-z)^{ξ - ω_m}, summed over
/// small circles around ω_m + r, 0 <= r <= ρ_m.
QuadratureResult approximant_contour(const ProblemInstance& inst, std::size_t m, Complex z,
                                     const QuadratureConfig& cfg = {});

/// Approximant H_m(z) as the M-fold principal-value integral over unit
/// circles t_k = e^{iθ}, θ in (-π, π), k ≠ m. Requires M >= 1.
QuadratureResult approximant_torus(const ProblemInstance& inst, std::size_t m, Complex z,
                                   const QuadratureConfig& cfg = {});

/// Coordinate order in which Re(ω_h - ω_{h-1}) > 0 for every h, preferring the
/// given order; nullopt when no such order exists.
std::optional<std::vector<std::size_t>> integrable_ordering(const ProblemInstance& inst);

/// Remainder G(z) as the iterated real integral over 0 <= t_M <= ... <= t_1 <= z.
/// z real in (0, 1), 1 <= M <= 3.
QuadratureResult remainder_iterated(const ProblemInstance& inst, double z, const QuadratureConfig& cfg = {});

/// Remainder G(z) as the integral over [0, 1]^M: tensor Gauss–Legendre for
/// M <= 2, Monte Carlo for M >= 3.
QuadratureResult remainder_cube(const ProblemInstance& inst, double z, const QuadratureConfig& cfg = {});

/// Monte Carlo estimate of the unit-cube integral for any M >= 1.
QuadratureResult remainder_cube_monte_carlo(const ProblemInstance& inst, double z, const QuadratureConfig& cfg = {});

}  // namespace pade
