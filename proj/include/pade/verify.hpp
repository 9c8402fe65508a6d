#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pade/instance.hpp"
#include "pade/quadrature.hpp"

namespace pade {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus status);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    std::optional<double> residual;
    double tolerance = 0.0;
    std::string detail;
    double milliseconds = 0.0;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> warnings;

    bool passed() const;
    /// The failing (or, when none fails, the passing) check with the largest
    /// residual relative to its tolerance.
    const CheckResult* worst() const;
};

/// Tolerances of the verification suite; every one is pinned here.
struct VerifyOptions {
    std::optional<std::size_t> truncation;      ///< series order N, default σ + 16
    double coefficient_tol = 1e-8;              ///< oracle and cross-formula agreement
    double normalization_tol = 1e-9;
    double series_tol = 1e-9;
    double d_omega_tol = 1e-8;
    double symmetry_tol = 1e-10;
    double contour_tol = 1e-6;
    double radius_tol = 1e-8;
    double torus_tol = 1e-4;
    double real_integral_tol = 1e-6;
    QuadratureConfig quadrature;
};

/// Runs every applicable check: oracle and cross-formula agreement, degree,
/// vanishing order and normalization, series identity, d_ω recursion,
/// symmetries, the common-root test in exact mode, and the quadrature forms
/// when M <= 2 and their guards hold.
VerificationReport verify_instance(const ProblemInstance& inst, const VerifyOptions& opts = {});

}  // namespace pade
