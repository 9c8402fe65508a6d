#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pade/instance.hpp"
#include "pade/scalar.hpp"

namespace pade {

/// Degree shifts ε_0, ..., ε_M, each a vector of length M + 1. Row k shifts
/// the degree vector of the k-th system in the determinant matrix.
class EpsilonFamily {
public:
    EpsilonFamily() = default;
    /// Throws InstanceError unless the rows form a square matrix.
    explicit EpsilonFamily(std::vector<std::vector<int>> rows);

    /// ε_k = e_k.
    static EpsilonFamily identity(std::size_t size);
    /// ε_k = e_k + Σ_{i in subsets[k]} e_i with every i < k.
    static EpsilonFamily unit_lower(const std::vector<std::vector<std::size_t>>& subsets);

    std::size_t size() const noexcept { return rows_.size(); }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    int operator()(std::size_t k, std::size_t j) const { return rows_[k][j]; }

    /// Columns reordered like ProblemInstance::permuted: column i of the result
    /// is column perm[i] here.
    EpsilonFamily permuted_columns(std::span<const std::size_t> perm) const;

private:
    std::vector<std::vector<int>> rows_;
};

/// Largest admissible M + 1 for brute-force permutation search.
inline constexpr std::size_t kMaxPermutationSize = 10;

struct PermutationMaximum {
    int S = 0;
    /// The unique maximizing permutation (row i -> column alpha[i]), if unique.
    std::optional<std::vector<std::size_t>> alpha;
    /// Two distinct maximizers when the maximum is tied.
    std::vector<std::vector<std::size_t>> tie_witnesses;
};

/// S = max_β Σ_i ε_{i,β(i)} over all permutations, with exact uniqueness.
/// Throws SizeError above kMaxPermutationSize.
PermutationMaximum compute_S_and_alpha(const EpsilonFamily& fam);

/// T = min_i Σ_j ε_{i,j}.
int compute_T(const EpsilonFamily& fam);

struct HypothesisReport {
    int S = 0;
    int T = 0;
    std::size_t M = 0;
    std::optional<std::vector<std::size_t>> alpha;
    std::vector<std::vector<std::size_t>> tie_witnesses;
    bool alpha_unique = false;
    bool degree_condition = false;  ///< T + M == S
    bool satisfied = false;
    int gap() const noexcept { return S - T - static_cast<int>(M); }
};

HypothesisReport hypothesis_report(const EpsilonFamily& fam);

/// Measured determinant of the matrix with (k, m) entry H_m(z; ω, ρ + ε_k).
struct DeterminantReport {
    bool exact = false;
    bool is_monomial = false;
    std::optional<std::size_t> exponent;
    std::optional<Complex> C;
    std::optional<Rational> C_exact;
    /// Largest off-monomial coefficient over the largest coefficient.
    double residual = 0.0;
    /// σ(ρ) - M - 1 + S, the degree bound of the determinant.
    long degree_bound = 0;
    /// Monomial-basis coefficients of the determinant (converted for exact runs).
    std::vector<Complex> coefficients;
};

inline constexpr double kMonomialTolerance = 1e-7;

/// Evaluates the determinant at degree_bound + 1 or more points and
/// interpolates: a circle of the given radius with an inverse DFT in float
/// mode, the integers 1, 2, ... with Newton interpolation in exact mode.
/// Throws InstanceError when some ρ + ε_k has a negative coordinate or sizes
/// disagree, SizeError above kMaxPermutationSize.
DeterminantReport determinant_test(const ProblemInstance& inst, const EpsilonFamily& fam,
                                   double tol = kMonomialTolerance, double radius = 0.5);

/// One family of an exhaustive sweep.
struct SweepEntry {
    EpsilonFamily family;
    HypothesisReport hypothesis;
    DeterminantReport determinant;
};

/// Runs determinant_test on every family with entries in [0, max_entry] whose
/// shifted degrees stay nonnegative. Throws SizeError when that would exceed
/// max_families families.
std::vector<SweepEntry> sweep_families(const ProblemInstance& inst, int max_entry, std::size_t max_families = 4096,
                                       double tol = kMonomialTolerance);

}  // namespace pade
