#include "pade/perfection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "pade/errors.hpp"
#include "pade/linalg.hpp"
#include "pade/pade.hpp"

namespace pade {

EpsilonFamily::EpsilonFamily(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (const auto& row : rows_)
        if (row.size() != rows_.size())
            throw InstanceError("epsilon family must have M + 1 rows of length M + 1");
}

EpsilonFamily EpsilonFamily::identity(std::size_t size) {
    std::vector<std::vector<int>> rows(size, std::vector<int>(size, 0));
    for (std::size_t k = 0; k < size; ++k) rows[k][k] = 1;
    return EpsilonFamily(std::move(rows));
}

EpsilonFamily EpsilonFamily::unit_lower(const std::vector<std::vector<std::size_t>>& subsets) {
    auto fam = identity(subsets.size());
    for (std::size_t k = 0; k < subsets.size(); ++k) {
        for (std::size_t i : subsets[k]) {
            if (i >= k) throw InstanceError("unit-lower subsets must only name earlier coordinates");
            fam.rows_[k][i] += 1;
        }
    }
    for (const auto& row : fam.rows_)
        if (std::any_of(row.begin(), row.end(), [](int v) { return v > 1; }))
            throw InstanceError("unit-lower subsets must not repeat an index");
    return fam;
}

EpsilonFamily EpsilonFamily::permuted_columns(std::span<const std::size_t> perm) const {
    if (perm.size() != size()) throw InstanceError("permutation length does not match the family");
    std::vector<std::vector<int>> rows(size(), std::vector<int>(size()));
    for (std::size_t k = 0; k < size(); ++k)
        for (std::size_t i = 0; i < size(); ++i) rows[k][i] = rows_[k][perm[i]];
    return EpsilonFamily(std::move(rows));
}

PermutationMaximum compute_S_and_alpha(const EpsilonFamily& fam) {
    const std::size_t n = fam.size();
    if (n > kMaxPermutationSize) throw SizeError("permutation search is limited to M + 1 <= 10");
    PermutationMaximum out;
    if (n == 0) return out;

    std::vector<std::size_t> beta(n);
    std::iota(beta.begin(), beta.end(), 0);
    std::vector<std::size_t> best;
    std::optional<std::vector<std::size_t>> second;
    int best_sum = std::numeric_limits<int>::min();
    do {
        int s = 0;
        for (std::size_t i = 0; i < n; ++i) s += fam(i, beta[i]);
        if (s > best_sum) {
            best_sum = s;
            best = beta;
            second.reset();
        } else if (s == best_sum && !second) {
            second = beta;
        }
    } while (std::next_permutation(beta.begin(), beta.end()));

    out.S = best_sum;
    if (second)
        out.tie_witnesses = {best, *second};
    else
        out.alpha = best;
    return out;
}

int compute_T(const EpsilonFamily& fam) {
    int t = std::numeric_limits<int>::max();
    for (const auto& row : fam.rows()) t = std::min(t, std::accumulate(row.begin(), row.end(), 0));
    return fam.size() == 0 ? 0 : t;
}

HypothesisReport hypothesis_report(const EpsilonFamily& fam) {
    HypothesisReport rep;
    const auto perm = compute_S_and_alpha(fam);
    rep.S = perm.S;
    rep.T = compute_T(fam);
    rep.M = fam.size() == 0 ? 0 : fam.size() - 1;
    rep.alpha = perm.alpha;
    rep.tie_witnesses = perm.tie_witnesses;
    rep.alpha_unique = perm.alpha.has_value();
    rep.degree_condition = rep.T + static_cast<int>(rep.M) == rep.S;
    rep.satisfied = rep.alpha_unique && rep.degree_condition;
    return rep;
}

namespace {

template <class T>
std::vector<std::vector<Polynomial<T>>> shifted_systems(const ProblemInstance& inst, const EpsilonFamily& fam) {
    std::vector<std::vector<Polynomial<T>>> rows;
    for (std::size_t k = 0; k < fam.size(); ++k) {
        std::vector<unsigned> rho(inst.size());
        for (std::size_t j = 0; j < inst.size(); ++j) {
            const long d = static_cast<long>(inst.rho()[j]) + fam(k, j);
            if (d < 0) throw InstanceError("rho + epsilon_" + std::to_string(k) + " has a negative coordinate");
            rho[j] = static_cast<unsigned>(d);
        }
        const auto shifted = inst.with_rho(std::move(rho));
        rows.push_back(build_system<T>(shifted, Source::explicit_sum).H);
    }
    return rows;
}

template <class T>
T determinant_at(const std::vector<std::vector<Polynomial<T>>>& rows, const T& z) {
    const std::size_t n = rows.size();
    Matrix<T> a(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) a(k, m) = poly_eval_in<T>(rows[k][m], z);
    return determinant(std::move(a));
}

// Fills is_monomial, exponent and residual from complex coefficients.
void classify(DeterminantReport& rep, double tol) {
    const auto& c = rep.coefficients;
    std::size_t lead = 0;
    double top = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k)
        if (std::abs(c[k]) > top) {
            top = std::abs(c[k]);
            lead = k;
        }
    if (top == 0.0) {
        rep.residual = 0.0;
        return;
    }
    double off = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k)
        if (k != lead) off = std::max(off, std::abs(c[k]));
    rep.residual = off / top;
    rep.exponent = lead;
    rep.C = c[lead];
    rep.is_monomial = rep.exact ? off == 0.0 : rep.residual <= tol;
}

void float_determinant(DeterminantReport& rep, const ProblemInstance& inst, const EpsilonFamily& fam,
                       std::size_t points, double radius) {
    // The determinant is a tiny monomial left over after heavy cancellation
    // among the entries, so it is evaluated in Extended precision.
    const auto rows = shifted_systems<Extended>(inst, fam);
    std::vector<Complex> values(points);
    for (std::size_t j = 0; j < points; ++j) {
        const Complex z = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                                 static_cast<double>(points));
        values[j] = ScalarTraits<Extended>::to_complex(determinant_at(rows, to_extended(z)));
    }
    // c_k = r^{-k} (1/N) Σ_j D(z_j) e^{-2πi jk/N}; only degrees <= bound are kept.
    const std::size_t keep = static_cast<std::size_t>(rep.degree_bound) + 1;
    rep.coefficients.assign(keep, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < keep; ++k) {
        Complex acc(0.0, 0.0);
        for (std::size_t j = 0; j < points; ++j) {
            const double angle = -2.0 * std::numbers::pi * static_cast<double>((j * k) % points) /
                                 static_cast<double>(points);
            acc += values[j] * std::polar(1.0, angle);
        }
        rep.coefficients[k] = acc / (static_cast<double>(points) * std::pow(radius, static_cast<double>(k)));
    }
}

void exact_determinant(DeterminantReport& rep, const ProblemInstance& inst, const EpsilonFamily& fam,
                       std::size_t points) {
    const auto rows = shifted_systems<Rational>(inst, fam);
    std::vector<Rational> x(points), y(points);
    for (std::size_t j = 0; j < points; ++j) {
        x[j] = Rational(static_cast<long>(j + 1));
        y[j] = determinant_at(rows, x[j]);
    }
    // Newton divided differences, then expansion into the monomial basis.
    for (std::size_t level = 1; level < points; ++level)
        for (std::size_t j = points - 1; j >= level; --j) y[j] = (y[j] - y[j - 1]) / (x[j] - x[j - level]);
    std::vector<Rational> poly(1, y[points - 1]);
    for (std::size_t j = points - 1; j-- > 0;) {
        // poly <- poly * (z - x_j) + y_j
        std::vector<Rational> next(poly.size() + 1, Rational(0));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= poly[k] * x[j];
        }
        next[0] += y[j];
        poly = std::move(next);
    }
    const std::size_t keep = static_cast<std::size_t>(rep.degree_bound) + 1;
    for (std::size_t k = keep; k < poly.size(); ++k)
        if (sgn(poly[k]) != 0) throw std::logic_error("exact determinant exceeds its degree bound");
    poly.resize(keep, Rational(0));
    rep.coefficients.resize(keep);
    for (std::size_t k = 0; k < keep; ++k) rep.coefficients[k] = Complex(poly[k].get_d(), 0.0);

    std::size_t nonzero = 0, lead = 0;
    for (std::size_t k = 0; k < keep; ++k)
        if (sgn(poly[k]) != 0) {
            ++nonzero;
            lead = k;
        }
    if (nonzero == 1) rep.C_exact = poly[lead];
}

}  // namespace

DeterminantReport determinant_test(const ProblemInstance& inst, const EpsilonFamily& fam, double tol, double radius) {
    if (fam.size() != inst.size()) throw InstanceError("epsilon family size does not match the instance");
    const auto perm = compute_S_and_alpha(fam);

    DeterminantReport rep;
    rep.exact = inst.is_exact();
    rep.degree_bound = static_cast<long>(inst.sigma()) - static_cast<long>(inst.M()) - 1 + perm.S;
    if (rep.degree_bound < 0) throw InstanceError("determinant degree bound is negative");
    const std::size_t points = static_cast<std::size_t>(inst.sigma()) + static_cast<std::size_t>(std::max(perm.S, 0)) + 1;

    if (rep.exact) {
        exact_determinant(rep, inst, fam, points);
        classify(rep, tol);
        if (rep.is_monomial != rep.C_exact.has_value())
            throw std::logic_error("exact determinant classification disagrees with its coefficients");
    } else {
        if (!(radius > 0.0)) throw DomainError("determinant evaluation radius must be positive");
        float_determinant(rep, inst, fam, points, radius);
        classify(rep, tol);
    }
    return rep;
}

std::vector<SweepEntry> sweep_families(const ProblemInstance& inst, int max_entry, std::size_t max_families,
                                       double tol) {
    if (max_entry < 0) throw InstanceError("sweep bound must be nonnegative");
    const std::size_t n = inst.size();
    const std::size_t cells = n * n;
    const double count = std::pow(static_cast<double>(max_entry) + 1.0, static_cast<double>(cells));
    if (count > static_cast<double>(max_families)) throw SizeError("sweep would exceed the family limit");

    std::vector<SweepEntry> out;
    std::vector<int> digits(cells, 0);
    while (true) {
        std::vector<std::vector<int>> rows(n, std::vector<int>(n));
        for (std::size_t c = 0; c < cells; ++c) rows[c / n][c % n] = digits[c];
        EpsilonFamily fam(std::move(rows));
        auto hyp = hypothesis_report(fam);
        auto det = determinant_test(inst, fam, tol);
        out.push_back({std::move(fam), std::move(hyp), std::move(det)});

        std::size_t c = 0;
        while (c < cells && digits[c] == max_entry) digits[c++] = 0;
        if (c == cells) break;
        ++digits[c];
    }
    return out;
}

}  // namespace pade
