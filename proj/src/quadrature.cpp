#include "pade/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "pade/arith.hpp"
#include "pade/errors.hpp"

namespace pade {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// A rule whose node count doubled moved the value by more than rtol|value|
// plus the rounding floor of the sum.
void require_stable(const char* what, Complex coarse, Complex fine, double l1, double rtol) {
    const double diff = std::abs(fine - coarse);
    const double allowed = rtol * std::abs(fine) + 1e3 * kEps * l1;
    if (!(diff <= allowed)) {
        std::ostringstream msg;
        msg << what << ": node doubling changed the value by " << diff << " (allowed " << allowed << ")";
        throw ConvergenceError(msg.str());
    }
}

bool on_branch_cut(Complex z) {
    return z.imag() == 0.0 && z.real() >= 1.0;
}

// Π_k falling(ξ - ω_k, ρ_k + 1)
Complex pole_product(const ProblemInstance& inst, Complex xi) {
    Complex acc(1.0, 0.0);
    for (std::size_t k = 0; k < inst.size(); ++k) {
        const Complex base = xi - inst.omega()[k];
        for (unsigned i = 0; i <= inst.rho()[k]; ++i) acc *= base - static_cast<double>(i);
    }
    return acc;
}

double sign_of_sigma(const ProblemInstance& inst) {
    return (inst.sigma() - 1) % 2 == 0 ? 1.0 : -1.0;
}

double rho_factorial(const ProblemInstance& inst) {
    double f = 1.0;
    for (unsigned r : inst.rho()) f *= std::tgamma(static_cast<double>(r) + 1.0);
    return f;
}

struct Sum {
    Complex value;
    double l1 = 0.0;
};

// Trapezoid rule for (1/2πi) ∮ f over the circle |ξ - center| = radius with
// `nodes` and 2*`nodes` points; the coarse rule reuses every other fine node.
std::pair<Sum, Sum> circle_trapezoid(const std::function<Complex(Complex)>& f, Complex center, double radius,
                                     std::size_t nodes) {
    const std::size_t fine_n = 2 * nodes;
    Sum coarse, fine;
    for (std::size_t j = 0; j < fine_n; ++j) {
        const Complex step = std::polar(radius, 2.0 * kPi * static_cast<double>(j) / static_cast<double>(fine_n));
        const Complex term = f(center + step) * step;
        fine.value += term;
        fine.l1 += std::abs(term);
        if (j % 2 == 0) {
            coarse.value += term;
            coarse.l1 += std::abs(term);
        }
    }
    coarse.value /= static_cast<double>(nodes);
    coarse.l1 /= static_cast<double>(nodes);
    fine.value /= static_cast<double>(fine_n);
    fine.l1 /= static_cast<double>(fine_n);
    return {coarse, fine};
}

}  // namespace

GaussRule gauss_legendre(std::size_t n) {
    if (n == 0) throw std::invalid_argument("gauss_legendre: need at least one node");
    GaussRule rule{std::vector<double>(n), std::vector<double>(n)};
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        double x = std::cos(kPi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (std::size_t j = 1; j <= n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * static_cast<double>(j) - 1.0) * x * p1 - (static_cast<double>(j) - 1.0) * p2) /
                     static_cast<double>(j);
            }
            dp = static_cast<double>(n) * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        // Recompute the derivative at the converged node.
        double p0 = 1.0, p1 = 0.0;
        for (std::size_t j = 1; j <= n; ++j) {
            const double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * static_cast<double>(j) - 1.0) * x * p1 - (static_cast<double>(j) - 1.0) * p2) /
                 static_cast<double>(j);
        }
        dp = static_cast<double>(n) * (x * p0 - p1) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

double default_contour_radius(const ProblemInstance& inst) {
    double r = 0.0;
    for (std::size_t k = 0; k < inst.size(); ++k) {
        const Complex w = inst.omega()[k];
        r = std::max({r, std::abs(w), std::abs(w + static_cast<double>(inst.rho()[k]))});
    }
    return r + 2.0;
}

QuadratureResult remainder_contour(const ProblemInstance& inst, Complex z, const QuadratureConfig& cfg) {
    if (on_branch_cut(z)) throw DomainError("remainder_contour: z lies on the cut [1, inf)");
    const double min_radius = default_contour_radius(inst) - 1.0;
    const double radius = cfg.circle_radius > 0.0 ? cfg.circle_radius : default_contour_radius(inst);
    if (!(radius > min_radius)) throw DomainError("remainder_contour: circle does not clear every pole by 1");

    const Complex log_u = std::log(1.0 - z);
    auto f = [&](Complex xi) { return std::exp(xi * log_u) / pole_product(inst, xi); };
    const auto [coarse, fine] = circle_trapezoid(f, 0.0, radius, cfg.contour_nodes);
    require_stable("remainder_contour", coarse.value, fine.value, fine.l1, cfg.rtol);
    const double sign = sign_of_sigma(inst);
    return {sign * fine.value, std::abs(fine.value - coarse.value), 2 * cfg.contour_nodes};
}

QuadratureResult approximant_contour(const ProblemInstance& inst, std::size_t m, Complex z,
                                     const QuadratureConfig& cfg) {
    if (m >= inst.size()) throw InstanceError("approximant index out of range");
    if (z.imag() == 0.0 && z.real() > 1.0) throw DomainError("approximant_contour: z lies on the cut (1, inf)");
    const Complex omega_m = inst.omega()[m];
    const unsigned rho_m = inst.rho()[m];

    // Every circle gets the same radius: a quarter of the smallest distance from
    // one of its centers to any other pole.
    double gap = std::numeric_limits<double>::infinity();
    for (unsigned r = 0; r <= rho_m; ++r) {
        const Complex center = omega_m + static_cast<double>(r);
        for (std::size_t k = 0; k < inst.size(); ++k)
            for (unsigned i = 0; i <= inst.rho()[k]; ++i) {
                if (k == m && i == r) continue;
                gap = std::min(gap, std::abs(center - (inst.omega()[k] + static_cast<double>(i))));
            }
    }
    const double radius = std::isfinite(gap) ? gap / 4.0 : 0.25;
    if (radius < 1e-6) throw PoleSeparationError("approximant_contour: poles too close to isolate");

    // At z = 1 the factor (1-z)^{ξ-ω_m} = (1-z)^r (1-z)^{ξ-ω_m-r} degenerates. Its
    // limit keeps only the r = 0 circle, where the remaining factor is analytic
    // and equal to 1 at the pole, so the circle integral is taken without it.
    const bool at_one = z == Complex(1.0, 0.0);
    const Complex log_u = at_one ? Complex(0.0, 0.0) : std::log(1.0 - z);

    Complex total(0.0, 0.0), coarse_total(0.0, 0.0);
    double l1 = 0.0;
    for (unsigned r = 0; r <= rho_m; ++r) {
        if (at_one && r > 0) continue;
        const Complex center = omega_m + static_cast<double>(r);
        auto f = [&](Complex xi) { return std::exp((xi - omega_m) * log_u) / pole_product(inst, xi); };
        const auto [coarse, fine] = circle_trapezoid(f, center, radius, cfg.contour_nodes);
        total += fine.value;
        coarse_total += coarse.value;
        l1 += fine.l1;
    }
    require_stable("approximant_contour", coarse_total, total, l1, cfg.rtol);
    const double sign = sign_of_sigma(inst);
    return {sign * total, std::abs(total - coarse_total), 2 * cfg.contour_nodes * (rho_m + 1)};
}

namespace {

// Tensor Gauss–Legendre over (-π, π)^M of the torus integrand; returns the sum
// and its l1 mass.
Sum torus_sum(const ProblemInstance& inst, std::size_t m, Complex z, const GaussRule& rule) {
    std::vector<std::size_t> dims;
    for (std::size_t k = 0; k < inst.size(); ++k)
        if (k != m) dims.push_back(k);
    const std::size_t n = rule.nodes.size();

    // Per-dimension factor i e^{iθ W_k} (1 + e^{iθ})^{ρ_k}: this is
    // t_k^{ω_k} t_k^{-ω_m-1} (1 + t_k)^{ρ_k} dt_k/dθ with principal-value powers.
    std::vector<std::vector<Complex>> factor(dims.size(), std::vector<Complex>(n));
    std::vector<double> theta(n), weight(n);
    for (std::size_t j = 0; j < n; ++j) {
        theta[j] = kPi * rule.nodes[j];
        weight[j] = kPi * rule.weights[j];
    }
    for (std::size_t d = 0; d < dims.size(); ++d) {
        const std::size_t k = dims[d];
        const Complex w = inst.omega()[k] - inst.omega()[m];
        for (std::size_t j = 0; j < n; ++j) {
            const Complex t = std::polar(1.0, theta[j]);
            factor[d][j] = Complex(0.0, 1.0) * std::exp(Complex(0.0, theta[j]) * w) *
                           std::pow(1.0 + t, static_cast<int>(inst.rho()[k]));
        }
    }

    const double sign_m = dims.size() % 2 == 0 ? 1.0 : -1.0;  // (-1)^M
    const Complex u = 1.0 - z;
    const int rho_m = static_cast<int>(inst.rho()[m]);

    Sum total;
    std::vector<std::size_t> idx(dims.size(), 0);
    const std::size_t count = static_cast<std::size_t>(std::pow(static_cast<double>(n), static_cast<double>(dims.size())));
    for (std::size_t flat = 0; flat < count; ++flat) {
        std::size_t rem = flat;
        Complex prod(1.0, 0.0);
        double phase = 0.0;
        double w = 1.0;
        for (std::size_t d = 0; d < dims.size(); ++d) {
            const std::size_t j = rem % n;
            rem /= n;
            prod *= factor[d][j];
            phase += theta[j];
            w *= weight[j];
        }
        // (1 - (-1)^M (1-z) / T_m)^{ρ_m}, T_m = e^{iΣθ}
        const Complex inner = 1.0 - sign_m * u * std::polar(1.0, -phase);
        const Complex term = w * prod * std::pow(inner, rho_m);
        total.value += term;
        total.l1 += std::abs(term);
    }
    return total;
}

}  // namespace

QuadratureResult approximant_torus(const ProblemInstance& inst, std::size_t m, Complex z,
                                   const QuadratureConfig& cfg) {
    if (inst.M() < 1) throw DomainError("approximant_torus: needs M >= 1");
    if (m >= inst.size()) throw InstanceError("approximant index out of range");

    Complex q(1.0, 0.0);
    for (std::size_t k = 0; k < inst.size(); ++k) {
        if (k == m) continue;
        q /= Complex(0.0, 2.0) * sin_pi(inst.omega()[k] - inst.omega()[m]);
    }
    const Complex scale = q / rho_factorial(inst);

    const std::size_t n = cfg.gauss_nodes_per_dim;
    const Sum coarse = torus_sum(inst, m, z, gauss_legendre(n));
    const Sum fine = torus_sum(inst, m, z, gauss_legendre(2 * n));
    require_stable("approximant_torus", coarse.value, fine.value, fine.l1, cfg.rtol);
    const auto evals = static_cast<std::size_t>(std::pow(static_cast<double>(n), static_cast<double>(inst.M())) *
                                                (1.0 + std::pow(2.0, static_cast<double>(inst.M()))));
    return {scale * fine.value, std::abs(scale * (fine.value - coarse.value)), evals};
}

std::optional<std::vector<std::size_t>> integrable_ordering(const ProblemInstance& inst) {
    auto ok = [&](const std::vector<std::size_t>& order) {
        for (std::size_t h = 1; h < order.size(); ++h)
            if (!(inst.omega()[order[h]].real() - inst.omega()[order[h - 1]].real() > 0.0)) return false;
        return true;
    };
    std::vector<std::size_t> order(inst.size());
    std::iota(order.begin(), order.end(), 0);
    if (ok(order)) return order;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return inst.omega()[a].real() < inst.omega()[b].real(); });
    if (ok(order)) return order;
    return std::nullopt;
}

namespace {

ProblemInstance integrable_instance(const ProblemInstance& inst, const char* what) {
    const auto order = integrable_ordering(inst);
    if (!order)
        throw DomainError(std::string(what) + ": no ordering of omega has increasing real parts");
    return inst.permuted(*order);
}

void check_real_probe(double z, const char* what) {
    if (!(z > 0.0 && z < 1.0)) throw DomainError(std::string(what) + ": z must lie in (0, 1)");
}

// Nested Gauss–Legendre over the simplex 0 <= t_M <= ... <= t_1 <= z.
Sum iterated_sum(const ProblemInstance& inst, double z, const GaussRule& rule) {
    const std::size_t levels = inst.M();
    const auto& omega = inst.omega();
    const auto& rho = inst.rho();
    Sum total;

    std::function<void(std::size_t, double, Complex, double)> descend = [&](std::size_t h, double t_prev, Complex acc,
                                                                            double w_acc) {
        if (h > levels) {
            // t_prev is t_M here.
            const Complex term = w_acc * acc * std::pow(t_prev, static_cast<int>(rho[levels]));
            total.value += term;
            total.l1 += std::abs(term);
            return;
        }
        const Complex expo = omega[h] - omega[h - 1] - 1.0;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            const double t = 0.5 * t_prev * (rule.nodes[j] + 1.0);
            const double w = 0.5 * t_prev * rule.weights[j];
            const double ratio = (t_prev - t) / (1.0 - t);
            const Complex factor = std::pow(ratio, static_cast<int>(rho[h - 1])) * std::exp(expo * std::log1p(-t));
            descend(h + 1, t, acc * factor, w_acc * w);
        }
    };
    descend(1, z, Complex(1.0, 0.0), 1.0);
    return total;
}

// Integrand of the unit-cube form at u (length M), without the prefactor.
Complex cube_integrand(const ProblemInstance& inst, double z, const std::vector<double>& u) {
    const auto& omega = inst.omega();
    const auto& rho = inst.rho();
    const std::size_t levels = inst.M();
    Complex acc(1.0, 0.0);
    double big_u = 1.0;
    for (std::size_t h = 1; h <= levels; ++h) {
        big_u *= u[h - 1];
        const double one_minus = 1.0 - z * big_u;
        // U_M^{-1} Π_h U_h^{1+ρ_h} = Π_h U_h^{ρ_h} · Π_{h<M} U_h
        double power = std::pow(big_u, static_cast<int>(rho[h]));
        if (h < levels) power *= big_u;
        const double ratio = (1.0 - u[h - 1]) / one_minus;
        const Complex expo = omega[h] - omega[h - 1] - 1.0;
        acc *= power * std::pow(ratio, static_cast<int>(rho[h - 1])) * std::exp(expo * std::log(one_minus));
    }
    return acc;
}

Sum cube_gauss_sum(const ProblemInstance& inst, double z, const GaussRule& rule) {
    const std::size_t dims = inst.M();
    const std::size_t n = rule.nodes.size();
    std::vector<double> node01(n), weight01(n);
    for (std::size_t j = 0; j < n; ++j) {
        node01[j] = 0.5 * (rule.nodes[j] + 1.0);
        weight01[j] = 0.5 * rule.weights[j];
    }
    Sum total;
    std::vector<double> u(dims);
    const std::size_t count = static_cast<std::size_t>(std::pow(static_cast<double>(n), static_cast<double>(dims)));
    for (std::size_t flat = 0; flat < count; ++flat) {
        std::size_t rem = flat;
        double w = 1.0;
        for (std::size_t d = 0; d < dims; ++d) {
            const std::size_t j = rem % n;
            rem /= n;
            u[d] = node01[j];
            w *= weight01[j];
        }
        const Complex term = w * cube_integrand(inst, z, u);
        total.value += term;
        total.l1 += std::abs(term);
    }
    return total;
}

Complex real_prefactor(const ProblemInstance& inst, double z) {
    return std::exp(inst.omega()[0] * std::log1p(-z)) / rho_factorial(inst);
}

}  // namespace

QuadratureResult remainder_iterated(const ProblemInstance& inst, double z, const QuadratureConfig& cfg) {
    check_real_probe(z, "remainder_iterated");
    if (inst.M() < 1 || inst.M() > 3) throw DomainError("remainder_iterated: supports 1 <= M <= 3");
    const ProblemInstance ordered = integrable_instance(inst, "remainder_iterated");

    const std::size_t n = cfg.gauss_nodes_per_dim;
    const Sum coarse = iterated_sum(ordered, z, gauss_legendre(n));
    const Sum fine = iterated_sum(ordered, z, gauss_legendre(2 * n));
    require_stable("remainder_iterated", coarse.value, fine.value, fine.l1, cfg.rtol);
    const Complex pre = real_prefactor(ordered, z);
    const auto evals = static_cast<std::size_t>(std::pow(static_cast<double>(n), static_cast<double>(inst.M())) *
                                                (1.0 + std::pow(2.0, static_cast<double>(inst.M()))));
    return {pre * fine.value, std::abs(pre * (fine.value - coarse.value)), evals};
}

QuadratureResult remainder_cube(const ProblemInstance& inst, double z, const QuadratureConfig& cfg) {
    check_real_probe(z, "remainder_cube");
    if (inst.M() < 1) throw DomainError("remainder_cube: needs M >= 1");
    if (inst.M() >= 3) return remainder_cube_monte_carlo(inst, z, cfg);
    const ProblemInstance ordered = integrable_instance(inst, "remainder_cube");

    const std::size_t n = cfg.gauss_nodes_per_dim;
    const Sum coarse = cube_gauss_sum(ordered, z, gauss_legendre(n));
    const Sum fine = cube_gauss_sum(ordered, z, gauss_legendre(2 * n));
    require_stable("remainder_cube", coarse.value, fine.value, fine.l1, cfg.rtol);
    const Complex pre = std::pow(z, static_cast<int>(inst.sigma() - 1)) * real_prefactor(ordered, z);
    const auto evals = static_cast<std::size_t>(std::pow(static_cast<double>(n), static_cast<double>(inst.M())) *
                                                (1.0 + std::pow(2.0, static_cast<double>(inst.M()))));
    return {pre * fine.value, std::abs(pre * (fine.value - coarse.value)), evals};
}

QuadratureResult remainder_cube_monte_carlo(const ProblemInstance& inst, double z, const QuadratureConfig& cfg) {
    check_real_probe(z, "remainder_cube_monte_carlo");
    if (inst.M() < 1) throw DomainError("remainder_cube_monte_carlo: needs M >= 1");
    if (cfg.mc_samples < 2) throw std::invalid_argument("remainder_cube_monte_carlo: need at least two samples");
    const ProblemInstance ordered = integrable_instance(inst, "remainder_cube_monte_carlo");

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<double> u(inst.M());
    // Welford running mean and sum of squared deviations.
    Complex mean(0.0, 0.0);
    double m2 = 0.0;
    for (std::size_t s = 1; s <= cfg.mc_samples; ++s) {
        for (auto& x : u) x = uniform(rng);
        const Complex f = cube_integrand(ordered, z, u);
        const Complex delta = f - mean;
        mean += delta / static_cast<double>(s);
        m2 += std::real(std::conj(delta) * (f - mean));
    }
    const double n = static_cast<double>(cfg.mc_samples);
    const double std_error = std::sqrt(m2 / (n - 1.0) / n);
    const double pre = std::abs(std::pow(z, static_cast<int>(inst.sigma() - 1)) * real_prefactor(ordered, z));
    const Complex value = std::pow(z, static_cast<int>(inst.sigma() - 1)) * real_prefactor(ordered, z) * mean;
    return {value, pre * std_error, cfg.mc_samples};
}

}  // namespace pade
