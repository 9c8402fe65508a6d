#include "pade/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>

#include "pade/errors.hpp"
#include "pade/pade.hpp"

namespace pade {

std::string to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "unknown";
}

bool VerificationReport::passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

const CheckResult* VerificationReport::worst() const {
    const CheckResult* best = nullptr;
    double best_ratio = -1.0;
    const bool any_fail = !passed();
    for (const auto& c : checks) {
        if (c.status == CheckStatus::skipped) continue;
        if (any_fail && c.status != CheckStatus::fail) continue;
        double ratio = 0.0;
        if (c.residual) ratio = c.tolerance > 0.0 ? *c.residual / c.tolerance : (*c.residual > 0.0 ? INFINITY : 0.0);
        if (c.status == CheckStatus::fail && !c.residual) ratio = INFINITY;
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best = &c;
        }
    }
    return best;
}

namespace {

class Suite {
public:
    explicit Suite(VerificationReport& report) : report_(report) {}

    /// Runs `body`, which returns a residual; passes when it is within tol.
    void measure(const std::string& name, double tol, const std::function<double()>& body) {
        CheckResult c{name, CheckStatus::fail, std::nullopt, tol, "", 0.0};
        timed(c, [&] {
            const double r = body();
            c.residual = r;
            c.status = r <= tol ? CheckStatus::pass : CheckStatus::fail;
        });
        report_.checks.push_back(std::move(c));
    }

    /// Runs `body`, which returns a verdict and fills in a detail line.
    void verdict(const std::string& name, const std::function<bool(std::string&)>& body) {
        CheckResult c{name, CheckStatus::fail, std::nullopt, 0.0, "", 0.0};
        timed(c, [&] { c.status = body(c.detail) ? CheckStatus::pass : CheckStatus::fail; });
        report_.checks.push_back(std::move(c));
    }

    void skip(const std::string& name, const std::string& why) {
        report_.checks.push_back({name, CheckStatus::skipped, std::nullopt, 0.0, why, 0.0});
    }

private:
    template <class F>
    void timed(CheckResult& c, F&& f) {
        const auto start = std::chrono::steady_clock::now();
        try {
            f();
        } catch (const std::exception& err) {
            c.status = CheckStatus::fail;
            c.detail = err.what();
        }
        c.milliseconds = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }

    VerificationReport& report_;
};

template <class T>
T shift_amount();

template <>
Complex shift_amount<Complex>() {
    return Complex(0.37, -0.21);
}

template <>
Rational shift_amount<Rational>() {
    return Rational(2, 7);
}

template <class T>
void run_algebraic(const ProblemInstance& inst, const VerifyOptions& opts, Suite& suite) {
    constexpr bool exact = ScalarTraits<T>::exact;
    const std::size_t order = opts.truncation.value_or(default_truncation(inst));
    const double coeff_tol = exact ? 0.0 : opts.coefficient_tol;
    const auto base = build_system<T>(inst, Source::explicit_sum);

    suite.measure("oracle", coeff_tol, [&] {
        return max_relative_deviation(base.H, oracle_linear_solve<T>(inst, std::max(order, std::size_t{inst.sigma()})).H);
    });
    suite.measure("hypergeometric", coeff_tol,
                  [&] { return max_relative_deviation(base.H, build_system<T>(inst, Source::hypergeometric).H); });
    if constexpr (exact) {
        suite.skip("gamma-form", "no exact evaluation of the gamma-ratio form");
    } else {
        suite.measure("gamma-form", coeff_tol,
                      [&] { return max_relative_deviation(base.H, build_system<T>(inst, Source::gamma_form).H); });
    }

    const std::size_t contract_order = std::max(order, std::size_t{inst.sigma()});
    // The vanishing coefficients cancel to many orders of magnitude below the
    // terms that form them, so float instances are checked in Extended precision.
    const auto contracts = [&] {
        if constexpr (exact)
            return check_contracts(base, contract_order);
        else
            return check_contracts(build_system<Extended>(inst, Source::explicit_sum), contract_order);
    }();
    suite.verdict("degrees", [&](std::string& detail) {
        detail = contracts.degrees_exact ? "deg H_m = rho_m" : "some deg H_m differs from rho_m";
        return contracts.degrees_exact;
    });
    suite.verdict("vanishing-order", [&](std::string& detail) {
        detail = contracts.order ? "order " + std::to_string(*contracts.order) : "no nonzero coefficient";
        detail += ", expected " + std::to_string(inst.sigma() - 1);
        return contracts.order_ok;
    });
    suite.measure("normalization", exact ? 0.0 : opts.normalization_tol,
                  [&] { return contracts.normalization_error; });

    suite.measure("series-identity", exact ? 0.0 : opts.series_tol, [&] {
        return max_series_deviation(remainder_series<T>(inst, order), remainder_from_approximants<T>(inst, order));
    });

    if (inst.rho()[0] == 0 && inst.M() == 0) {
        suite.skip("d-omega", "rho_0 = 0 with M = 0 leaves an empty system");
    } else {
        const std::string branch = inst.rho()[0] > 0 ? "d-omega (rho_0 > 0)" : "d-omega (rho_0 = 0)";
        suite.measure(branch, exact ? 0.0 : opts.d_omega_tol,
                      [&] { return check_d_omega_recursion<T>(inst, order); });
    }

    std::vector<std::size_t> perm(inst.size());
    std::iota(perm.rbegin(), perm.rend(), 0);
    const auto sym = check_symmetries<T>(inst, shift_amount<T>(), perm, order);
    const double sym_tol = exact ? 0.0 : opts.symmetry_tol;
    suite.measure("symmetry-permutation", sym_tol, [&] { return sym.permutation; });
    suite.measure("symmetry-shift-approximants", sym_tol, [&] { return sym.shift_approximants; });
    suite.measure("symmetry-shift-remainder", sym_tol, [&] { return sym.shift_remainder; });

    if constexpr (exact) {
        if (inst.M() == 0) {
            suite.skip("common-root", "needs M >= 1");
        } else {
            suite.verdict("common-root", [&](std::string& detail) {
                const bool ok = no_common_root(base);
                detail = ok ? "gcd of H_0..H_M is constant" : "H_0..H_M share a root";
                return ok;
            });
        }
    }
}

double relative_error(Complex value, Complex reference) {
    const double scale = std::abs(reference);
    return scale > 0.0 ? std::abs(value - reference) / scale : std::abs(value);
}

// Polynomial-evaluation scale Σ|h_k||z|^k, used when H_m(z) itself is tiny.
double evaluation_scale(const Polynomial<Complex>& h, Complex z) {
    double s = 0.0;
    for (std::size_t k = 0; k < h.size(); ++k) s += std::abs(h[k]) * std::pow(std::abs(z), static_cast<double>(k));
    return s;
}

double approximant_error(Complex value, const Polynomial<Complex>& h, Complex z) {
    const Complex ref = poly_eval(h, z);
    const double scale = std::max(std::abs(ref), 1e-3 * evaluation_scale(h, z));
    return scale > 0.0 ? std::abs(value - ref) / scale : std::abs(value);
}

void run_quadrature(const ProblemInstance& inst, const VerifyOptions& opts, Suite& suite) {
    const auto& cfg = opts.quadrature;
    if (inst.M() > 2) {
        for (const char* name : {"contour-remainder", "contour-radius", "contour-approximants", "torus",
                                 "real-iterated", "real-cube", "cube-vs-iterated"})
            suite.skip(name, "quadrature checks run for M <= 2");
        return;
    }
    const auto system = build_system<Complex>(inst, Source::explicit_sum);
    // Enough terms that z^K is negligible for z <= 0.5. The low coefficients
    // cancel to rounding noise, which in double would swamp G at small z.
    const std::size_t long_order = inst.sigma() + 80;
    const auto g = remainder_from_approximants<Extended>(inst, long_order);
    const double probes[] = {0.1, 0.3, 0.5};

    suite.measure("contour-remainder", opts.contour_tol, [&] {
        double worst = 0.0;
        for (double z : probes)
            worst = std::max(worst, relative_error(remainder_contour(inst, z, cfg).value, series_eval(g, z)));
        return worst;
    });
    suite.measure("contour-radius", opts.radius_tol, [&] {
        QuadratureConfig wide = cfg;
        wide.circle_radius = default_contour_radius(inst) + 3.0;
        double worst = 0.0;
        for (double z : probes)
            worst = std::max(worst, relative_error(remainder_contour(inst, z, wide).value,
                                                   remainder_contour(inst, z, cfg).value));
        return worst;
    });
    suite.measure("contour-approximants", opts.contour_tol, [&] {
        double worst = 0.0;
        for (double z : probes)
            for (std::size_t m = 0; m < inst.size(); ++m)
                worst = std::max(worst, approximant_error(approximant_contour(inst, m, z, cfg).value, system.H[m], z));
        return worst;
    });

    if (inst.M() == 0) {
        suite.skip("torus", "the torus form needs M >= 1");
    } else {
        suite.measure("torus", opts.torus_tol, [&] {
            double worst = 0.0;
            for (std::size_t m = 0; m < inst.size(); ++m)
                worst = std::max(worst, approximant_error(approximant_torus(inst, m, 0.5, cfg).value, system.H[m], 0.5));
            return worst;
        });
    }

    const double z = 0.4;
    if (inst.M() == 0) {
        for (const char* name : {"real-iterated", "real-cube", "cube-vs-iterated"})
            suite.skip(name, "the real-integral forms need M >= 1");
    } else if (!integrable_ordering(inst)) {
        for (const char* name : {"real-iterated", "real-cube", "cube-vs-iterated"})
            suite.skip(name, "no ordering with Re(omega_h - omega_{h-1}) > 0");
    } else {
        const Complex reference = series_eval(g, z);
        std::optional<Complex> iterated, cube;
        suite.measure("real-iterated", opts.real_integral_tol, [&] {
            iterated = remainder_iterated(inst, z, cfg).value;
            return relative_error(*iterated, reference);
        });
        suite.measure("real-cube", opts.real_integral_tol, [&] {
            cube = remainder_cube(inst, z, cfg).value;
            return relative_error(*cube, reference);
        });
        if (iterated && cube)
            suite.measure("cube-vs-iterated", opts.real_integral_tol, [&] { return relative_error(*cube, *iterated); });
        else
            suite.skip("cube-vs-iterated", "one of the real-integral forms failed");
    }
}

}  // namespace

VerificationReport verify_instance(const ProblemInstance& inst, const VerifyOptions& opts) {
    VerificationReport report;
    Suite suite(report);
    if (inst.needs_conditioning_warning())
        report.warnings.push_back("sigma = " + std::to_string(inst.sigma()) + " exceeds " +
                                  std::to_string(kConditioningSigma) +
                                  "; float closed forms may lose accuracy (exact mode is recommended)");
    if (inst.is_exact()) {
        run_algebraic<Rational>(inst, opts, suite);
        run_quadrature(inst.as_floating(), opts, suite);
    } else {
        run_algebraic<Complex>(inst, opts, suite);
        run_quadrature(inst, opts, suite);
    }
    return report;
}

}  // namespace pade
