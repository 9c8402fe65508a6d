#include "pade/pade.hpp"

#include <cmath>
#include <numbers>

namespace pade {

std::string to_string(Source source) {
    switch (source) {
        case Source::explicit_sum: return "explicit";
        case Source::hypergeometric: return "hypergeometric";
        case Source::gamma_form: return "gamma-form";
        case Source::oracle: return "oracle";
    }
    return "unknown";
}

Complex gamma_form_factor(const ProblemInstance& inst, std::size_t m, std::size_t k, unsigned r) {
    const auto& rho = inst.rho();
    const unsigned rk = rho[k];
    if (m == k) return Complex(static_cast<double>(binomial_big(rk, r).get_d()), 0.0);

    const Complex w = inst.omega()[k] - inst.omega()[m];
    const double rr = static_cast<double>(r);
    const double rkd = static_cast<double>(rk);
    if (rk < r) {
        // (-1)^{ρ_k+1} C(r, ρ_k)^{-1} Γ(r+1)/Γ(r+1-W) · Γ(r-ρ_k-W)/Γ(r-ρ_k+1)
        const Complex log_ratio = log_gamma(rr + 1.0) - log_gamma(rr + 1.0 - w) + log_gamma(rr - rkd - w) -
                                  log_gamma(rr - rkd + 1.0);
        const double sign = (rk + 1) % 2 == 0 ? 1.0 : -1.0;
        return sign / binomial_big(r, rk).get_d() * std::exp(log_ratio);
    }
    // (-1)^r C(ρ_k, r) Γ(r+1)/Γ(r+1-W) · Γ(ρ_k-r+1)/Γ(ρ_k-r+1+W) · π/sin(πW)
    const Complex log_ratio = log_gamma(rr + 1.0) - log_gamma(rr + 1.0 - w) + log_gamma(rkd - rr + 1.0) -
                              log_gamma(rkd - rr + 1.0 + w);
    const double sign = r % 2 == 0 ? 1.0 : -1.0;
    const Complex s = sin_pi(w);
    if (std::abs(s) == 0.0) throw InstanceError("sin(pi W) vanishes; exponents differ by an integer");
    return sign * binomial_big(rk, r).get_d() * std::exp(log_ratio) * (std::numbers::pi / s);
}

Polynomial<Complex> approximant_gamma_form(const ProblemInstance& inst, std::size_t m) {
    detail::check_index(inst, m);
    const auto& rho = inst.rho();
    double rho_factorial = 1.0;
    for (unsigned r : rho) rho_factorial *= factorial_as<Complex>(r).real();

    std::vector<Complex> a(rho[m] + 1);
    for (unsigned r = 0; r <= rho[m]; ++r) {
        Complex prod(1.0, 0.0);
        for (std::size_t k = 0; k < inst.size(); ++k) prod *= gamma_form_factor(inst, m, k, r);
        a[r] = prod / rho_factorial;
    }
    return from_shifted_basis(a);
}

bool no_common_root(const PadeSystem<Rational>& sys) {
    Polynomial<Rational> g;
    for (const auto& h : sys.H) g = poly_gcd(g, h);
    const auto deg = g.degree();
    return deg && *deg == 0;
}

}  // namespace pade
