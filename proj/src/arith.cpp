#include "pade/arith.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "pade/errors.hpp"

namespace pade {

std::uint64_t binomial(unsigned n, long r) {
    if (r < 0 || r > static_cast<long>(n)) return 0;
    auto k = static_cast<std::uint64_t>(r);
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // acc * (n - k + i) / i stays integral at every step.
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

BigInt binomial_big(unsigned n, long r) {
    if (r < 0 || r > static_cast<long>(n)) return BigInt(0);
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(r));
    return out;
}

Complex sin_pi(Complex x) {
    // sin(π(n + f + iy)) = (-1)^n sin(π(f + iy)), |f| <= 1/2.
    const double n = std::round(x.real());
    const double f = x.real() - n;
    const double y = x.imag();
    const double pi = std::numbers::pi;
    Complex s(std::sin(pi * f) * std::cosh(pi * y), std::cos(pi * f) * std::sinh(pi * y));
    if (std::fmod(std::abs(n), 2.0) == 1.0) s = -s;
    return s;
}

namespace {

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

Complex log_gamma_lanczos(Complex x) {
    const Complex z = x - 1.0;
    Complex series = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) series += kLanczos[i] / (z + static_cast<double>(i));
    const Complex t = z + kLanczosG + 0.5;
    const double half_log_2pi = 0.91893853320467274178;
    return half_log_2pi + (z + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

Complex log_gamma(Complex x) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
        throw std::domain_error("log_gamma: non-finite argument");
    if (x.real() <= 0.5) {
        const double n = std::round(x.real());
        if (n <= 0.0 && std::abs(x - Complex(n, 0.0)) < kPoleTolerance)
            throw PoleError("log_gamma: argument is a nonpositive integer");
    }
    if (x.real() >= 0.5) return log_gamma_lanczos(x);

    // Reflection, log Γ(x) = log π - log sin(πx) - log Γ(1-x), with log sin(πx)
    // taken on the branch continuous in the closed upper half plane:
    //   log sin(πx) = πy - log 2 + i(π/2 - πx) + Log(1 - e^{2πix}).
    // On the negative real axis this is the limit from above.
    if (x.imag() < 0.0) return std::conj(log_gamma(std::conj(x)));
    const double pi = std::numbers::pi;
    const double log_pi = 1.1447298858494001741;
    const double frac = x.real() - std::floor(x.real());
    const Complex w = std::exp(-2.0 * pi * x.imag()) * std::polar(1.0, 2.0 * pi * frac);
    const Complex log_sin =
        Complex(pi * x.imag() - std::numbers::ln2, 0.5 * pi - pi * x.real()) + std::log(1.0 - w);
    return log_pi - log_sin - log_gamma_lanczos(1.0 - x);
}

}  // namespace pade
