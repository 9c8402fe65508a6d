#include "pade/instance.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "pade/errors.hpp"

namespace pade {

unsigned sigma(std::span<const unsigned> rho) {
    return std::accumulate(rho.begin(), rho.end(), 0u, [](unsigned acc, unsigned r) { return acc + r + 1; });
}

ProblemInstance ProblemInstance::floating(std::vector<Complex> omega, std::vector<unsigned> rho) {
    ProblemInstance inst;
    inst.mode_ = Mode::floating;
    inst.omega_ = std::move(omega);
    inst.rho_ = std::move(rho);
    inst.validate();
    return inst;
}

ProblemInstance ProblemInstance::exact(std::vector<Rational> omega, std::vector<unsigned> rho) {
    ProblemInstance inst;
    inst.mode_ = Mode::exact;
    inst.omega_.reserve(omega.size());
    for (auto& w : omega) {
        w.canonicalize();
        inst.omega_.emplace_back(w.get_d(), 0.0);
    }
    inst.omega_exact_ = std::move(omega);
    inst.rho_ = std::move(rho);
    inst.validate();
    return inst;
}

const std::vector<Rational>& ProblemInstance::omega_exact() const {
    if (mode_ != Mode::exact) throw InstanceError("instance has no exact exponents");
    return omega_exact_;
}

void ProblemInstance::validate() const {
    if (rho_.empty()) throw InstanceError("at least one exponent is required");
    if (omega_.size() != rho_.size())
        throw InstanceError("omega has " + std::to_string(omega_.size()) + " entries but rho has " +
                            std::to_string(rho_.size()));
    for (const auto& w : omega_)
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) throw InstanceError("omega must be finite");

    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = i + 1; j < size(); ++j) {
            bool integral = false;
            if (mode_ == Mode::exact) {
                const Rational d = omega_exact_[i] - omega_exact_[j];
                integral = d.get_den() == 1;
            } else {
                const Complex d = omega_[i] - omega_[j];
                integral = std::abs(d.imag()) < kIntegerDifferenceTolerance &&
                           std::abs(d.real() - std::round(d.real())) < kIntegerDifferenceTolerance;
            }
            if (integral)
                throw InstanceError("omega_" + std::to_string(i) + " - omega_" + std::to_string(j) +
                                    " is an integer");
        }
    }
}

ProblemInstance ProblemInstance::with_rho(std::vector<unsigned> rho) const {
    if (rho.size() != size()) throw InstanceError("rho length does not match omega");
    ProblemInstance out = *this;
    out.rho_ = std::move(rho);
    return out;
}

ProblemInstance ProblemInstance::shifted(const Complex& alpha) const {
    std::vector<Complex> w = omega_;
    for (auto& v : w) v += alpha;
    return floating(std::move(w), rho_);
}

ProblemInstance ProblemInstance::shifted(const Rational& alpha) const {
    if (mode_ != Mode::exact) return shifted(Complex(alpha.get_d(), 0.0));
    std::vector<Rational> w = omega_exact_;
    for (auto& v : w) v += alpha;
    return exact(std::move(w), rho_);
}

ProblemInstance ProblemInstance::permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != size()) throw InstanceError("permutation length does not match the instance");
    std::vector<bool> seen(size(), false);
    for (auto p : perm) {
        if (p >= size() || seen[p]) throw InstanceError("not a permutation");
        seen[p] = true;
    }
    ProblemInstance out = *this;
    for (std::size_t i = 0; i < size(); ++i) {
        out.omega_[i] = omega_[perm[i]];
        out.rho_[i] = rho_[perm[i]];
        if (mode_ == Mode::exact) out.omega_exact_[i] = omega_exact_[perm[i]];
    }
    return out;
}

ProblemInstance ProblemInstance::without(std::size_t i) const {
    if (size() < 2) throw InstanceError("cannot drop the only coordinate");
    if (i >= size()) throw InstanceError("coordinate index out of range");
    ProblemInstance out = *this;
    out.omega_.erase(out.omega_.begin() + static_cast<std::ptrdiff_t>(i));
    out.rho_.erase(out.rho_.begin() + static_cast<std::ptrdiff_t>(i));
    if (mode_ == Mode::exact) out.omega_exact_.erase(out.omega_exact_.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
}

ProblemInstance ProblemInstance::stepped(std::size_t i) const {
    if (i >= size()) throw InstanceError("coordinate index out of range");
    if (rho_[i] == 0) throw InstanceError("cannot lower a zero degree");
    ProblemInstance out = *this;
    out.omega_[i] += 1.0;
    out.rho_[i] -= 1;
    if (mode_ == Mode::exact) out.omega_exact_[i] += 1;
    return out;
}

ProblemInstance ProblemInstance::as_floating() const {
    return floating(omega_, rho_);
}

}  // namespace pade
