#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pade/instance.hpp"
#include "pade/perfection.hpp"
#include "pade/quadrature.hpp"
#include "pade/scalar.hpp"

namespace pade {

/// One exponent as written in a document. The spelling is kept so that a
/// document serializes back to the same text.
struct OmegaEntry {
    enum class Kind { number, pair, rational } kind = Kind::pair;
    Complex value;                    ///< nearest double value
    std::optional<Rational> exact;    ///< set for numbers and rational strings
    std::string text;                 ///< the rational string, for Kind::rational
};

struct DocumentOptions {
    std::optional<std::size_t> truncation;   ///< N; defaults to σ + 16
    std::optional<double> tol;               ///< cross-formula tolerance override
    QuadratureConfig quadrature;
};

/// Problem description exchanged with the command-line tool.
struct InstanceDocument {
    Mode mode = Mode::floating;
    std::vector<OmegaEntry> omega;
    std::vector<unsigned> rho;
    DocumentOptions options;
    std::optional<EpsilonFamily> epsilon;
    /// Non-fatal remarks produced while reading, e.g. rationals in float mode.
    std::vector<std::string> warnings;

    /// Validated instance in the document's mode. Throws InstanceError.
    ProblemInstance instance() const;
};

/// Throws ParseError naming the offending field (and position for syntax errors).
InstanceDocument parse_document(const std::string& text);
std::string serialize_document(const InstanceDocument& doc);

/// Parses "a", "bi", "a+bi", "a-bi" (also with j for the imaginary unit).
Complex parse_complex(const std::string& text);

}  // namespace pade
