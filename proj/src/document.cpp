#include "pade/document.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include <json.hpp>

#include "pade/errors.hpp"

namespace pade {

using nlohmann::json;

namespace {

std::string indexed(const std::string& field, std::size_t i) {
    return field + "[" + std::to_string(i) + "]";
}

double read_real(const json& node, const std::string& field) {
    if (!node.is_number()) throw ParseError(field, "expected a number");
    const double v = node.get<double>();
    if (!std::isfinite(v)) throw ParseError(field, "not finite");
    return v;
}

template <class U>
U read_unsigned(const json& node, const std::string& field) {
    if (!node.is_number_integer() || node.get<long long>() < 0) throw ParseError(field, "expected a nonnegative integer");
    return static_cast<U>(node.get<unsigned long long>());
}

OmegaEntry read_omega(const json& node, const std::string& field, Mode mode, std::vector<std::string>& warnings) {
    OmegaEntry e;
    if (node.is_string()) {
        e.kind = OmegaEntry::Kind::rational;
        e.text = node.get<std::string>();
        try {
            e.exact = parse_rational(e.text);
        } catch (const ParseError& err) {
            throw ParseError(field, err.what());
        }
        e.value = Complex(e.exact->get_d(), 0.0);
        if (mode == Mode::floating)
            warnings.push_back(field + ": rational '" + e.text + "' rounded to the nearest double in float mode");
        return e;
    }
    if (node.is_number()) {
        e.kind = OmegaEntry::Kind::number;
        e.value = Complex(read_real(node, field), 0.0);
        if (node.is_number_integer()) {
            e.exact = Rational(node.dump());
        } else {
            // Shortest round-trip spelling of the double, read as a decimal.
            const std::string text = node.dump();
            if (text.find_first_of("eE") == std::string::npos) {
                e.exact = parse_rational(text);
            } else {
                e.exact = Rational(e.value.real());
                if (mode == Mode::exact)
                    warnings.push_back(field + ": exponent-form number taken as its exact binary value");
            }
        }
        return e;
    }
    if (node.is_array()) {
        if (node.size() != 2) throw ParseError(field, "expected [re, im]");
        e.kind = OmegaEntry::Kind::pair;
        e.value = Complex(read_real(node[0], field + "[0]"), read_real(node[1], field + "[1]"));
        if (mode == Mode::exact) throw ParseError(field, "exact mode needs rational exponents, not [re, im] pairs");
        return e;
    }
    throw ParseError(field, "expected [re, im], a number, or a rational string");
}

json write_omega(const OmegaEntry& e) {
    switch (e.kind) {
        case OmegaEntry::Kind::rational: return e.text;
        case OmegaEntry::Kind::number:
            if (e.exact && e.exact->get_den() == 1 && e.exact->get_num().fits_slong_p())
                return e.exact->get_num().get_si();
            return e.value.real();
        case OmegaEntry::Kind::pair: return json::array({e.value.real(), e.value.imag()});
    }
    return nullptr;
}

void read_quadrature(const json& node, QuadratureConfig& cfg) {
    if (!node.is_object()) throw ParseError("options.quadrature", "expected an object");
    for (const auto& [key, value] : node.items()) {
        const std::string field = "options.quadrature." + key;
        if (key == "contour_nodes")
            cfg.contour_nodes = read_unsigned<std::size_t>(value, field);
        else if (key == "circle_radius")
            cfg.circle_radius = read_real(value, field);
        else if (key == "gauss_nodes")
            cfg.gauss_nodes_per_dim = read_unsigned<std::size_t>(value, field);
        else if (key == "mc_samples")
            cfg.mc_samples = read_unsigned<std::size_t>(value, field);
        else if (key == "rtol")
            cfg.rtol = read_real(value, field);
        else
            throw ParseError(field, "unknown key");
    }
    if (cfg.contour_nodes == 0 || cfg.gauss_nodes_per_dim == 0)
        throw ParseError("options.quadrature", "node counts must be positive");
}

void read_options(const json& node, InstanceDocument& doc) {
    if (!node.is_object()) throw ParseError("options", "expected an object");
    for (const auto& [key, value] : node.items()) {
        const std::string field = "options." + key;
        if (key == "truncation")
            doc.options.truncation = read_unsigned<std::size_t>(value, field);
        else if (key == "tol")
            doc.options.tol = read_real(value, field);
        else if (key == "seed")
            doc.options.quadrature.seed = read_unsigned<std::uint64_t>(value, field);
        else if (key == "quadrature")
            read_quadrature(value, doc.options.quadrature);
        else
            throw ParseError(field, "unknown key");
    }
}

EpsilonFamily read_epsilon(const json& node) {
    if (!node.is_array()) throw ParseError("epsilon", "expected a list of integer rows");
    std::vector<std::vector<int>> rows;
    for (std::size_t k = 0; k < node.size(); ++k) {
        const auto& row = node[k];
        const std::string field = indexed("epsilon", k);
        if (!row.is_array()) throw ParseError(field, "expected a list of integers");
        std::vector<int> r;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (!row[j].is_number_integer()) throw ParseError(indexed(field, j), "expected an integer");
            r.push_back(row[j].get<int>());
        }
        rows.push_back(std::move(r));
    }
    try {
        return EpsilonFamily(std::move(rows));
    } catch (const InstanceError& err) {
        throw ParseError("epsilon", err.what());
    }
}

}  // namespace

ProblemInstance InstanceDocument::instance() const {
    if (omega.size() != rho.size()) throw InstanceError("omega and rho differ in length");
    if (mode == Mode::exact) {
        std::vector<Rational> w;
        for (const auto& e : omega) {
            if (!e.exact) throw InstanceError("exact mode needs rational exponents");
            w.push_back(*e.exact);
        }
        return ProblemInstance::exact(std::move(w), rho);
    }
    std::vector<Complex> w;
    for (const auto& e : omega) w.push_back(e.value);
    return ProblemInstance::floating(std::move(w), rho);
}

InstanceDocument parse_document(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError("document", "syntax error at byte " + std::to_string(err.byte) + ": " + err.what());
    }
    if (!root.is_object()) throw ParseError("document", "expected a JSON object");

    InstanceDocument doc;
    if (root.contains("mode")) {
        const auto& mode = root["mode"];
        if (mode == "float")
            doc.mode = Mode::floating;
        else if (mode == "exact")
            doc.mode = Mode::exact;
        else
            throw ParseError("mode", "expected \"float\" or \"exact\"");
    }
    if (!root.contains("omega")) throw ParseError("omega", "missing");
    if (!root.contains("rho")) throw ParseError("rho", "missing");
    const auto& omega = root["omega"];
    const auto& rho = root["rho"];
    if (!omega.is_array()) throw ParseError("omega", "expected a list");
    if (!rho.is_array()) throw ParseError("rho", "expected a list");
    for (std::size_t i = 0; i < omega.size(); ++i)
        doc.omega.push_back(read_omega(omega[i], indexed("omega", i), doc.mode, doc.warnings));
    for (std::size_t i = 0; i < rho.size(); ++i) doc.rho.push_back(read_unsigned<unsigned>(rho[i], indexed("rho", i)));
    if (doc.omega.size() != doc.rho.size())
        throw ParseError("rho", "has " + std::to_string(doc.rho.size()) + " entries but omega has " +
                                    std::to_string(doc.omega.size()));
    if (doc.omega.empty()) throw ParseError("omega", "must not be empty");

    if (root.contains("options")) read_options(root["options"], doc);
    if (root.contains("epsilon")) doc.epsilon = read_epsilon(root["epsilon"]);
    for (const auto& [key, value] : root.items())
        if (key != "mode" && key != "omega" && key != "rho" && key != "options" && key != "epsilon")
            throw ParseError(key, "unknown key");
    return doc;
}

std::string serialize_document(const InstanceDocument& doc) {
    json root = json::object();
    root["mode"] = doc.mode == Mode::exact ? "exact" : "float";
    json omega = json::array();
    for (const auto& e : doc.omega) omega.push_back(write_omega(e));
    root["omega"] = omega;
    root["rho"] = doc.rho;

    const QuadratureConfig defaults;
    const auto& q = doc.options.quadrature;
    json options = json::object();
    if (doc.options.truncation) options["truncation"] = *doc.options.truncation;
    if (doc.options.tol) options["tol"] = *doc.options.tol;
    if (q.seed != defaults.seed) options["seed"] = q.seed;
    json quad = json::object();
    if (q.contour_nodes != defaults.contour_nodes) quad["contour_nodes"] = q.contour_nodes;
    if (q.circle_radius != defaults.circle_radius) quad["circle_radius"] = q.circle_radius;
    if (q.gauss_nodes_per_dim != defaults.gauss_nodes_per_dim) quad["gauss_nodes"] = q.gauss_nodes_per_dim;
    if (q.mc_samples != defaults.mc_samples) quad["mc_samples"] = q.mc_samples;
    if (q.rtol != defaults.rtol) quad["rtol"] = q.rtol;
    if (!quad.empty()) options["quadrature"] = quad;
    if (!options.empty()) root["options"] = options;
    if (doc.epsilon) root["epsilon"] = doc.epsilon->rows();
    return root.dump(2) + "\n";
}

Complex parse_complex(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("probe", "empty complex literal");

    auto number = [&](const std::string& part) {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        char* end = nullptr;
        const double v = std::strtod(part.c_str(), &end);
        if (end != part.c_str() + part.size() || !std::isfinite(v))
            throw ParseError("probe", "bad complex literal '" + raw + "'");
        return v;
    };

    const char last = s.back();
    if (last != 'i' && last != 'j') return Complex(number(s), 0.0);
    s.pop_back();
    // Split at the last sign that is not the leading one or part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    if (split == std::string::npos) return Complex(0.0, number(s));
    const std::string re = s.substr(0, split);
    const std::string im = s.substr(split);
    if (re.empty()) throw ParseError("probe", "bad complex literal '" + raw + "'");
    return Complex(number(re), number(im));
}

}  // namespace pade
