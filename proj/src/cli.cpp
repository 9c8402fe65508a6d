#include "pade/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "pade/document.hpp"
#include "pade/errors.hpp"
#include "pade/pade.hpp"
#include "pade/perfection.hpp"
#include "pade/quadrature.hpp"
#include "pade/verify.hpp"

namespace pade {

using nlohmann::json;

namespace {

struct Flags {
    std::string input = "-";
    std::string output;
    std::optional<std::size_t> truncation;
    std::optional<double> tol;
    std::optional<std::uint64_t> seed;
    std::string mode;
    std::string probe;
    std::string form = "contour-approximant";
    std::size_t index = 0;
    bool timings = false;
};

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
    auto sink = std::make_shared<spdlog::sinks::ostream_sink_st>(err);
    auto logger = std::make_shared<spdlog::logger>("pade", sink);
    logger->set_pattern("[%l] %v");
    const char* env = std::getenv("PADE_LOG");
    const std::string level = env ? env : "";
    if (level == "quiet")
        logger->set_level(spdlog::level::off);
    else if (level == "debug")
        logger->set_level(spdlog::level::debug);
    else if (level == "info")
        logger->set_level(spdlog::level::info);
    else
        logger->set_level(spdlog::level::warn);
    return logger;
}

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("input", "cannot open '" + path + "'");
    buf << in.rdbuf();
    return buf.str();
}

json encode(const Complex& v) {
    return json::array({v.real(), v.imag()});
}

json encode(const Rational& v) {
    return to_string(v);
}

template <class T>
json encode_coeffs(const std::vector<T>& coeffs) {
    json out = json::array();
    for (const auto& c : coeffs) out.push_back(encode(c));
    return out;
}

// Applies command-line overrides to a parsed document.
void apply_flags(InstanceDocument& doc, const Flags& flags) {
    if (!flags.mode.empty()) {
        const Mode mode = flags.mode == "exact" ? Mode::exact : Mode::floating;
        if (mode != doc.mode) {
            doc.mode = mode;
            for (std::size_t i = 0; i < doc.omega.size(); ++i) {
                const auto& e = doc.omega[i];
                const std::string field = "omega[" + std::to_string(i) + "]";
                if (mode == Mode::exact && !e.exact)
                    throw ParseError(field, "exact mode needs rational exponents, not [re, im] pairs");
                if (mode == Mode::floating && e.kind == OmegaEntry::Kind::rational)
                    doc.warnings.push_back(field + ": rational '" + e.text +
                                           "' rounded to the nearest double in float mode");
            }
        }
    }
    if (flags.truncation) doc.options.truncation = flags.truncation;
    if (flags.tol) doc.options.tol = flags.tol;
    if (flags.seed) doc.options.quadrature.seed = *flags.seed;
}

json header(const InstanceDocument& doc, const ProblemInstance& inst) {
    json out = json::parse(serialize_document(doc));
    out.erase("options");
    out.erase("epsilon");
    out["sigma"] = inst.sigma();
    return out;
}

template <class T>
void fill_compute(json& out, const ProblemInstance& inst, std::size_t order) {
    const auto sys = build_system<T>(inst, Source::explicit_sum);
    json approximants = json::array();
    for (const auto& h : sys.H) approximants.push_back(encode_coeffs(h.coeffs()));
    out["approximants"] = approximants;
    out["remainder"] = encode_coeffs(remainder_from_approximants<T>(inst, order).coeffs());
}

int cmd_compute(const InstanceDocument& doc, json& out) {
    const auto inst = doc.instance();
    const std::size_t order = doc.options.truncation.value_or(default_truncation(inst));
    out = header(doc, inst);
    out["truncation"] = order;
    if (inst.is_exact())
        fill_compute<Rational>(out, inst, order);
    else
        fill_compute<Complex>(out, inst, order);
    return kExitOk;
}

int cmd_verify(const InstanceDocument& doc, const Flags& flags, json& out, spdlog::logger& log) {
    const auto inst = doc.instance();
    VerifyOptions opts;
    opts.truncation = doc.options.truncation;
    if (doc.options.tol) opts.coefficient_tol = *doc.options.tol;
    opts.quadrature = doc.options.quadrature;
    const auto report = verify_instance(inst, opts);

    out = header(doc, inst);
    json checks = json::array();
    for (const auto& c : report.checks) {
        json entry = {{"name", c.name}, {"status", to_string(c.status)}};
        if (c.residual) entry["residual"] = *c.residual;
        if (c.residual) entry["tolerance"] = c.tolerance;
        if (!c.detail.empty()) entry["detail"] = c.detail;
        if (flags.timings) entry["milliseconds"] = c.milliseconds;
        log.debug("{}: {}", c.name, to_string(c.status));
        checks.push_back(entry);
    }
    out["checks"] = checks;
    for (const auto& w : report.warnings) out["warnings"].push_back(w);
    out["passed"] = report.passed();
    if (const auto* w = report.worst()) {
        out["worst"] = w->name;
        if (!report.passed()) {
            std::ostringstream msg;
            msg << "verification failed; worst check " << w->name;
            if (w->residual) msg << " residual " << *w->residual << " (tolerance " << w->tolerance << ")";
            if (!w->detail.empty()) msg << ": " << w->detail;
            log.error("{}", msg.str());
        }
    }
    return report.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_perfect(InstanceDocument& doc, json& out) {
    const auto inst = doc.instance();
    if (!doc.epsilon) {
        doc.epsilon = EpsilonFamily::identity(inst.size());
        doc.warnings.push_back("no epsilon family given; using epsilon_k = e_k");
    }
    const auto& fam = *doc.epsilon;
    const auto hyp = hypothesis_report(fam);
    const auto det = determinant_test(inst, fam, doc.options.tol.value_or(kMonomialTolerance));

    out = header(doc, inst);
    out["epsilon"] = fam.rows();
    out["S"] = hyp.S;
    out["T"] = hyp.T;
    out["alpha"] = hyp.alpha ? json(*hyp.alpha) : json(nullptr);
    if (!hyp.tie_witnesses.empty()) out["tie_witnesses"] = hyp.tie_witnesses;
    out["alpha_unique"] = hyp.alpha_unique;
    out["degree_condition"] = hyp.degree_condition;
    out["gap"] = hyp.gap();
    out["hypothesis_satisfied"] = hyp.satisfied;

    const long expected = static_cast<long>(inst.sigma()) + hyp.T - 1;
    json d = {{"is_monomial", det.is_monomial}, {"degree_bound", det.degree_bound}, {"residual", det.residual}};
    d["exponent"] = det.exponent ? json(*det.exponent) : json(nullptr);
    if (det.C_exact)
        d["C"] = encode(*det.C_exact);
    else if (det.C)
        d["C"] = encode(*det.C);
    else
        d["C"] = nullptr;
    out["determinant"] = d;
    out["expected_exponent"] = expected;

    if (!hyp.satisfied) {
        out["verdict"] = "no expectation";
        return kExitOk;
    }
    const bool ok = det.is_monomial && det.exponent && static_cast<long>(*det.exponent) == expected;
    out["verdict"] = ok ? "consistent" : "violated";
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_quad(const InstanceDocument& doc, const Flags& flags, json& out) {
    const auto inst = doc.instance().is_exact() ? doc.instance().as_floating() : doc.instance();
    if (flags.probe.empty()) throw ParseError("probe", "quad needs --probe");
    const Complex z = parse_complex(flags.probe);
    const auto& cfg = doc.options.quadrature;
    const bool real = z.imag() == 0.0;
    auto real_z = [&] {
        if (!real) throw DomainError("the real-integral forms need a real probe");
        return z.real();
    };

    QuadratureResult res;
    std::optional<Complex> reference;
    const bool approximant = flags.form == "contour-approximant" || flags.form == "torus";
    if (approximant) {
        if (flags.index >= inst.size()) throw ParseError("index", "out of range");
        res = flags.form == "torus" ? approximant_torus(inst, flags.index, z, cfg)
                                    : approximant_contour(inst, flags.index, z, cfg);
        reference = poly_eval(approximant_explicit<Complex>(inst, flags.index), z);
    } else {
        if (flags.form == "contour-remainder")
            res = remainder_contour(inst, z, cfg);
        else if (flags.form == "iterated")
            res = remainder_iterated(inst, real_z(), cfg);
        else if (flags.form == "cube")
            res = remainder_cube(inst, real_z(), cfg);
        else if (flags.form == "cube-mc")
            res = remainder_cube_monte_carlo(inst, real_z(), cfg);
        else
            throw ParseError("form", "unknown form '" + flags.form + "'");
        if (std::abs(z) <= 0.5)
            reference = series_eval(remainder_from_approximants<Complex>(inst, inst.sigma() + 80), z);
    }

    out = header(doc, inst);
    out["form"] = flags.form;
    if (approximant) out["index"] = flags.index;
    out["probe"] = encode(z);
    out["value"] = encode(res.value);
    out["error_estimate"] = res.error_estimate;
    out["evaluations"] = res.evaluations;
    if (reference) {
        out["reference"] = encode(*reference);
        const double scale = std::abs(*reference);
        out["relative_error"] = scale > 0.0 ? std::abs(res.value - *reference) / scale : std::abs(res.value);
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    auto log = make_logger(err);

    CLI::App app{"Multidimensional Pade approximants of binomial functions", "pade"};
    app.require_subcommand(1);
    Flags flags;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--input", flags.input, "instance document (- for stdin)");
        sub->add_option("--output", flags.output, "output file (default stdout)");
        sub->add_option("--truncation", flags.truncation, "series order N");
        sub->add_option("--tol", flags.tol, "tolerance override");
        sub->add_option("--seed", flags.seed, "Monte Carlo seed");
        sub->add_option("--mode", flags.mode, "float or exact")->check(CLI::IsMember({"float", "exact"}));
    };
    auto* compute = app.add_subcommand("compute", "approximant and remainder coefficients");
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_flag("--timings", flags.timings, "include per-check timings");
    auto* perfect = app.add_subcommand("perfect", "determinant test for an epsilon family");
    auto* quad = app.add_subcommand("quad", "probe an integral representation at a point");
    quad->add_option("--probe", flags.probe, "complex point a+bi")->required();
    quad->add_option("--form", flags.form, "integral form")
        ->check(CLI::IsMember({"contour-approximant", "torus", "contour-remainder", "iterated", "cube", "cube-mc"}));
    quad->add_option("--index", flags.index, "approximant index m");
    for (auto* sub : {compute, verify, perfect, quad}) common(sub);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInputError;
    }

    json result;
    int code = kExitOk;
    try {
        auto doc = parse_document(read_input(flags.input));
        apply_flags(doc, flags);
        if (compute->parsed())
            code = cmd_compute(doc, result);
        else if (verify->parsed())
            code = cmd_verify(doc, flags, result, *log);
        else if (perfect->parsed())
            code = cmd_perfect(doc, result);
        else
            code = cmd_quad(doc, flags, result);
        for (const auto& w : doc.warnings) {
            log->warn("{}", w);
            result["warnings"].push_back(w);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const InstanceError& e) {
        err << "error: invalid instance: " << e.what() << "\n";
        return kExitInputError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const SizeError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const TruncationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }

    const std::string text = result.dump(2) + "\n";
    if (flags.output.empty()) {
        out << text;
    } else {
        std::ofstream file(flags.output);
        if (!file) {
            err << "error: cannot write '" << flags.output << "'\n";
            return kExitInputError;
        }
        file << text;
    }
    return code;
}

}  // namespace pade
