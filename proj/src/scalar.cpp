#include "pade/scalar.hpp"

#include <cctype>

#include "pade/errors.hpp"

namespace pade {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("", "empty rational literal");

    auto parse_int = [&](const std::string& digits) {
        BigInt v;
        if (digits.empty() || v.set_str(digits, 10) != 0) throw ParseError("", "bad rational literal '" + text + "'");
        return v;
    };

    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const BigInt num = parse_int(s.substr(0, slash));
        const BigInt den = parse_int(s.substr(slash + 1));
        if (den == 0) throw ParseError("", "zero denominator in '" + text + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    // Decimal literal: [sign] digits [. digits]
    const auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(parse_int(s));
    std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) {
        negative = whole[0] == '-';
        whole.erase(0, 1);
    }
    if (whole.empty()) whole = "0";
    for (char c : whole + frac)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("", "bad rational literal '" + text + "'");
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational q(parse_int(whole + frac), den);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& v) {
    Rational reduced = v;
    reduced.canonicalize();
    return reduced.get_str();
}

}  // namespace pade
