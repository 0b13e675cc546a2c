#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nakit {

// Exact rational scalar. Arbitrary-precision, always in canonical form
// (reduced, positive denominator). No floating point anywhere in the toolkit.
using Rational = boost::multiprecision::cpp_rational;
using Integer  = boost::multiprecision::cpp_int;

inline bool is_zero(const Rational& r) { return r.is_zero(); }

/// Parses the literal grammar used everywhere in the CLI and file formats:
/// optional sign, integer, optional "/" positive integer, e.g. "-5/3", "7", "0".
inline std::optional<Rational> try_parse_rational(std::string_view s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = (s[i] == '-');
        ++i;
    }
    std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_begin) return std::nullopt;
    Integer num(std::string(s.substr(num_begin, i - num_begin)));
    Integer den = 1;
    if (i < s.size()) {
        if (s[i] != '/') return std::nullopt;
        ++i;
        std::size_t den_begin = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_begin || i != s.size()) return std::nullopt;
        den = Integer(std::string(s.substr(den_begin, i - den_begin)));
        if (den == 0) return std::nullopt;
    }
    if (neg) num = -num;
    return Rational(num, den);
}

inline Rational parse_rational(std::string_view s) {
    auto r = try_parse_rational(s);
    if (!r) throw std::invalid_argument("bad rational literal: '" + std::string(s) + "'");
    return *r;
}

/// "p/q" with the "/q" omitted for integers. Never a floating-point form.
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

} // namespace nakit
