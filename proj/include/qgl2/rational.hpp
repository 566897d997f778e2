#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qgl2 {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact square root of a rational: s with s*s == r and s >= 0, or empty
// when r is not the square of a rational (all negative r included).
inline std::optional<Rational> sqrt_exact(const Rational& r) {
    if (r < 0) return std::nullopt;
    const Integer num = numerator(r);
    const Integer den = denominator(r);
    const Integer sn = boost::multiprecision::sqrt(num);
    if (sn * sn != num) return std::nullopt;
    const Integer sd = boost::multiprecision::sqrt(den);
    if (sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

// Grammar: [-]digits[/digits]. Returns empty on anything else.
inline std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '-') {
        negative = true;
        ++pos;
    }
    auto read_digits = [&](Integer& out) -> bool {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            return false;
        out = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            out = out * 10 + (text[pos] - '0');
            ++pos;
        }
        return true;
    };
    Integer num;
    if (!read_digits(num)) return std::nullopt;
    Integer den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        if (!read_digits(den)) return std::nullopt;
        if (den == 0) return std::nullopt;
    }
    if (pos != text.size()) return std::nullopt;
    if (negative) num = -num;
    return Rational(num, den);
}

}  // namespace qgl2
