#pragma once

#include <gmpxx.h>

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>

#include "conerank/error.hpp"

namespace conerank {

using Rational = mpq_class;

/// Parses "12", "-3/4", "0.7", "1.5e-3" exactly. Decimal text is read as the
/// decimal it spells, so "0.7" is 7/10 and not the nearest binary double.
inline Rational parse_rational(std::string_view text)
{
    auto bad = [&]() -> Rational { fail(ErrorKind::validation, "not a number: '" + std::string(text) + "'"); };

    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
        text.remove_prefix(1);
    }
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        return bad();
    }

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Rational num = parse_rational(text.substr(0, slash));
        Rational den = parse_rational(text.substr(slash + 1));
        if (den == 0) {
            return bad();
        }
        Rational out = num / den;
        out.canonicalize();
        return out;
    }

    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    std::string digits;
    long exponent = 0;
    bool any_digit = false;
    bool seen_point = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c >= '0' && c <= '9') {
            digits.push_back(c);
            any_digit = true;
            if (seen_point) {
                --exponent;
            }
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!any_digit) {
        return bad();
    }
    if (pos < text.size()) {
        if (text[pos] != 'e' && text[pos] != 'E') {
            return bad();
        }
        ++pos;
        long e = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos + (pos < text.size() && text[pos] == '+' ? 1 : 0),
                                         text.data() + text.size(), e);
        if (ec != std::errc() || ptr != text.data() + text.size()) {
            return bad();
        }
        exponent += e;
    }
    if (exponent > 4000 || exponent < -4000) {
        return bad();
    }

    mpz_class mantissa(digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Rational out = exponent < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
    out.canonicalize();
    return negative ? Rational(-out) : out;
}

/// Rationalizes a double through its shortest round-trip decimal form.
inline Rational from_double(double x)
{
    require(std::isfinite(x), ErrorKind::validation, "non-finite coordinate");
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return parse_rational(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
}

/// p/q in lowest terms. mpq_class(p, q) alone does not reduce.
inline Rational ratio(long p, long q)
{
    require(q != 0, ErrorKind::validation, "zero denominator");
    Rational out(p, q);
    out.canonicalize();
    return out;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline int sign(const Rational& q) { return sgn(q); }

inline Rational abs_value(const Rational& q) { return abs(q); }

} // namespace conerank
