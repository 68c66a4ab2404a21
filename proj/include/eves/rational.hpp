#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "eves/errors.hpp"

namespace eves {

using Integer = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses `3`, `-3`, `3/4`, `-3/4`. The result is in lowest terms.
inline Rational parse_rational(std::string_view text)
{
    auto digits = [](std::string_view s) {
        if (s.empty())
            return false;
        for (char ch : s)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                return false;
        return true;
    };

    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!digits(num) || !digits(den))
        throw ParseError("not a rational literal: '" + std::string(text) + "'");

    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

inline std::string to_string(const Rational& q)
{
    return q.get_str(10);
}

/// Exact integer power; negative exponents invert (base must be nonzero).
inline Rational pow(const Rational& base, long exponent)
{
    if (exponent < 0) {
        if (base == 0)
            throw InvalidInput("zero raised to a negative power");
        return pow(Rational(1) / base, -exponent);
    }
    Rational result;
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return result;
}

inline bool is_zero(const Vector& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

} // namespace eves
