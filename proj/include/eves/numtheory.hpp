#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "eves/errors.hpp"
#include "eves/rational.hpp"

namespace eves::numtheory {

struct ExtGcd {
    Integer g;
    Integer x;
    Integer y;
};

/// g = gcd(a, b) > 0 together with Bezout coefficients a*x + b*y = g.
inline ExtGcd ext_gcd(const Integer& a, const Integer& b)
{
    if (a == 0 && b == 0)
        throw InvalidInput("ext_gcd: both inputs are zero");
    if (a != 0 && b % a == 0)
        return {abs(a), sgn(a), 0};

    Integer old_r = a, r = b;
    Integer old_s = 1, s = 0;
    Integer old_t = 0, t = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0)
        return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

inline long gcd(long a, long b)
{
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long lcm(long a, long b)
{
    return a / gcd(a, b) * b;
}

/// Exact integer n-th root by binary search on the magnitude.
/// For even n the non-negative root is returned.
inline std::optional<Integer> integer_nth_root(const Integer& m, unsigned long n)
{
    if (n == 0)
        throw InvalidInput("integer_nth_root: degree must be positive");
    if (m < 0 && n % 2 == 0)
        return std::nullopt;

    Integer target = abs(m);
    Integer lo = 0, hi = 1;
    Integer power;
    for (;;) {
        mpz_pow_ui(power.get_mpz_t(), hi.get_mpz_t(), n);
        if (power >= target)
            break;
        lo = hi;
        hi *= 2;
    }
    while (lo <= hi) {
        Integer mid = (lo + hi) / 2;
        mpz_pow_ui(power.get_mpz_t(), mid.get_mpz_t(), n);
        if (power == target)
            return m < 0 ? Integer(-mid) : mid;
        if (power < target)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return std::nullopt;
}

/// All rationals r with r^n = q, sorted ascending (size 0, 1 or 2).
inline std::vector<Rational> rational_nth_roots(const Rational& q, unsigned long n)
{
    if (q == 0)
        throw InvalidInput("rational_nth_roots: zero has no projective meaning here");
    auto num = integer_nth_root(q.get_num(), n);
    auto den = integer_nth_root(q.get_den(), n);
    if (!num || !den)
        return {};
    Rational root(*num, *den);
    root.canonicalize();
    if (n % 2 == 0)
        return {Rational(-root), root};
    return {root};
}

/// Number of distinct P-th powers among the N distinct N-th roots of a
/// nonzero complex number: lcm(P, N) / P.
inline long root_power_count(long P, long N)
{
    if (P <= 0 || N <= 0)
        throw InvalidInput("root_power_count: arguments must be positive");
    return lcm(P, N) / P;
}

struct Congruence {
    Integer residue;
    Integer modulus;
};

/// A system x = k_j (mod b_j).
struct CongruenceSystem {
    std::vector<Congruence> entries;
};

struct CrtSolution {
    Integer x;
    Integer modulus;

    bool operator==(const CrtSolution&) const = default;
};

/// Least non-negative solution and the combined modulus lcm(b_j), or nothing
/// when some pair violates k_i = k_j (mod gcd(b_i, b_j)).
inline std::optional<CrtSolution> crt_solve(const CongruenceSystem& sys)
{
    if (sys.entries.empty())
        throw InvalidInput("crt_solve: empty system");

    Integer x = 0, m = 1;
    for (const auto& [residue, modulus] : sys.entries) {
        if (modulus < 1)
            throw InvalidInput("crt_solve: moduli must be positive");
        // x + m*t = residue (mod modulus)
        auto [g, u, v] = ext_gcd(m, modulus);
        Integer diff = residue - x;
        if (diff % g != 0)
            return std::nullopt;
        Integer step = modulus / g;
        Integer t = (diff / g) * u % step;
        x += m * t;
        m *= step;
        x %= m;
        if (x < 0)
            x += m;
    }
    return CrtSolution{x, m};
}

} // namespace eves::numtheory
