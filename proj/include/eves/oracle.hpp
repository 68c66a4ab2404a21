#pragma once

// Brute-force counterparts of the main algorithms. They share no code with
// the decision procedures they check beyond the data types.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eves/configuration.hpp"
#include "eves/errors.hpp"
#include "eves/invariant.hpp"
#include "eves/rational.hpp"
#include "eves/wps.hpp"

namespace eves::oracle {

struct SearchBound {
    long height = 64;    // |numerator| and denominator of lambda candidates
    long modulus = 100000;
    long field_order = 7;

    void check() const
    {
        if (height < 1 || modulus < 1 || field_order < 1)
            throw InvalidInput("search bounds must be >= 1");
    }
};

namespace detail {

inline void require_same_weight(const WeightedPoint& z, const WeightedPoint& w)
{
    if (z.weight() != w.weight())
        throw InvalidInput("weighted points carry different weights");
}

inline bool lambda_works(const Rational& lambda, const WeightedPoint& z, const WeightedPoint& w)
{
    const auto& p = z.weight().parts();
    for (std::size_t k = 0; k < p.size(); ++k) {
        Rational power = 1;
        for (long e = 0; e < p[k]; ++e)
            power *= lambda;
        if (power * z[k] != w[k])
            return false;
    }
    return true;
}

} // namespace detail

/// Tries every lambda = +-a/b with 1 <= a, b <= bound.height.
inline bool bounded_lambda_search(const WeightedPoint& z, const WeightedPoint& w, const SearchBound& bound = {})
{
    bound.check();
    detail::require_same_weight(z, w);
    for (long a = 1; a <= bound.height; ++a) {
        for (long b = 1; b <= bound.height; ++b) {
            if (numtheory::gcd(a, b) != 1)
                continue;
            Rational lambda(a, b);
            if (detail::lambda_works(lambda, z, w) || detail::lambda_works(-lambda, z, w))
                return true;
        }
    }
    return false;
}

/// Decides real lambda existence without Bezout: choose the sign of lambda,
/// then compare magnitudes pairwise via |r_k|^{p_j} = |r_j|^{p_k}.
inline bool real_lambda_oracle(const WeightedPoint& z, const WeightedPoint& w)
{
    detail::require_same_weight(z, w);
    const auto& p = z.weight().parts();
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if ((z[k] == 0) != (w[k] == 0))
            return false;
        if (z[k] != 0)
            support.push_back(k);
    }
    std::vector<Rational> ratio(p.size());
    for (auto k : support)
        ratio[k] = w[k] / z[k];

    const bool complex_like = z.weight().field() == FieldTag::ComplexLike;
    bool sign_ok = false;
    for (int s : {1, -1}) {
        bool ok = true;
        for (auto k : support) {
            int want = sgn(ratio[k]);
            int got = (s == -1 && p[k] % 2 != 0) ? -1 : 1;
            if (want != got)
                ok = false;
        }
        sign_ok = sign_ok || ok;
    }
    if (!sign_ok && !complex_like)
        return false;

    for (std::size_t x = 0; x < support.size(); ++x) {
        for (std::size_t y = x + 1; y < support.size(); ++y) {
            auto i = support[x];
            auto j = support[y];
            Rational lhs = pow(Rational(abs(ratio[i])), p[j]);
            Rational rhs = pow(Rational(abs(ratio[j])), p[i]);
            if (lhs != rhs)
                return false;
        }
    }
    if (!complex_like)
        return true;

    // Over C the sign condition asks for a unit u = exp(i*pi*m/L) with
    // u^{p_k} = sign(r_k); m/L ranges over enough phases when L = lcm(p_k).
    long l = 1;
    for (auto k : support)
        l = numtheory::lcm(l, p[k]);
    for (long m = 0; m < 2 * l; ++m) {
        bool ok = true;
        for (auto k : support) {
            long turns = p[k] * m; // phase p_k * m / l in units of pi
            bool negative = ratio[k] < 0;
            if (turns % l != 0 || ((turns / l) % 2 != 0) != negative)
                ok = false;
        }
        if (ok)
            return true;
    }
    return false;
}

/// Least x in 0..lcm-1 satisfying every congruence, found by scanning.
inline std::optional<numtheory::CrtSolution> exhaustive_crt(const numtheory::CongruenceSystem& sys,
                                                            const SearchBound& bound = {})
{
    bound.check();
    if (sys.entries.empty())
        throw InvalidInput("empty congruence system");
    long l = 1;
    for (const auto& e : sys.entries) {
        if (e.modulus < 1)
            throw InvalidInput("congruence modulus must be positive");
        l = numtheory::lcm(l, e.modulus.get_si());
        if (l > bound.modulus)
            throw InvalidInput("combined modulus exceeds the search bound");
    }
    for (long x = 0; x < l; ++x) {
        bool ok = true;
        for (const auto& e : sys.entries) {
            Integer diff = Integer(x) - e.residue;
            if (diff % e.modulus != 0) {
                ok = false;
                break;
            }
        }
        if (ok)
            return numtheory::CrtSolution{x, l};
    }
    return std::nullopt;
}

/// The ~_p classes of (F_q)^{n+1} minus zero, each vector encoded as its list
/// of residues in 0..q-1.
struct FiniteFieldClasses {
    long q = 0;
    std::vector<std::vector<std::vector<long>>> classes;
};

inline bool is_prime(long q)
{
    if (q < 2)
        return false;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

inline FiniteFieldClasses ff_enumerate_classes(const std::vector<long>& weight, long q)
{
    if (!is_prime(q) || q > 31)
        throw InvalidInput("field order must be a prime <= 31");
    if (weight.size() < 2)
        throw InvalidInput("weight must have at least two parts");
    for (long p : weight)
        if (p < 1)
            throw InvalidInput("weight parts must be positive");
    const std::size_t len = weight.size();
    long total = 1;
    for (std::size_t k = 0; k < len; ++k) {
        total *= q;
        if (total > 2000000)
            throw InvalidInput("finite field enumeration too large");
    }

    auto decode = [&](long index) {
        std::vector<long> v(len);
        for (std::size_t k = 0; k < len; ++k) {
            v[k] = index % q;
            index /= q;
        }
        return v;
    };
    auto encode = [&](const std::vector<long>& v) {
        long index = 0;
        for (std::size_t k = len; k-- > 0;)
            index = index * q + v[k];
        return index;
    };
    auto power_mod = [q](long base, long e) {
        long out = 1;
        for (long i = 0; i < e; ++i)
            out = out * base % q;
        return out;
    };

    // lambda^{p_k} for every lambda in F_q^* and every k.
    std::vector<std::vector<long>> powers(static_cast<std::size_t>(q), std::vector<long>(len));
    for (long lambda = 1; lambda < q; ++lambda)
        for (std::size_t k = 0; k < len; ++k)
            powers[static_cast<std::size_t>(lambda)][k] = power_mod(lambda, weight[k]);

    FiniteFieldClasses out{q, {}};
    std::vector<bool> seen(static_cast<std::size_t>(total), false);
    for (long index = 1; index < total; ++index) {
        if (seen[static_cast<std::size_t>(index)])
            continue;
        auto z = decode(index);
        std::map<long, std::vector<long>> orbit;
        long stabilizer = 0;
        for (long lambda = 1; lambda < q; ++lambda) {
            std::vector<long> image(len);
            for (std::size_t k = 0; k < len; ++k)
                image[k] = powers[static_cast<std::size_t>(lambda)][k] * z[k] % q;
            long code = encode(image);
            if (code == index)
                ++stabilizer;
            if (seen[static_cast<std::size_t>(code)] && !orbit.count(code))
                throw Error("finite field orbits overlap");
            orbit.emplace(code, image);
        }
        if (static_cast<long>(orbit.size()) * stabilizer != q - 1)
            throw Error("finite field orbit size does not match stabilizer count");
        std::vector<std::vector<long>> cls;
        for (auto& [code, v] : orbit) {
            seen[static_cast<std::size_t>(code)] = true;
            cls.push_back(std::move(v));
        }
        out.classes.push_back(std::move(cls));
    }
    return out;
}

/// Cofactor expansion along the first row.
inline Rational cofactor_determinant(const std::vector<std::vector<Rational>>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    Rational det = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col] == 0)
            continue;
        std::vector<std::vector<Rational>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Rational> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != col)
                    row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        Rational term = m[0][col] * cofactor_determinant(minor);
        det += (col % 2 == 0) ? term : Rational(-term);
    }
    return det;
}

namespace detail {

inline Vector normalize_last_nonzero(const Vector& v)
{
    for (std::size_t k = v.size(); k-- > 0;)
        if (v[k] != 0) {
            Vector out = v;
            Rational inv = 1 / v[k];
            for (auto& x : out)
                x *= inv;
            return out;
        }
    throw InvalidInput("zero vector");
}

/// Square submatrix of the (D+1) x r column matrix on the given rows.
inline std::vector<std::vector<Rational>> row_minor(const std::vector<Vector>& columns,
                                                    const std::vector<std::size_t>& rows)
{
    std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(columns.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < columns.size(); ++j)
            m[i][j] = columns[j][rows[i]];
    return m;
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n)
{
    const std::size_t r = idx.size();
    for (std::size_t i = r; i-- > 0;) {
        if (idx[i] < n - r + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < r; ++j)
                idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

/// det of the coordinate matrix C in S = B C, read off as det(S_I) / det(B_I)
/// for the first row set I with det(B_I) != 0.
inline Rational minor_ratio(const std::vector<Vector>& reps, const std::vector<Vector>& basis)
{
    const std::size_t r = basis.size();
    const std::size_t ambient = basis.front().size();
    std::vector<std::size_t> rows(r);
    for (std::size_t i = 0; i < r; ++i)
        rows[i] = i;
    do {
        Rational b = cofactor_determinant(row_minor(basis, rows));
        if (b != 0)
            return cofactor_determinant(row_minor(reps, rows)) / b;
    } while (next_combination(rows, ambient));
    throw InvalidInput("dependent basis");
}

inline std::size_t column_rank(const std::vector<Vector>& vectors)
{
    // rank = largest k with a nonzero k x k minor; fine at oracle scale.
    if (vectors.empty())
        return 0;
    const std::size_t ambient = vectors.front().size();
    for (std::size_t k = std::min(vectors.size(), ambient); k > 0; --k) {
        std::vector<std::size_t> cols(k);
        for (std::size_t i = 0; i < k; ++i)
            cols[i] = i;
        do {
            std::vector<Vector> chosen;
            for (auto c : cols)
                chosen.push_back(vectors[c]);
            std::vector<std::size_t> rows(k);
            for (std::size_t i = 0; i < k; ++i)
                rows[i] = i;
            do {
                if (cofactor_determinant(row_minor(chosen, rows)) != 0)
                    return k;
            } while (next_combination(rows, ambient));
        } while (next_combination(cols, vectors.size()));
    }
    return 0;
}

} // namespace detail

/// The h-condition recounted from scratch: spans are grouped by a rank test
/// instead of echelon forms.
inline bool brute_h_valid(const Configuration& cfg, const Weight& weight)
{
    const std::size_t colors = cfg.color_count();
    if (weight.size() != colors)
        throw InvalidInput("weight length does not match the number of colors");
    auto integral_and_equal = [&](const std::vector<long>& degrees) {
        for (std::size_t c = 0; c < colors; ++c)
            if (degrees[c] % weight[c] != 0 || degrees[c] / weight[c] != degrees[0] / weight[0])
                return false;
        return true;
    };

    std::map<std::string, std::vector<long>> point_degrees;
    for (const auto& [name, pt] : cfg.points())
        point_degrees[name].assign(colors, 0);
    std::vector<std::pair<std::vector<Vector>, std::vector<long>>> groups;
    for (std::size_t c = 0; c < colors; ++c) {
        for (const auto& t : cfg.color(c)) {
            std::vector<Vector> vecs;
            for (const auto& name : t.members) {
                ++point_degrees[name][c];
                vecs.push_back(cfg.point(name).coords);
            }
            bool placed = false;
            for (auto& [basis, degrees] : groups) {
                auto joined = basis;
                joined.insert(joined.end(), vecs.begin(), vecs.end());
                if (detail::column_rank(joined) == cfg.arity()) {
                    ++degrees[c];
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                groups.push_back({vecs, std::vector<long>(colors, 0)});
                groups.back().second[c] = 1;
            }
        }
    }
    for (const auto& [name, degrees] : point_degrees)
        if (!integral_and_equal(degrees))
            return false;
    for (const auto& [basis, degrees] : groups)
        if (!integral_and_equal(degrees))
            return false;
    return true;
}

/// E_p(S) with last-nonzero-coordinate representatives, the first spanning
/// tuple's representatives as each span's basis, and cofactor determinants.
inline InvariantValue brute_invariant(const Configuration& cfg)
{
    ::eves::detail::require_h_configuration(cfg);
    const std::size_t r = cfg.arity();

    std::map<std::string, Vector> reps;
    for (const auto& [name, pt] : cfg.points())
        reps.emplace(name, detail::normalize_last_nonzero(pt.coords));
    auto vectors_of = [&](const RTuple& t) {
        std::vector<Vector> out;
        for (const auto& name : t.members)
            out.push_back(reps.at(name));
        return out;
    };

    std::vector<std::vector<Vector>> bases;
    auto basis_for = [&](const std::vector<Vector>& tuple) -> const std::vector<Vector>& {
        for (const auto& b : bases) {
            auto joined = b;
            joined.insert(joined.end(), tuple.begin(), tuple.end());
            if (detail::column_rank(joined) == r)
                return b;
        }
        bases.push_back(tuple);
        return bases.back();
    };
    // Fix bases in a first pass so later push_backs cannot move them.
    for (const auto& list : cfg.colors())
        for (const auto& t : list)
            basis_for(vectors_of(t));

    Vector coords;
    for (const auto& list : cfg.colors()) {
        Rational product = 1;
        for (const auto& t : list) {
            auto tuple = vectors_of(t);
            product *= detail::minor_ratio(tuple, basis_for(tuple));
        }
        coords.push_back(product);
    }
    return InvariantValue(WeightedPoint(std::move(coords), cfg.weight()));
}

/// The cross-ratio of four points of FP^1 as the pair of determinant products
/// (a1 d0 - a0 d1)(b1 c0 - b0 c1) : (a1 c0 - a0 c1)(b1 d0 - b0 d1).
inline WeightedPoint cross_ratio_formula(const Vector& a, const Vector& b, const Vector& c, const Vector& d)
{
    for (const auto* v : {&a, &b, &c, &d})
        if (v->size() != 2)
            throw InvalidInput("cross_ratio_formula: points must lie on FP^1");
    Rational x = (a[1] * d[0] - a[0] * d[1]) * (b[1] * c[0] - b[0] * c[1]);
    Rational y = (a[1] * c[0] - a[0] * c[1]) * (b[1] * d[0] - b[0] * d[1]);
    return WeightedPoint({x, y}, unit_weight());
}

} // namespace eves::oracle
