#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eves/errors.hpp"
#include "eves/numtheory.hpp"
#include "eves/rational.hpp"

namespace eves {

/// Which field the rational coordinates stand in for. Only the equivalence
/// decision and the reconstructibility predicate depend on it.
enum class FieldTag { RealLike, ComplexLike };

/// A weight p = (p_0, ..., p_n) with n >= 1 and every part positive.
class Weight {
public:
    Weight() = default;

    explicit Weight(std::vector<long> parts, FieldTag tag = FieldTag::RealLike)
        : parts_(std::move(parts)), tag_(tag)
    {
        if (parts_.size() < 2)
            throw InvalidInput("weight must have at least two parts");
        for (long p : parts_)
            if (p < 1)
                throw InvalidInput("weight parts must be positive");
    }

    const std::vector<long>& parts() const noexcept { return parts_; }
    long operator[](std::size_t k) const { return parts_.at(k); }
    std::size_t size() const noexcept { return parts_.size(); }
    /// The n of FP(p_0..p_n).
    std::size_t n() const noexcept { return parts_.size() - 1; }
    FieldTag field() const noexcept { return tag_; }

    bool all_even() const
    {
        for (long p : parts_)
            if (p % 2 != 0)
                return false;
        return true;
    }

    bool operator==(const Weight&) const = default;

private:
    std::vector<long> parts_;
    FieldTag tag_ = FieldTag::RealLike;
};

inline Weight unit_weight(std::size_t length = 2, FieldTag tag = FieldTag::RealLike)
{
    return Weight(std::vector<long>(length, 1), tag);
}

/// A representative vector of a point of FP(p). Two WeightedPoints denote the
/// same point exactly when wps_equivalent says so; the stored coordinates are
/// a representative, not a canonical form.
class WeightedPoint {
public:
    WeightedPoint(Vector coords, Weight weight) : coords_(std::move(coords)), weight_(std::move(weight))
    {
        if (coords_.size() != weight_.size())
            throw InvalidInput("weighted point: coordinate count does not match weight length");
        if (is_zero(coords_))
            throw InvalidInput("weighted point: all coordinates are zero");
    }

    const Vector& coords() const noexcept { return coords_; }
    const Rational& operator[](std::size_t k) const { return coords_.at(k); }
    const Weight& weight() const noexcept { return weight_; }

    /// True when every coordinate is nonzero (the locus D_p).
    bool in_generic_locus() const
    {
        for (const auto& z : coords_)
            if (z == 0)
                return false;
        return true;
    }

private:
    Vector coords_;
    Weight weight_;
};

/// Renders `[a0 : a1 : ... : an]_(p0,...,pn)`.
inline std::string to_string(const WeightedPoint& z)
{
    std::ostringstream out;
    out << '[';
    for (std::size_t k = 0; k < z.coords().size(); ++k) {
        if (k)
            out << " : ";
        out << to_string(z[k]);
    }
    out << "]_(";
    for (std::size_t k = 0; k < z.weight().size(); ++k) {
        if (k)
            out << ',';
        out << z.weight()[k];
    }
    out << ')';
    return out.str();
}

/// Renders a (1,1)-point compactly as `[a:b]`.
inline std::string to_short_string(const WeightedPoint& z)
{
    std::ostringstream out;
    out << '[';
    for (std::size_t k = 0; k < z.coords().size(); ++k) {
        if (k)
            out << ':';
        out << to_string(z[k]);
    }
    out << ']';
    return out.str();
}

namespace detail {

// Ratios r_k = w_k / z_k over the common support, with mu = lambda^g forced
// by a Bezout combination sum a_k p_k = g of the weights on the support.
struct ScalingData {
    bool supports_match = true;
    std::vector<std::size_t> support;
    std::vector<Rational> ratios;
    long g = 0;
    Rational mu;
};

inline ScalingData scaling_data(const WeightedPoint& z, const WeightedPoint& w)
{
    ScalingData out;
    const auto& p = z.weight().parts();
    for (std::size_t k = 0; k < p.size(); ++k) {
        bool zz = z[k] == 0, wz = w[k] == 0;
        if (zz != wz) {
            out.supports_match = false;
            return out;
        }
        if (!zz) {
            out.support.push_back(k);
            out.ratios.push_back(w[k] / z[k]);
        }
    }

    // Fold ext_gcd across the support: g = sum coeff_k * p_k.
    Integer g = 0;
    std::vector<Integer> coeff(out.support.size());
    for (std::size_t i = 0; i < out.support.size(); ++i) {
        Integer pk = p[out.support[i]];
        if (g == 0) {
            g = pk;
            coeff[i] = 1;
            continue;
        }
        auto [ng, x, y] = numtheory::ext_gcd(g, pk);
        for (std::size_t j = 0; j < i; ++j)
            coeff[j] *= x;
        coeff[i] = y;
        g = ng;
    }
    out.g = g.get_si();
    out.mu = 1;
    for (std::size_t i = 0; i < out.support.size(); ++i)
        out.mu *= pow(out.ratios[i], coeff[i].get_si());
    return out;
}

} // namespace detail

/// Decides z ~_p w: whether some lambda != 0 in the tagged field satisfies
/// w_k = lambda^{p_k} z_k for every k.
///
/// Any such lambda satisfies lambda^g = mu for the gcd g of the weights on
/// the support, so lambda^{p_k} = mu^{p_k/g}. A solution therefore exists iff
/// mu^{p_k/g} = w_k/z_k for all k and mu has a g-th root in the field
/// (always over C; over R iff g is odd or mu > 0).
inline bool wps_equivalent(const WeightedPoint& z, const WeightedPoint& w)
{
    if (z.weight() != w.weight())
        throw InvalidInput("wps_equivalent: weight mismatch");
    auto data = detail::scaling_data(z, w);
    if (!data.supports_match)
        return false;

    const auto& p = z.weight().parts();
    for (std::size_t i = 0; i < data.support.size(); ++i)
        if (pow(data.mu, p[data.support[i]] / data.g) != data.ratios[i])
            return false;
    if (z.weight().field() == FieldTag::ComplexLike)
        return true;
    return data.g % 2 != 0 || data.mu > 0;
}

/// A rational lambda with w = lambda . z, if one exists. Real equivalence may
/// hold with only irrational witnesses (e.g. (1,1) ~ (2,2) under (2,2)).
inline std::optional<Rational> rational_witness(const WeightedPoint& z, const WeightedPoint& w)
{
    if (z.weight() != w.weight())
        throw InvalidInput("rational_witness: weight mismatch");
    auto data = detail::scaling_data(z, w);
    if (!data.supports_match)
        return std::nullopt;
    const auto& p = z.weight().parts();
    for (const auto& lambda : numtheory::rational_nth_roots(data.mu, static_cast<unsigned long>(data.g))) {
        bool ok = true;
        for (std::size_t i = 0; i < data.support.size() && ok; ++i)
            ok = pow(lambda, p[data.support[i]]) == data.ratios[i];
        if (ok)
            return lambda;
    }
    return std::nullopt;
}

/// lambda . z = (lambda^{p_0} z_0, ..., lambda^{p_n} z_n).
inline WeightedPoint scale(const Rational& lambda, const WeightedPoint& z)
{
    if (lambda == 0)
        throw InvalidInput("scale: lambda must be nonzero");
    Vector out(z.coords().size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = pow(lambda, z.weight()[k]) * z[k];
    return WeightedPoint(std::move(out), z.weight());
}

/// Divides out the largest common factor that leaves the equivalence
/// relation unchanged: the full gcd over C; over R the odd part of the gcd,
/// then factors of two while the quotient parts stay even.
inline Weight reduce_weight(const Weight& p)
{
    long g = 0;
    for (long part : p.parts())
        g = numtheory::gcd(g, part);

    long m = g;
    if (p.field() == FieldTag::RealLike) {
        m = g;
        while (m % 2 == 0)
            m /= 2;
        long rest = g / m;
        // all parts / (m * 2) still even  <=>  rest divisible by 4
        while (rest % 4 == 0) {
            m *= 2;
            rest /= 2;
        }
    }
    std::vector<long> parts = p.parts();
    for (long& part : parts)
        part /= m;
    return Weight(std::move(parts), p.field());
}

/// c_ij : [z] -> [z_i^a : z_j^b] with p_i * a = p_j * b.
struct AxisProjectionSpec {
    std::size_t i = 0;
    std::size_t j = 0;
    long a = 1;
    long b = 1;

    bool operator==(const AxisProjectionSpec&) const = default;
};

inline void check_axis_projection(const AxisProjectionSpec& spec, const Weight& p)
{
    if (!(spec.i < spec.j && spec.j < p.size()))
        throw InvalidInput("axis projection: indices must satisfy 0 <= i < j <= n");
    if (spec.a < 1 || spec.b < 1)
        throw InvalidInput("axis projection: exponents must be positive");
    if (p[spec.i] * spec.a != p[spec.j] * spec.b)
        throw InvalidInput("axis projection: p_i * a != p_j * b");
}

/// h_ij with exponents lcm(p_i, p_j) / p_i and lcm(p_i, p_j) / p_j.
inline AxisProjectionSpec canonical_axis_projection(const Weight& p, std::size_t i, std::size_t j)
{
    if (!(i < j && j < p.size()))
        throw InvalidInput("canonical_axis_projection: indices out of range");
    long l = numtheory::lcm(p[i], p[j]);
    return {i, j, l / p[i], l / p[j]};
}

inline WeightedPoint apply_axis_projection(const AxisProjectionSpec& spec, const WeightedPoint& z)
{
    check_axis_projection(spec, z.weight());
    if (z[spec.i] == 0 && z[spec.j] == 0)
        throw UndefinedPoint("axis projection undefined: z_" + std::to_string(spec.i) + " = z_" +
                             std::to_string(spec.j) + " = 0");
    return WeightedPoint({pow(z[spec.i], spec.a), pow(z[spec.j], spec.b)}, unit_weight(2, z.weight().field()));
}

/// k with p_i * a = p_j * b = k * lcm(p_i, p_j), so c_ij = G_k o h_ij.
inline long factor_through_h(const AxisProjectionSpec& spec, const Weight& p)
{
    check_axis_projection(spec, p);
    return p[spec.i] * spec.a / numtheory::lcm(p[spec.i], p[spec.j]);
}

/// Index pairs (i, j), i < j, in lexicographic order.
inline std::vector<std::pair<std::size_t, std::size_t>> index_pairs(std::size_t length)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < length; ++i)
        for (std::size_t j = i + 1; j < length; ++j)
            out.emplace_back(i, j);
    return out;
}

/// (h_01(z), h_02(z), ..., h_{n-1,n}(z)) with canonical exponents.
inline std::vector<WeightedPoint> product_map(const WeightedPoint& z)
{
    std::vector<WeightedPoint> out;
    for (auto [i, j] : index_pairs(z.weight().size()))
        out.push_back(apply_axis_projection(canonical_axis_projection(z.weight(), i, j), z));
    return out;
}

/// Componentwise (1,1)-equivalence of two product_map images.
inline bool same_image(const std::vector<WeightedPoint>& a, const std::vector<WeightedPoint>& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!wps_equivalent(a[k], b[k]))
            return false;
    return true;
}

/// Over C always; over R iff some part is odd.
inline bool is_reconstructible(const Weight& p)
{
    if (p.field() == FieldTag::ComplexLike)
        return true;
    return !p.all_even();
}

/// Two inequivalent points of D_p with the same product_map image, for a
/// real weight whose parts are all even.
inline std::pair<WeightedPoint, WeightedPoint> nonreconstructible_witness(const Weight& p)
{
    if (p.field() != FieldTag::RealLike || !p.all_even())
        throw InvalidInput("nonreconstructible_witness: needs a real weight with all parts even");

    auto two_adic = [](long v) {
        int e = 0;
        while (v % 2 == 0) {
            v /= 2;
            ++e;
        }
        return e;
    };
    int min_e = two_adic(p[0]);
    for (long part : p.parts())
        min_e = std::min(min_e, two_adic(part));

    Vector ones(p.size(), Rational(1));
    Vector flipped(p.size());
    for (std::size_t k = 0; k < p.size(); ++k)
        flipped[k] = two_adic(p[k]) == min_e ? -1 : 1;
    return {WeightedPoint(ones, p), WeightedPoint(flipped, p)};
}

} // namespace eves
