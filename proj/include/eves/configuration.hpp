#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eves/errors.hpp"
#include "eves/matrix.hpp"
#include "eves/rational.hpp"
#include "eves/wps.hpp"

namespace eves {

/// Lexicographic order on exact vectors (used to key subspaces).
inline std::strong_ordering compare_vectors(const Vector& a, const Vector& b)
{
    for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) {
        int c = cmp(a[k], b[k]);
        if (c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.size() <=> b.size();
}

/// A named point of FP^D with a stored representative vector.
struct ProjPoint {
    std::string name;
    Vector coords;
};

/// An ordered r-tuple of point names.
struct RTuple {
    std::vector<std::string> members;

    std::size_t size() const noexcept { return members.size(); }
    auto operator<=>(const RTuple&) const = default;
};

/// An r-dimensional linear subspace of F^{D+1}, stored by its reduced
/// row-echelon basis so equal subspaces compare equal.
class Subspace {
public:
    Subspace() = default;

    /// Span of the given vectors; they must be independent.
    static Subspace span(const std::vector<Vector>& vectors)
    {
        auto ech = rref(Matrix::from_rows(vectors));
        if (ech.rank() != vectors.size())
            throw InvalidInput("Subspace::span: vectors are dependent");
        Subspace s;
        s.basis_ = ech.reduced.row_vectors();
        return s;
    }

    const std::vector<Vector>& basis() const noexcept { return basis_; }
    std::size_t dimension() const noexcept { return basis_.size(); }
    std::size_t ambient_dimension() const noexcept { return basis_.empty() ? 0 : basis_.front().size(); }

    bool contains(const Vector& v) const { return coordinates_in_basis(basis_, v).has_value(); }

    bool operator==(const Subspace& other) const { return (*this <=> other) == 0; }
    std::strong_ordering operator<=>(const Subspace& other) const
    {
        for (std::size_t k = 0; k < std::min(basis_.size(), other.basis_.size()); ++k) {
            auto c = compare_vectors(basis_[k], other.basis_[k]);
            if (c != 0)
                return c;
        }
        return basis_.size() <=> other.basis_.size();
    }

private:
    std::vector<Vector> basis_;
};

inline std::string to_string(const Subspace& s)
{
    std::string out = "span{";
    for (std::size_t i = 0; i < s.basis().size(); ++i) {
        if (i)
            out += ", ";
        out += '(';
        for (std::size_t k = 0; k < s.basis()[i].size(); ++k) {
            if (k)
                out += ',';
            out += to_string(s.basis()[i][k]);
        }
        out += ')';
    }
    return out + '}';
}

/// Scales v so its first nonzero entry is 1.
inline Vector normalize_first_nonzero(const Vector& v)
{
    for (const auto& x : v) {
        if (x != 0) {
            Vector out(v);
            Rational inv = 1 / x;
            for (auto& y : out)
                y *= inv;
            return out;
        }
    }
    throw InvalidInput("normalize_first_nonzero: zero vector");
}

/// A colored configuration: for each color c an unordered list of
/// ell * p_c independent r-tuples of points in FP^D.
class Configuration {
public:
    const Weight& weight() const noexcept { return weight_; }
    std::size_t arity() const noexcept { return arity_; }
    std::size_t dim() const noexcept { return dim_; }
    long ell() const noexcept { return ell_; }
    std::size_t color_count() const noexcept { return colors_.size(); }

    /// Color lists, each sorted by member names (multiset semantics).
    const std::vector<std::vector<RTuple>>& colors() const noexcept { return colors_; }
    const std::vector<RTuple>& color(std::size_t c) const { return colors_.at(c); }
    /// spans()[c][K] is the span of colors()[c][K].
    const std::vector<std::vector<Subspace>>& spans() const noexcept { return spans_; }
    const std::map<std::string, ProjPoint>& points() const noexcept { return points_; }

    const ProjPoint& point(const std::string& name) const
    {
        auto it = points_.find(name);
        if (it == points_.end())
            throw ConfigError(ConfigErrorKind::unknown_point, "'" + name + "'");
        return it->second;
    }

    /// Names of points occurring in some tuple, sorted.
    std::vector<std::string> used_points() const
    {
        std::set<std::string> used;
        for (const auto& list : colors_)
            for (const auto& t : list)
                used.insert(t.members.begin(), t.members.end());
        return {used.begin(), used.end()};
    }

    /// The distinct spans L(S), sorted.
    std::vector<Subspace> subspaces() const
    {
        std::set<Subspace> all;
        for (const auto& list : spans_)
            all.insert(list.begin(), list.end());
        return {all.begin(), all.end()};
    }

    friend Configuration build_configuration(Weight weight, std::size_t arity, std::size_t dim,
                                             std::vector<std::vector<RTuple>> colors,
                                             std::vector<ProjPoint> points);

private:
    Weight weight_;
    std::size_t arity_ = 0;
    std::size_t dim_ = 0;
    long ell_ = 0;
    std::vector<std::vector<RTuple>> colors_;
    std::vector<std::vector<Subspace>> spans_;
    std::map<std::string, ProjPoint> points_;
};

/// Validates shape, names, independence and list lengths; infers ell.
inline Configuration build_configuration(Weight weight, std::size_t arity, std::size_t dim,
                                         std::vector<std::vector<RTuple>> colors, std::vector<ProjPoint> points)
{
    if (arity < 1 || arity > dim + 1)
        throw ConfigError(ConfigErrorKind::shape, "arity " + std::to_string(arity) + " must lie in 1..D+1 = " +
                                                      std::to_string(dim + 1));
    if (colors.size() != weight.size())
        throw ConfigError(ConfigErrorKind::shape, "weight has " + std::to_string(weight.size()) +
                                                      " parts but there are " + std::to_string(colors.size()) +
                                                      " color lists");

    Configuration cfg;
    for (std::size_t idx = 0; idx < points.size(); ++idx) {
        auto& pt = points[idx];
        if (pt.coords.size() != dim + 1)
            throw ConfigError(ConfigErrorKind::shape, "point '" + pt.name + "' has " +
                                                          std::to_string(pt.coords.size()) + " coordinates, expected " +
                                                          std::to_string(dim + 1));
        if (is_zero(pt.coords))
            throw ConfigError(ConfigErrorKind::shape, "point '" + pt.name + "' is the zero vector");
        if (cfg.points_.count(pt.name))
            throw ConfigError(ConfigErrorKind::duplicate_point, "'" + pt.name + "'");
        cfg.points_.emplace(pt.name, std::move(pt));
    }

    std::optional<long> ell;
    cfg.spans_.resize(colors.size());
    for (std::size_t c = 0; c < colors.size(); ++c) {
        auto& list = colors[c];
        for (std::size_t K = 0; K < list.size(); ++K) {
            const auto& t = list[K];
            std::string where = "color " + std::to_string(c) + " tuple " + std::to_string(K);
            if (t.size() != arity)
                throw ConfigError(ConfigErrorKind::shape, where + " has " + std::to_string(t.size()) +
                                                              " members, expected " + std::to_string(arity));
            std::vector<Vector> reps;
            for (const auto& name : t.members) {
                auto it = cfg.points_.find(name);
                if (it == cfg.points_.end())
                    throw ConfigError(ConfigErrorKind::unknown_point, "'" + name + "' in " + where);
                reps.push_back(it->second.coords);
            }
            if (rank(reps) != arity)
                throw ConfigError(ConfigErrorKind::dependent_tuple, where);
        }
        long pc = weight[c];
        if (static_cast<long>(list.size()) % pc != 0)
            throw ConfigError(ConfigErrorKind::length_not_divisible,
                              "color " + std::to_string(c) + " has " + std::to_string(list.size()) +
                                  " tuples, not a multiple of p_" + std::to_string(c) + " = " + std::to_string(pc));
        long this_ell = static_cast<long>(list.size()) / pc;
        if (ell && *ell != this_ell)
            throw ConfigError(ConfigErrorKind::inconsistent_ell, "color " + std::to_string(c) + " gives ell = " +
                                                                     std::to_string(this_ell) + ", earlier colors " +
                                                                     std::to_string(*ell));
        ell = this_ell;
    }
    if (!ell || *ell == 0)
        throw ConfigError(ConfigErrorKind::zero_ell, "every color list is empty");

    for (std::size_t c = 0; c < colors.size(); ++c) {
        std::sort(colors[c].begin(), colors[c].end());
        for (const auto& t : colors[c]) {
            std::vector<Vector> reps;
            for (const auto& name : t.members)
                reps.push_back(cfg.points_.at(name).coords);
            cfg.spans_[c].push_back(Subspace::span(reps));
        }
    }

    cfg.weight_ = std::move(weight);
    cfg.arity_ = arity;
    cfg.dim_ = dim;
    cfg.ell_ = *ell;
    cfg.colors_ = std::move(colors);
    return cfg;
}

/// Canonical echelon basis of the span of a tuple's representative vectors.
inline Subspace span_of(const RTuple& t, const Configuration& cfg)
{
    std::vector<Vector> reps;
    for (const auto& name : t.members)
        reps.push_back(cfg.point(name).coords);
    if (rank(reps) != t.size())
        throw InvalidInput("span_of: tuple is dependent");
    return Subspace::span(reps);
}

/// Number of color-c tuples (with multiplicity) containing the point.
inline long point_degree(const Configuration& cfg, const std::string& name, std::size_t c)
{
    cfg.point(name);
    long deg = 0;
    for (const auto& t : cfg.color(c))
        deg += static_cast<long>(std::count(t.members.begin(), t.members.end(), name));
    return deg;
}

/// Number of color-c tuples (with multiplicity) whose span is L.
inline long subspace_degree(const Configuration& cfg, const Subspace& L, std::size_t c)
{
    const auto& spans = cfg.spans().at(c);
    return static_cast<long>(std::count(spans.begin(), spans.end(), L));
}

struct PointDegrees {
    std::string name;
    std::vector<long> degrees;
    /// deg_c(z) / p_c when it is one integer for every c.
    std::optional<long> quotient;
};

struct SubspaceDegrees {
    Subspace span;
    std::vector<long> degrees;
    /// m_L = deg_c(L) / p_c when it is one integer for every c.
    std::optional<long> multiplicity;
};

struct DegreeReport {
    Weight weight;
    std::vector<PointDegrees> points;
    std::vector<SubspaceDegrees> subspaces;
    bool h_valid = true;
    /// Describes the first point or subspace violating the h-condition.
    std::string first_failure;
};

namespace detail {

inline std::optional<long> common_quotient(const std::vector<long>& degrees, const Weight& p)
{
    std::optional<long> q;
    for (std::size_t c = 0; c < degrees.size(); ++c) {
        if (degrees[c] % p[c] != 0)
            return std::nullopt;
        long this_q = degrees[c] / p[c];
        if (q && *q != this_q)
            return std::nullopt;
        q = this_q;
    }
    return q;
}

} // namespace detail

/// Checks the h-condition against an arbitrary weight with one part per color.
inline DegreeReport validate_h(const Configuration& cfg, const Weight& weight)
{
    if (weight.size() != cfg.color_count())
        throw InvalidInput("validate_h: weight length does not match the number of colors");

    DegreeReport report{weight, {}, {}, true, {}};
    for (const auto& [name, pt] : cfg.points()) {
        PointDegrees pd{name, {}, std::nullopt};
        for (std::size_t c = 0; c < cfg.color_count(); ++c)
            pd.degrees.push_back(point_degree(cfg, name, c));
        pd.quotient = detail::common_quotient(pd.degrees, weight);
        if (!pd.quotient && report.h_valid) {
            report.h_valid = false;
            report.first_failure = "point '" + name + "'";
        }
        report.points.push_back(std::move(pd));
    }
    for (const auto& L : cfg.subspaces()) {
        SubspaceDegrees sd{L, {}, std::nullopt};
        for (std::size_t c = 0; c < cfg.color_count(); ++c)
            sd.degrees.push_back(subspace_degree(cfg, L, c));
        sd.multiplicity = detail::common_quotient(sd.degrees, weight);
        if (!sd.multiplicity && report.h_valid) {
            report.h_valid = false;
            report.first_failure = "subspace " + to_string(L);
        }
        report.subspaces.push_back(std::move(sd));
    }
    return report;
}

inline DegreeReport validate_h(const Configuration& cfg)
{
    return validate_h(cfg, cfg.weight());
}

} // namespace eves
