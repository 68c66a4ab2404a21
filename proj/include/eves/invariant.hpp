#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eves/configuration.hpp"
#include "eves/errors.hpp"
#include "eves/matrix.hpp"
#include "eves/rational.hpp"
#include "eves/wps.hpp"

namespace eves {

/// One ordered basis per span and one representative vector per point.
struct BasisChoice {
    std::map<Subspace, std::vector<Vector>> bases;
    std::map<std::string, Vector> representatives;
};

/// E_p(S): a point of D_p. Compare values with wps_equivalent.
class InvariantValue {
public:
    explicit InvariantValue(WeightedPoint point) : point_(std::move(point))
    {
        if (!point_.in_generic_locus())
            throw InvalidInput("invariant value must have all coordinates nonzero");
    }

    const WeightedPoint& point() const noexcept { return point_; }
    const Weight& weight() const noexcept { return point_.weight(); }

private:
    WeightedPoint point_;
};

inline bool equivalent(const InvariantValue& a, const InvariantValue& b)
{
    return wps_equivalent(a.point(), b.point());
}

/// Peano bracket: determinant of the basis coordinates of the r
/// representatives, stacked as columns.
inline Rational bracket(const std::vector<Vector>& representatives, const std::vector<Vector>& basis)
{
    const std::size_t r = basis.size();
    if (representatives.size() != r)
        throw InvalidInput("bracket: need exactly r representatives for an r-dimensional basis");
    if (rank(basis) != r)
        throw InvalidInput("bracket: basis vectors are dependent");
    Matrix columns(r, r);
    for (std::size_t e = 0; e < r; ++e) {
        auto coords = coordinates_in_basis(basis, representatives[e]);
        if (!coords)
            throw InvalidInput("bracket: basis does not span the tuple");
        for (std::size_t i = 0; i < r; ++i)
            columns(i, e) = (*coords)[i];
    }
    return determinant(columns);
}

inline Rational bracket(const RTuple& t, const std::vector<Vector>& basis,
                        const std::map<std::string, Vector>& representatives)
{
    std::vector<Vector> reps;
    for (const auto& name : t.members) {
        auto it = representatives.find(name);
        if (it == representatives.end())
            throw InvalidInput("bracket: no representative for point '" + name + "'");
        reps.push_back(it->second);
    }
    return bracket(reps, basis);
}

/// First-nonzero-coordinate representatives and echelon bases.
inline BasisChoice canonical_choices(const Configuration& cfg)
{
    BasisChoice choice;
    for (const auto& L : cfg.subspaces())
        choice.bases.emplace(L, L.basis());
    for (const auto& name : cfg.used_points())
        choice.representatives.emplace(name, normalize_first_nonzero(cfg.point(name).coords));
    return choice;
}

namespace detail {

inline void require_h_configuration(const Configuration& cfg)
{
    auto report = validate_h(cfg);
    if (!report.h_valid)
        throw NotHConfiguration("not a weight-p h-configuration: " + report.first_failure + " fails the degree test");
}

inline void check_choices(const Configuration& cfg, const BasisChoice& choice)
{
    for (const auto& L : cfg.subspaces()) {
        auto it = choice.bases.find(L);
        if (it == choice.bases.end())
            throw InvalidInput("basis choice: no basis for " + to_string(L));
        if (it->second.size() != L.dimension() || rank(it->second) != L.dimension() ||
            Subspace::span(it->second) != L)
            throw InvalidInput("basis choice: basis does not span " + to_string(L));
    }
    for (const auto& name : cfg.used_points()) {
        auto it = choice.representatives.find(name);
        if (it == choice.representatives.end())
            throw InvalidInput("basis choice: no representative for '" + name + "'");
        const auto& rep = it->second;
        if (is_zero(rep) || rep.size() != cfg.dim() + 1 || rank({rep, cfg.point(name).coords}) != 1)
            throw InvalidInput("basis choice: representative of '" + name + "' is not a nonzero multiple");
    }
}

} // namespace detail

/// E_p(S) computed from caller-supplied bases and representatives.
inline InvariantValue eves_invariant_with_choices(const Configuration& cfg, const BasisChoice& choice)
{
    detail::require_h_configuration(cfg);
    detail::check_choices(cfg, choice);

    Vector coords;
    for (std::size_t c = 0; c < cfg.color_count(); ++c) {
        Rational product = 1;
        const auto& list = cfg.color(c);
        for (std::size_t K = 0; K < list.size(); ++K)
            product *= bracket(list[K], choice.bases.at(cfg.spans()[c][K]), choice.representatives);
        coords.push_back(product);
    }
    return InvariantValue(WeightedPoint(std::move(coords), cfg.weight()));
}

/// E_p(S) with the canonical choices; deterministic representative.
inline InvariantValue eves_invariant(const Configuration& cfg)
{
    detail::require_h_configuration(cfg);
    return eves_invariant_with_choices(cfg, canonical_choices(cfg));
}

/// A linear map F^{D+1} -> F^{D'+1}, applied to column vectors.
struct LinearMorphism {
    Matrix matrix;
};

/// Image configuration under a linear map that is injective on every span.
/// Points whose images coincide projectively are merged under the name
/// formed by joining their sorted names with '+'.
inline Configuration apply_morphism(const Configuration& cfg, const LinearMorphism& m)
{
    const auto& A = m.matrix;
    if (A.cols() != cfg.dim() + 1 || A.rows() == 0)
        throw MorphismError("morphism matrix must have D+1 = " + std::to_string(cfg.dim() + 1) + " columns");

    for (const auto& L : cfg.subspaces()) {
        std::vector<Vector> image;
        for (const auto& b : L.basis())
            image.push_back(A * b);
        if (rank(image) != L.dimension())
            throw MorphismError("matrix is not injective on " + to_string(L));
    }

    // Group used points by the projective class of their image.
    std::map<std::string, Vector> image_of;
    std::vector<std::pair<Vector, std::vector<std::string>>> groups;
    for (const auto& name : cfg.used_points()) {
        Vector img = A * cfg.point(name).coords;
        if (is_zero(img))
            throw MorphismError("point '" + name + "' maps to the zero vector");
        image_of.emplace(name, img);
        Vector key = normalize_first_nonzero(img);
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == key; });
        if (it == groups.end())
            groups.push_back({key, {name}});
        else
            it->second.push_back(name);
    }

    std::map<std::string, std::string> rename;
    std::vector<ProjPoint> points;
    std::set<std::string> taken;
    for (const auto& [key, names] : groups) {
        std::string merged = names.front();
        for (std::size_t k = 1; k < names.size(); ++k)
            merged += "+" + names[k];
        while (names.size() > 1 && (cfg.points().count(merged) || taken.count(merged)))
            merged += "'";
        taken.insert(merged);
        for (const auto& n : names)
            rename[n] = merged;
        points.push_back({merged, image_of.at(names.front())});
    }

    std::vector<std::vector<RTuple>> colors;
    for (const auto& list : cfg.colors()) {
        std::vector<RTuple> mapped;
        for (const auto& t : list) {
            RTuple u;
            for (const auto& name : t.members)
                u.members.push_back(rename.at(name));
            mapped.push_back(std::move(u));
        }
        colors.push_back(std::move(mapped));
    }
    try {
        return build_configuration(cfg.weight(), cfg.arity(), A.rows() - 1, std::move(colors), std::move(points));
    } catch (const ConfigError& e) {
        throw MorphismError(std::string("image is not a configuration: ") + e.what());
    }
}

/// Cross-ratio of four distinct collinear points, as E_(1,1) of the
/// configuration S_0 = [(d,a), (c,b)], S_1 = [(c,a), (d,b)].
inline WeightedPoint cross_ratio(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c, const ProjPoint& d)
{
    std::vector<ProjPoint> pts{{"a", a.coords}, {"b", b.coords}, {"c", c.coords}, {"d", d.coords}};
    const std::size_t len = a.coords.size();
    for (const auto& p : pts)
        if (p.coords.size() != len || len < 2)
            throw InvalidInput("cross_ratio: points must share a dimension >= 1");
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (rank({pts[i].coords, pts[j].coords}) < 2)
                throw InvalidInput("cross_ratio: points '" + pts[i].name + "' and '" + pts[j].name + "' coincide");
    if (rank({a.coords, b.coords, c.coords, d.coords}) != 2)
        throw InvalidInput("cross_ratio: points are not collinear");

    auto cfg = build_configuration(unit_weight(), 2, len - 1,
                                   {{RTuple{{"d", "a"}}, RTuple{{"c", "b"}}}, {RTuple{{"c", "a"}}, RTuple{{"d", "b"}}}},
                                   std::move(pts));
    return eves_invariant(cfg).point();
}

enum class TrianglePattern { SixPoint, FivePoint, Octahedral };

/// Triangle lists (1-based labels) for each pattern: {black, red}.
inline std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>> triangle_lists(TrianglePattern pattern)
{
    switch (pattern) {
    case TrianglePattern::SixPoint:
        return {{{1, 2, 4}, {3, 5, 6}}, {{1, 2, 3}, {4, 5, 6}}};
    case TrianglePattern::FivePoint:
        return {{{1, 2, 4}, {3, 5, 1}}, {{1, 2, 3}, {4, 5, 1}}};
    case TrianglePattern::Octahedral:
        return {{{4, 6, 5}, {4, 2, 3}, {5, 1, 2}, {1, 3, 6}}, {{1, 2, 3}, {1, 6, 5}, {2, 4, 5}, {3, 4, 6}}};
    }
    throw InvalidInput("unknown triangle pattern");
}

/// Builds the triangle configuration of a pattern on plane points named
/// "1".."6" (or "1".."5"). With reverse_first, the first black and the first
/// red triangle have their last two vertices swapped.
inline Configuration triangle_configuration(const std::vector<Vector>& points, TrianglePattern pattern,
                                            const Weight& weight, bool reverse_first = false)
{
    std::size_t expected = pattern == TrianglePattern::FivePoint ? 5 : 6;
    if (points.size() != expected)
        throw InvalidInput("triangle pattern needs " + std::to_string(expected) + " points");
    std::vector<ProjPoint> named;
    for (std::size_t k = 0; k < points.size(); ++k)
        named.push_back({std::to_string(k + 1), points[k]});

    auto [black, red] = triangle_lists(pattern);
    auto to_tuples = [&](const std::vector<std::vector<int>>& tris) {
        std::vector<RTuple> out;
        for (std::size_t k = 0; k < tris.size(); ++k) {
            RTuple t;
            for (int label : tris[k])
                t.members.push_back(std::to_string(label));
            if (reverse_first && k == 0)
                std::swap(t.members[1], t.members[2]);
            out.push_back(std::move(t));
        }
        return out;
    };
    return build_configuration(weight, 3, 2, {to_tuples(black), to_tuples(red)}, std::move(named));
}

/// The invariant of a triangle pattern under the requested weight
/// ((1,1) for all patterns, or (2,2) for the octahedral one).
inline WeightedPoint triangle_ratio(const std::vector<Vector>& points, TrianglePattern pattern,
                                    const Weight& weight = unit_weight(), bool reverse_first = false)
{
    return eves_invariant(triangle_configuration(points, pattern, weight, reverse_first)).point();
}

/// Bracket of a directed segment on a line in the affine chart x_0 != 0,
/// using a basis of two chart points (first coordinate 1). Equals the signed
/// length t_2 - t_1 of the segment in the parametrization b_0 + t (b_1 - b_0).
inline Rational signed_length_bracket(const Subspace& line, const ProjPoint& from, const ProjPoint& to,
                                      const std::vector<Vector>& basis)
{
    if (line.dimension() != 2)
        throw InvalidInput("signed_length_bracket: subspace is not a line");
    if (basis.size() != 2 || basis[0].empty() || basis[0][0] != 1 || basis[1][0] != 1)
        throw InvalidInput("signed_length_bracket: basis must be two chart points with first coordinate 1");
    if (rank(basis) != 2 || Subspace::span(basis) != line)
        throw InvalidInput("signed_length_bracket: basis does not span the line");
    std::vector<Vector> reps;
    for (const auto* p : {&from, &to}) {
        if (p->coords.empty() || p->coords[0] == 0)
            throw UndefinedPoint("signed_length_bracket: point '" + p->name + "' is at infinity");
        if (!line.contains(p->coords))
            throw InvalidInput("signed_length_bracket: point '" + p->name + "' is not on the line");
        reps.push_back(normalize_first_nonzero(p->coords));
    }
    return bracket(reps, basis);
}

} // namespace eves
