#pragma once

// Shared generators and fixture helpers for the test binaries.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "eves/eves.hpp"

namespace eves::gen {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline bool coin(Rng& rng)
{
    return uniform(rng, 0, 1) == 1;
}

inline std::string fixture(const std::string& name)
{
    return std::string(EVES_FIXTURES) + "/" + name + ".json";
}

inline Configuration load_fixture(const std::string& name)
{
    return io::load_configuration(fixture(name));
}

/// Nonzero rational with numerator and denominator magnitudes in 1..h.
inline Rational random_nonzero(Rng& rng, long h)
{
    Rational q(uniform(rng, 1, h), uniform(rng, 1, h));
    q.canonicalize();
    return coin(rng) ? q : Rational(-q);
}

inline Rational random_rational(Rng& rng, long h)
{
    Rational q(uniform(rng, -h, h), uniform(rng, 1, h));
    q.canonicalize();
    return q;
}

inline Vector random_integer_vector(Rng& rng, std::size_t len, long bound)
{
    for (;;) {
        Vector v(len);
        for (auto& x : v)
            x = uniform(rng, -bound, bound);
        if (!is_zero(v))
            return v;
    }
}

inline Matrix random_invertible(Rng& rng, std::size_t n, long bound = 3)
{
    for (;;) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = uniform(rng, -bound, bound);
        if (determinant(m) != 0)
            return m;
    }
}

inline Weight random_weight(Rng& rng, std::size_t max_len, long max_part, FieldTag tag = FieldTag::RealLike)
{
    std::vector<long> parts(static_cast<std::size_t>(uniform(rng, 2, static_cast<long>(max_len))));
    for (auto& p : parts)
        p = uniform(rng, 1, max_part);
    return Weight(parts, tag);
}

/// Random weight-p h-configuration of segments (r = 2) built from blocks
/// that each satisfy the degree condition on their own:
///  - a pair {P, Q} carrying p_c randomly oriented segments of color c;
///  - four collinear points carrying, per color, p_c random perfect
///    matchings with random orientations.
/// Blocks may share points, which keeps degrees proportional.
inline Configuration random_h_configuration(Rng& rng, std::size_t max_colors = 4, std::size_t max_dim = 3,
                                            long max_part = 4)
{
    Weight weight = random_weight(rng, max_colors, max_part);
    const auto dim = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_dim)));
    std::vector<ProjPoint> points;
    std::vector<std::vector<RTuple>> colors(weight.size());

    auto fresh = [&](Vector v) {
        std::string name = "P" + std::to_string(points.size());
        points.push_back({name, std::move(v)});
        return points.size() - 1;
    };
    auto independent_pair = [&]() -> std::pair<std::size_t, std::size_t> {
        std::size_t first;
        if (!points.empty() && coin(rng))
            first = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(points.size()) - 1));
        else
            first = fresh(random_integer_vector(rng, dim + 1, 3));
        for (;;) {
            auto v = random_integer_vector(rng, dim + 1, 3);
            if (rank({points[first].coords, v}) == 2)
                return {first, fresh(std::move(v))};
        }
    };
    auto segment = [&](std::size_t a, std::size_t b) {
        if (coin(rng))
            std::swap(a, b);
        return RTuple{{points[a].name, points[b].name}};
    };

    const long blocks = uniform(rng, 1, 3);
    for (long blk = 0; blk < blocks; ++blk) {
        auto [a, b] = independent_pair();
        if (coin(rng)) {
            for (std::size_t c = 0; c < weight.size(); ++c)
                for (long k = 0; k < weight[c]; ++k)
                    colors[c].push_back(segment(a, b));
        } else {
            static const std::vector<std::pair<long, long>> combos = {{1, 1}, {1, -1}, {1, 2}, {2, 1}, {1, -2}};
            std::vector<std::size_t> quad = {a, b};
            auto picks = combos;
            std::shuffle(picks.begin(), picks.end(), rng);
            for (int e = 0; e < 2; ++e) {
                Vector v(dim + 1);
                for (std::size_t k = 0; k <= dim; ++k)
                    v[k] = picks[e].first * points[a].coords[k] + picks[e].second * points[b].coords[k];
                quad.push_back(fresh(std::move(v)));
            }
            static const int matchings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
            for (std::size_t c = 0; c < weight.size(); ++c) {
                for (long k = 0; k < weight[c]; ++k) {
                    const auto& m = matchings[uniform(rng, 0, 2)];
                    colors[c].push_back(segment(quad[m[0]], quad[m[1]]));
                    colors[c].push_back(segment(quad[m[2]], quad[m[3]]));
                }
            }
        }
    }
    for (auto& list : colors)
        std::shuffle(list.begin(), list.end(), rng);
    return build_configuration(weight, 2, dim, std::move(colors), std::move(points));
}

/// Random representatives and random changes of basis for every span.
inline BasisChoice random_choices(Rng& rng, const Configuration& cfg)
{
    BasisChoice choice;
    for (const auto& L : cfg.subspaces()) {
        auto q = random_invertible(rng, L.dimension());
        std::vector<Vector> basis;
        for (std::size_t i = 0; i < L.dimension(); ++i) {
            Vector row(L.ambient_dimension());
            for (std::size_t j = 0; j < L.dimension(); ++j)
                for (std::size_t k = 0; k < row.size(); ++k)
                    row[k] += q(i, j) * L.basis()[j][k];
            basis.push_back(std::move(row));
        }
        choice.bases.emplace(L, std::move(basis));
    }
    for (const auto& name : cfg.used_points()) {
        Rational s = random_nonzero(rng, 7);
        Vector rep = cfg.point(name).coords;
        for (auto& x : rep)
            x *= s;
        choice.representatives.emplace(name, std::move(rep));
    }
    return choice;
}

/// A pair (z, w) for comparing wps_equivalent against the bounded lambda
/// search. Every real lambda with w = lambda . z has |lambda| = |lambda0|
/// for the lambda0 = +-a/b (a, b <= 8) used to build w, so any witness is
/// rational and inside the search bound.
struct PoolPair {
    WeightedPoint z;
    WeightedPoint w;
};

inline PoolPair bounded_pool_pair(Rng& rng, const Weight& weight)
{
    const std::size_t len = weight.size();
    Vector z(len);
    for (;;) {
        int nonzero = 0;
        for (auto& x : z) {
            x = uniform(rng, 0, 4) == 0 ? Rational(0) : random_nonzero(rng, 6);
            nonzero += x != 0;
        }
        if (nonzero >= 2)
            break;
    }
    Rational lambda0(uniform(rng, 1, 8), uniform(rng, 1, 8));
    lambda0.canonicalize();
    if (coin(rng))
        lambda0 = -lambda0;
    Vector w(len);
    for (std::size_t k = 0; k < len; ++k)
        w[k] = pow(lambda0, weight[k]) * z[k];

    // Perturbations that keep the magnitude of any witness pinned.
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < len; ++k)
        if (z[k] != 0)
            support.push_back(k);
    switch (uniform(rng, 0, 4)) {
    case 0:
    case 1:
        break;
    case 2: // flip one sign
        w[support[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(support.size()) - 1))]] *= -1;
        break;
    case 3: { // break one magnitude (other coordinates still pin |lambda|)
        auto k = support[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(support.size()) - 1))];
        w[k] *= 5;
        break;
    }
    default: { // change the zero pattern
        auto k = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(len) - 1));
        w[k] = w[k] == 0 ? Rational(1) : Rational(0);
        if (is_zero(w))
            w[k] = 1;
        break;
    }
    }
    return {WeightedPoint(z, weight), WeightedPoint(w, weight)};
}

} // namespace eves::gen
