#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eves/configuration.hpp"
#include "eves/invariant.hpp"
#include "eves/numtheory.hpp"
#include "eves/wps.hpp"

namespace eves {

namespace detail {

inline std::vector<ProjPoint> point_list(const Configuration& cfg)
{
    std::vector<ProjPoint> out;
    for (const auto& [name, pt] : cfg.points())
        out.push_back(pt);
    return out;
}

} // namespace detail

/// The two-color configuration (S_i, S_j) with weight (p_i, p_j).
inline Configuration restrict_pair(const Configuration& cfg, std::size_t i, std::size_t j)
{
    if (!(i < j && j < cfg.color_count()))
        throw InvalidInput("restrict_pair: need 0 <= i < j <= n");
    Weight w({cfg.weight()[i], cfg.weight()[j]}, cfg.weight().field());
    return build_configuration(std::move(w), cfg.arity(), cfg.dim(), {cfg.color(i), cfg.color(j)},
                               detail::point_list(cfg));
}

/// S^(i,j): color 0 repeated lcm/p_0 times, color 1 repeated lcm/p_1 times,
/// giving a weight (1,1) configuration.
inline Configuration unit_weight_expansion(const Configuration& pair)
{
    if (pair.color_count() != 2)
        throw InvalidInput("unit_weight_expansion: expects a two-color configuration");
    const long l = numtheory::lcm(pair.weight()[0], pair.weight()[1]);
    std::vector<std::vector<RTuple>> colors(2);
    for (std::size_t c = 0; c < 2; ++c) {
        long copies = l / pair.weight()[c];
        for (long k = 0; k < copies; ++k)
            colors[c].insert(colors[c].end(), pair.color(c).begin(), pair.color(c).end());
    }
    return build_configuration(unit_weight(2, pair.weight().field()), pair.arity(), pair.dim(), std::move(colors),
                               detail::point_list(pair));
}

/// E_(1,1)(S^(i,j)) for every pair i < j, lexicographic.
struct ReconstructionVector {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<WeightedPoint> values;
};

inline ReconstructionVector reconstruction_vector(const Configuration& cfg)
{
    ReconstructionVector out;
    for (auto [i, j] : index_pairs(cfg.color_count())) {
        out.pairs.emplace_back(i, j);
        out.values.push_back(eves_invariant(unit_weight_expansion(restrict_pair(cfg, i, j))).point());
    }
    return out;
}

/// E_(1,1)(S^(i,j)) ~ h_ij(E_p(S)) for every pair.
inline bool check_corollary(const Configuration& cfg)
{
    auto ep = eves_invariant(cfg).point();
    auto rv = reconstruction_vector(cfg);
    for (std::size_t k = 0; k < rv.pairs.size(); ++k) {
        auto [i, j] = rv.pairs[k];
        auto projected = apply_axis_projection(canonical_axis_projection(cfg.weight(), i, j), ep);
        if (!wps_equivalent(rv.values[k], projected))
            return false;
    }
    return true;
}

struct PairDetail {
    std::size_t i = 0;
    std::size_t j = 0;
    WeightedPoint a;
    WeightedPoint b;
    bool equal = false;
};

struct CompareReport {
    InvariantValue ep_a;
    InvariantValue ep_b;
    bool ep_equivalent = false;
    bool reconstruction_equal = false;
    std::vector<PairDetail> pairs;
};

inline CompareReport compare(const Configuration& a, const Configuration& b)
{
    if (a.weight() != b.weight() || a.arity() != b.arity())
        throw InvalidInput("compare: configurations differ in weight or arity");

    CompareReport report{eves_invariant(a), eves_invariant(b), false, true, {}};
    report.ep_equivalent = equivalent(report.ep_a, report.ep_b);
    auto ra = reconstruction_vector(a);
    auto rb = reconstruction_vector(b);
    for (std::size_t k = 0; k < ra.pairs.size(); ++k) {
        bool eq = wps_equivalent(ra.values[k], rb.values[k]);
        report.reconstruction_equal = report.reconstruction_equal && eq;
        report.pairs.push_back({ra.pairs[k].first, ra.pairs[k].second, ra.values[k], rb.values[k], eq});
    }
    return report;
}

inline std::string pair_label(std::size_t i, std::size_t j)
{
    return "h_" + std::to_string(i) + std::to_string(j);
}

inline std::string render(const ReconstructionVector& rv)
{
    std::ostringstream out;
    for (std::size_t k = 0; k < rv.pairs.size(); ++k)
        out << pair_label(rv.pairs[k].first, rv.pairs[k].second) << ": " << to_short_string(rv.values[k]) << '\n';
    return out.str();
}

inline std::string render(const CompareReport& r)
{
    std::ostringstream out;
    for (const auto& p : r.pairs)
        out << pair_label(p.i, p.j) << ": " << to_short_string(p.a) << " vs " << to_short_string(p.b) << '\n';
    out << "E_p: " << to_string(r.ep_a.point()) << " vs " << to_string(r.ep_b.point()) << '\n';
    out << "ep_equivalent: " << (r.ep_equivalent ? "true" : "false") << '\n';
    out << "reconstruction_equal: " << (r.reconstruction_equal ? "true" : "false") << '\n';
    return out.str();
}

} // namespace eves
