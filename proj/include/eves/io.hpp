#pragma once

// JSON reading and writing of configurations and matrices.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eves/configuration.hpp"
#include "eves/errors.hpp"
#include "eves/matrix.hpp"
#include "eves/rational.hpp"
#include "eves/wps.hpp"

namespace eves::io {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

namespace detail {

class Reader {
public:
    explicit Reader(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(const std::string& field, const std::string& what) const
    {
        throw ParseError(source_ + ": field '" + field + "': " + what);
    }

    Json parse(const std::string& text) const
    {
        try {
            return Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw ParseError(source_ + ": invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
        }
    }

    const Json& member(const Json& obj, const std::string& key) const
    {
        if (!obj.is_object())
            fail(key, "document is not a JSON object");
        auto it = obj.find(key);
        if (it == obj.end())
            fail(key, "missing");
        return *it;
    }

    long positive_integer(const Json& v, const std::string& field) const
    {
        if (!v.is_number_integer() || v.get<long>() < 0)
            fail(field, "expected a non-negative integer");
        return v.get<long>();
    }

    Rational rational(const Json& v, const std::string& field) const
    {
        if (v.is_number_integer())
            return Rational(v.get<long>());
        if (!v.is_string())
            fail(field, "expected a rational string such as \"-3/4\"");
        try {
            return parse_rational(v.get<std::string>());
        } catch (const ParseError& e) {
            fail(field, e.what());
        }
    }

    Vector vector(const Json& v, const std::string& field) const
    {
        if (!v.is_array())
            fail(field, "expected an array of rationals");
        Vector out;
        for (std::size_t k = 0; k < v.size(); ++k)
            out.push_back(rational(v[k], field + "[" + std::to_string(k) + "]"));
        return out;
    }

private:
    std::string source_;
};

inline FieldTag parse_field(const Reader& rd, const Json& doc)
{
    auto it = doc.find("field");
    if (it == doc.end())
        return FieldTag::RealLike;
    if (!it->is_string())
        rd.fail("field", "expected a string");
    auto text = it->get<std::string>();
    if (text == "rational" || text == "real")
        return FieldTag::RealLike;
    if (text == "complex")
        return FieldTag::ComplexLike;
    rd.fail("field", "unknown field '" + text + "' (use rational, real or complex)");
}

inline std::string field_name(FieldTag tag)
{
    return tag == FieldTag::ComplexLike ? "complex" : "rational";
}

} // namespace detail

/// Parses a configuration document. `source` names the input in diagnostics.
/// Structural problems beyond JSON shape surface as ConfigError, which does
/// not carry the source name.
inline Configuration parse_configuration(const std::string& text, const std::string& source = "<input>")
{
    detail::Reader rd(source);
    Json doc = rd.parse(text);
    if (!doc.is_object())
        rd.fail("<root>", "document is not a JSON object");

    FieldTag tag = detail::parse_field(rd, doc);

    const auto& wj = rd.member(doc, "weight");
    if (!wj.is_array())
        rd.fail("weight", "expected an array of positive integers");
    std::vector<long> parts;
    for (std::size_t k = 0; k < wj.size(); ++k)
        parts.push_back(rd.positive_integer(wj[k], "weight[" + std::to_string(k) + "]"));
    Weight weight = [&] {
        try {
            return Weight(parts, tag);
        } catch (const InvalidInput& e) {
            rd.fail("weight", e.what());
        }
    }();

    auto arity = static_cast<std::size_t>(rd.positive_integer(rd.member(doc, "arity"), "arity"));
    auto dim = static_cast<std::size_t>(rd.positive_integer(rd.member(doc, "dim"), "dim"));

    const auto& pj = rd.member(doc, "points");
    if (!pj.is_object())
        rd.fail("points", "expected an object mapping names to coordinate arrays");
    std::vector<ProjPoint> points;
    for (const auto& [name, coords] : pj.items()) {
        std::string field = "points." + name;
        Vector v = rd.vector(coords, field);
        if (v.size() != dim + 1)
            rd.fail(field, "has " + std::to_string(v.size()) + " coordinates, expected dim+1 = " +
                               std::to_string(dim + 1));
        if (is_zero(v))
            rd.fail(field, "is the zero vector");
        points.push_back({name, std::move(v)});
    }

    const auto& cj = rd.member(doc, "colors");
    if (!cj.is_array())
        rd.fail("colors", "expected an array of color lists");
    std::vector<std::vector<RTuple>> colors;
    for (std::size_t c = 0; c < cj.size(); ++c) {
        std::string cfield = "colors[" + std::to_string(c) + "]";
        if (!cj[c].is_array())
            rd.fail(cfield, "expected an array of tuples");
        std::vector<RTuple> list;
        for (std::size_t K = 0; K < cj[c].size(); ++K) {
            std::string tfield = cfield + "[" + std::to_string(K) + "]";
            const auto& tj = cj[c][K];
            if (!tj.is_array())
                rd.fail(tfield, "expected an array of point names");
            RTuple t;
            for (std::size_t e = 0; e < tj.size(); ++e) {
                if (!tj[e].is_string())
                    rd.fail(tfield + "[" + std::to_string(e) + "]", "expected a point name");
                t.members.push_back(tj[e].get<std::string>());
            }
            list.push_back(std::move(t));
        }
        colors.push_back(std::move(list));
    }

    return build_configuration(std::move(weight), arity, dim, std::move(colors), std::move(points));
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline Configuration load_configuration(const std::string& path)
{
    try {
        return parse_configuration(read_file(path), path);
    } catch (const ConfigError& e) {
        throw ConfigError(e.kind(), e.detail() + " (" + path + ")");
    }
}

inline OrderedJson to_json(const Configuration& cfg)
{
    OrderedJson doc;
    doc["field"] = detail::field_name(cfg.weight().field());
    doc["weight"] = cfg.weight().parts();
    doc["arity"] = cfg.arity();
    doc["dim"] = cfg.dim();
    OrderedJson points = OrderedJson::object();
    for (const auto& [name, pt] : cfg.points()) {
        OrderedJson coords = OrderedJson::array();
        for (const auto& x : pt.coords)
            coords.push_back(to_string(x));
        points[name] = std::move(coords);
    }
    doc["points"] = std::move(points);
    OrderedJson colors = OrderedJson::array();
    for (const auto& list : cfg.colors()) {
        OrderedJson lj = OrderedJson::array();
        for (const auto& t : list)
            lj.push_back(t.members);
        colors.push_back(std::move(lj));
    }
    doc["colors"] = std::move(colors);
    return doc;
}

/// Compact layout: one line per point and per color list.
inline std::string serialize_configuration(const Configuration& cfg)
{
    auto doc = to_json(cfg);
    std::ostringstream out;
    out << "{\n";
    out << "  \"field\": " << doc["field"].dump() << ",\n";
    out << "  \"weight\": " << doc["weight"].dump() << ",\n";
    out << "  \"arity\": " << doc["arity"].dump() << ",\n";
    out << "  \"dim\": " << doc["dim"].dump() << ",\n";
    out << "  \"points\": {";
    bool first = true;
    for (const auto& [name, coords] : doc["points"].items()) {
        out << (first ? "\n" : ",\n") << "    " << OrderedJson(name).dump() << ": " << coords.dump();
        first = false;
    }
    out << "\n  },\n";
    out << "  \"colors\": [";
    for (std::size_t c = 0; c < doc["colors"].size(); ++c) {
        out << (c == 0 ? "\n" : ",\n") << "    [";
        const auto& list = doc["colors"][c];
        for (std::size_t K = 0; K < list.size(); ++K)
            out << (K == 0 ? "" : ", ") << list[K].dump();
        out << "]";
    }
    out << "\n  ]\n}\n";
    return out.str();
}

/// A JSON array of rows of rationals.
inline Matrix parse_matrix(const std::string& text, const std::string& source = "<matrix>")
{
    detail::Reader rd(source);
    Json doc = rd.parse(text);
    if (!doc.is_array() || doc.empty())
        rd.fail("<root>", "expected a non-empty array of rows");
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        std::string field = "row " + std::to_string(i);
        rows.push_back(rd.vector(doc[i], field));
        if (rows.back().empty())
            rd.fail(field, "is empty");
        if (rows.back().size() != rows.front().size())
            rd.fail(field, "has " + std::to_string(rows.back().size()) + " entries, row 0 has " +
                               std::to_string(rows.front().size()));
    }
    return Matrix::from_rows(rows);
}

inline Matrix load_matrix(const std::string& path)
{
    return parse_matrix(read_file(path), path);
}

/// Comma-separated lists such as "2,2,4" or "1,-1/2".
inline std::vector<std::string> split_list(const std::string& text, const std::string& what)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        out.push_back(item);
    if (out.empty() || (!text.empty() && text.back() == ','))
        throw ParseError(what + ": malformed list '" + text + "'");
    return out;
}

inline Weight parse_weight(const std::string& text, FieldTag tag = FieldTag::RealLike)
{
    std::vector<long> parts;
    for (const auto& item : split_list(text, "--weight")) {
        Rational q = [&] {
            try {
                return parse_rational(item);
            } catch (const ParseError&) {
                throw ParseError("--weight: '" + item + "' is not an integer");
            }
        }();
        if (q.get_den() != 1 || !q.get_num().fits_slong_p() || q <= 0)
            throw ParseError("--weight: '" + item + "' is not a positive integer");
        parts.push_back(q.get_num().get_si());
    }
    try {
        return Weight(parts, tag);
    } catch (const InvalidInput& e) {
        throw ParseError(std::string("--weight: ") + e.what());
    }
}

inline Vector parse_vector(const std::string& text, const std::string& what)
{
    Vector out;
    for (const auto& item : split_list(text, what)) {
        try {
            out.push_back(parse_rational(item));
        } catch (const ParseError& e) {
            throw ParseError(what + ": " + e.what());
        }
    }
    return out;
}

} // namespace eves::io
