#ifndef HYPEROVAL_IO_HPP
#define HYPEROVAL_IO_HPP

// JSON files for hyperovals, ovoids and verification reports. Key order is
// fixed (ordered_json) so identical inputs give byte-identical output.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>
#include "analysis.hpp"

namespace hyperoval {

using json = nlohmann::ordered_json;

/// Malformed or inconsistent file contents.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline json field_json(const Field& f) { return json{{"h", f.h()}, {"modulus", f.modulus()}}; }

inline const Field& field_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("h") || !j.contains("modulus")) throw FormatError("field: expected {h, modulus}");
    int h = j.at("h").get<int>();
    if (h < 1 || h > 5) throw FormatError("field: h must lie in 1..5");
    const Field& f = Field::standard(h);
    if (j.at("modulus").get<unsigned>() != f.modulus())
        throw FormatError("field: modulus " + std::to_string(j.at("modulus").get<unsigned>()) +
                          " is not the standard one for h=" + std::to_string(h));
    return f;
}

template <std::size_t N>
json point_json(const Vec<N>& v)
{
    json a = json::array();
    for (auto x : v) a.push_back(to_hex(x));
    return a;
}

template <std::size_t N>
Vec<N> point_from_json(const json& j, const Field& f)
{
    if (!j.is_array() || j.size() != N) throw FormatError("point: expected " + std::to_string(N) + " hex strings");
    Vec<N> v{};
    for (std::size_t i = 0; i < N; ++i) {
        try {
            v[i] = from_hex(j[i].get<std::string>(), f);
        } catch (const std::exception& e) {
            throw FormatError(std::string("point: ") + e.what());
        }
    }
    return v;
}

template <std::size_t N>
json subspace_json(const Subspace<N>& s)
{
    json a = json::array();
    for (const auto& v : s.basis()) a.push_back(point_json(v));
    return a;
}

// --------------------------------------------------------------- hyperovals

/// How a point set was produced: a family tag plus its parameters.
struct Provenance {
    std::string family;  // lambda, eq1, ovoid, q2, file
    json params = json::object();
};

inline json hyperoval_json(const KleinModel& m, const PointSet& h, const Provenance& p)
{
    json j;
    j["field"] = field_json(m.field());
    j["construction"] = json{{"family", p.family}, {"params", p.params}};
    j["size"] = h.size();
    auto idx = h.indices();
    j["indices"] = idx;
    json pts = json::array();
    for (auto i : idx) pts.push_back(point_json(m.point(i)));
    j["points"] = std::move(pts);
    return j;
}

struct HyperovalFile {
    const Field* field = nullptr;
    Provenance provenance;
    IndexList indices;
    std::vector<Vec<6>> points;
};

/// Parses a hyperoval file without building a model.
inline HyperovalFile hyperoval_file_from_json(const json& j)
{
    HyperovalFile hf;
    try {
        hf.field = &field_from_json(j.at("field"));
        const auto& c = j.at("construction");
        hf.provenance.family = c.at("family").get<std::string>();
        hf.provenance.params = c.value("params", json::object());
        hf.indices = j.at("indices").get<IndexList>();
        for (const auto& p : j.at("points")) hf.points.push_back(point_from_json<6>(p, *hf.field));
    } catch (const json::exception& e) {
        throw FormatError(std::string("hyperoval file: ") + e.what());
    }
    if (hf.indices.size() != hf.points.size()) throw FormatError("hyperoval file: indices and points differ in length");
    return hf;
}

/// The point set of a parsed file inside m; indices must match coordinates.
inline PointSet hyperoval_points(const KleinModel& m, const HyperovalFile& hf)
{
    if (hf.field != &m.field()) throw FormatError("hyperoval file: field does not match the model");
    PointSet h(m.num_points());
    for (std::size_t k = 0; k < hf.indices.size(); ++k) {
        auto i = m.index_of(hf.points[k]);
        if (!i) throw FormatError("hyperoval file: point " + std::to_string(k) + " is not on Q+(5,q)");
        if (*i != hf.indices[k])
            throw FormatError("hyperoval file: index " + std::to_string(hf.indices[k]) + " does not match its point");
        h.insert(*i);
    }
    return h;
}

// ------------------------------------------------------------------ ovoids

inline json ovoid_json(const EllipticSolid& s, const Ovoid& o)
{
    json j;
    j["field"] = field_json(s.field());
    j["kind"] = to_string(o.kind);
    if (o.kind == OvoidKind::classical)
        j["b"] = point_json(o.b);
    else if (o.kind == OvoidKind::tits)
        j["b"] = "tits";
    else
        j["b"] = nullptr;
    j["frame"] = json::array();
    for (const auto& v : s.frame()) j["frame"].push_back(point_json(v));
    j["base_intersection"] = o.base_intersection;
    j["indices"] = o.points;
    json pts = json::array();
    for (auto i : o.points) pts.push_back(point_json(s.point(i)));
    j["points"] = std::move(pts);
    return j;
}

inline Ovoid ovoid_from_json(const EllipticSolid& s, const json& j)
{
    try {
        if (&field_from_json(j.at("field")) != &s.field()) throw FormatError("ovoid file: field does not match");
        std::string kind = j.at("kind").get<std::string>();
        IndexList idx;
        for (const auto& p : j.at("points")) idx.push_back(s.local_index(point_from_json<4>(p, s.field())));
        OvoidKind k = kind == "classical" ? OvoidKind::classical
                      : kind == "tits"    ? OvoidKind::tits
                      : kind == "base"    ? OvoidKind::base
                                          : OvoidKind::other;
        Ovoid o = make_ovoid(s, k, std::move(idx));
        if (k == OvoidKind::classical) o.b = point_from_json<4>(j.at("b"), s.field());
        return o;
    } catch (const json::exception& e) {
        throw FormatError(std::string("ovoid file: ") + e.what());
    }
}

// ----------------------------------------------------------------- reports

inline json check_json(const Check& c)
{
    json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (!c.counts.empty()) {
        json counts = json::object();
        for (const auto& [k, v] : c.counts) counts[k] = v;
        j["counts"] = std::move(counts);
    }
    if (!c.witness.empty()) j["witness"] = c.witness;
    return j;
}

/// Timing is left out so reports stay reproducible.
inline json report_json(const VerificationReport& r)
{
    json j;
    j["subject"] = r.subject;
    j["passed"] = r.passed();
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(check_json(c));
    j["checks"] = std::move(checks);
    return j;
}

// ------------------------------------------------------------------- files

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError("'" + path + "': " + e.what());
    }
}

inline void write_json_file(const std::string& path, const json& j)
{
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
    if (!out) throw std::ios_base::failure("write failed for '" + path + "'");
}

}  // namespace hyperoval

#endif  // HYPEROVAL_IO_HPP
