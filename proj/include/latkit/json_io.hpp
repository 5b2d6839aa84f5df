#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "latkit/arrangement.hpp"
#include "latkit/congruence.hpp"
#include "latkit/errors.hpp"
#include "latkit/lattice.hpp"
#include "latkit/poset.hpp"
#include "latkit/simplicial.hpp"

namespace latkit {

using Json = nlohmann::ordered_json;

/// Canonical poset serialization: elements sorted, covers sorted
/// lexicographically by name pair.
inline Json poset_to_json(const FinitePoset& p) {
    std::vector<std::string> elements = p.names();
    std::sort(elements.begin(), elements.end());
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& [lo, hi] : p.cover_pairs()) covers.emplace_back(p.name(lo), p.name(hi));
    std::sort(covers.begin(), covers.end());
    Json j;
    j["elements"] = elements;
    Json cov = Json::array();
    for (const auto& [lo, hi] : covers) cov.push_back(Json::array({lo, hi}));
    j["covers"] = std::move(cov);
    return j;
}

inline FinitePoset poset_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
        throw InvalidInput("poset json needs elements and covers");
    std::vector<std::string> names = j.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2) throw InvalidInput("cover entries are name pairs");
        covers.emplace_back(c.at(0).get<std::string>(), c.at(1).get<std::string>());
    }
    return FinitePoset::from_covers(names, covers);
}

inline Json complex_to_json(const SimplicialComplex& c) {
    Json j;
    std::vector<std::string> vertices = c.vertex_names();
    std::sort(vertices.begin(), vertices.end());
    j["vertices"] = vertices;
    std::vector<std::vector<std::string>> facets;
    for (auto f : c.facets()) {
        auto names = c.names_of(f);
        std::sort(names.begin(), names.end());
        facets.push_back(std::move(names));
    }
    std::sort(facets.begin(), facets.end());
    j["facets"] = facets;
    return j;
}

inline SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
        throw InvalidInput("complex json needs vertices and facets");
    auto vertices = j.at("vertices").get<std::vector<std::string>>();
    auto facets = j.at("facets").get<std::vector<std::vector<std::string>>>();
    return SimplicialComplex::from_facets(std::move(vertices), facets);
}

inline Json congruence_to_json(const Lattice& lat, const Congruence& c) {
    Json blocks = Json::array();
    for (const auto& b : c.blocks()) {
        Json blk = Json::array();
        for (int e : b) blk.push_back(lat.name(e));
        blocks.push_back(std::move(blk));
    }
    Json j;
    j["blocks"] = std::move(blocks);
    return j;
}

inline Congruence congruence_from_json(const Lattice& lat, const Json& j) {
    if (!j.is_object() || !j.contains("blocks")) throw InvalidInput("congruence json needs blocks");
    std::vector<std::vector<int>> blocks;
    for (const auto& blk : j.at("blocks")) {
        std::vector<int> b;
        for (const auto& name : blk) b.push_back(lat.poset().index_of(name.get<std::string>()));
        blocks.push_back(std::move(b));
    }
    return Congruence::from_blocks(lat, std::move(blocks));
}

inline Json labelling_to_json(const FinitePoset& p, const EdgeLabelling& lab) {
    std::vector<std::pair<std::pair<std::string, std::string>, std::string>> rows;
    for (const auto& [edge, s] : lab.labels)
        rows.push_back({{p.name(edge.first), p.name(edge.second)}, s});
    std::sort(rows.begin(), rows.end());
    Json labels = Json::array();
    for (const auto& [edge, s] : rows)
        labels.push_back(Json::array({Json::array({edge.first, edge.second}), s}));
    Json j;
    j["labels"] = std::move(labels);
    return j;
}

inline EdgeLabelling labelling_from_json(const FinitePoset& p, const Json& j) {
    if (!j.is_object() || !j.contains("labels")) throw InvalidInput("labelling json needs labels");
    EdgeLabelling lab;
    for (const auto& row : j.at("labels")) {
        if (!row.is_array() || row.size() != 2) throw InvalidInput("label rows are [edge, label]");
        const auto& edge = row.at(0);
        int lo = p.index_of(edge.at(0).get<std::string>());
        int hi = p.index_of(edge.at(1).get<std::string>());
        lab.labels[{lo, hi}] = row.at(1).get<std::string>();
    }
    return lab;
}

inline Rational rational_from_string(const std::string& s) {
    auto parse_int = [](const std::string& t) -> boost::multiprecision::cpp_int {
        if (t.empty()) throw InvalidInput("empty rational component");
        std::size_t k = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (k == t.size()) throw InvalidInput("bad rational: " + t);
        for (; k < t.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(t[k])))
                throw InvalidInput("bad rational: " + t);
        return boost::multiprecision::cpp_int(t);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s));
    auto num = parse_int(s.substr(0, slash));
    auto den = parse_int(s.substr(slash + 1));
    if (den == 0) throw InvalidInput("zero denominator");
    return Rational(num, den);
}

inline Json arrangement_to_json(const Arrangement& a) {
    Json j;
    j["dim"] = a.dim();
    Json normals = Json::array();
    for (int i = 0; i < a.size(); ++i) {
        Json row = Json::array();
        for (const auto& v : a.normal(i)) row.push_back(v.str());
        normals.push_back(std::move(row));
    }
    j["normals"] = std::move(normals);
    return j;
}

inline Arrangement arrangement_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("normals"))
        throw InvalidInput("arrangement json needs dim and normals");
    int dim = j.at("dim").get<int>();
    std::vector<RationalVector> normals;
    for (const auto& row : j.at("normals")) {
        RationalVector v;
        for (const auto& entry : row) {
            if (entry.is_number_integer())
                v.push_back(Rational(entry.get<long long>()));
            else
                v.push_back(rational_from_string(entry.get<std::string>()));
        }
        normals.push_back(std::move(v));
    }
    return Arrangement::create(dim, std::move(normals));
}

} // namespace latkit
