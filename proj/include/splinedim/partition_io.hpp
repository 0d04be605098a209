#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "partition.hpp"

namespace splinedim {

inline constexpr std::string_view kPartitionFormat = "splinedim-partition/1";

inline nlohmann::ordered_json partition_to_json(const Partition& p) {
    nlohmann::ordered_json j;
    j["format"] = kPartitionFormat;
    if (p.name()) j["name"] = *p.name();
    auto verts = nlohmann::ordered_json::array();
    for (const auto& v : p.vertices()) verts.push_back({to_string(v.x), to_string(v.y)});
    j["vertices"] = std::move(verts);
    auto edges = nlohmann::ordered_json::array();
    for (const auto& e : p.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    return j;
}

/// Compact single-line rendering; stable byte-for-byte.
inline std::string serialize_partition(const Partition& p) { return partition_to_json(p).dump() + "\n"; }

inline Partition load_partition(std::string_view document) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("partition document must be a JSON object");
    if (!j.contains("format") || j["format"] != kPartitionFormat)
        throw ParseError("missing or unsupported format id (expected \"" + std::string(kPartitionFormat) + "\")");
    std::optional<std::string> name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ParseError("\"name\" must be a string");
        name = j["name"].get<std::string>();
    }
    if (!j.contains("vertices") || !j["vertices"].is_array()) throw ParseError("\"vertices\" must be an array");
    if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError("\"edges\" must be an array");

    std::vector<Point> verts;
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
            throw ParseError("each vertex must be a pair of rational strings");
        verts.push_back({parse_rational(v[0].get<std::string>()), parse_rational(v[1].get<std::string>())});
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
            throw ParseError("each edge must be a pair of non-negative vertex indices");
        edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return Partition::build(std::move(verts), edges, std::move(name));
}

inline Partition load_partition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open partition file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_partition(ss.str());
}

} // namespace splinedim
