#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "assembly.hpp"

namespace splinedim {

inline constexpr std::string_view kReportFormat = "splinedim-report/1";

inline nlohmann::ordered_json report_to_json(const DimensionReport& r) {
    nlohmann::ordered_json j;
    j["format"] = kReportFormat;
    j["spec"] = {{"d", r.spec.d}, {"mu", r.spec.mu}};
    j["stats"] = {{"V", r.stats.V}, {"E", r.stats.E}, {"c", r.stats.c}, {"r", r.stats.r}, {"t", r.stats.t}};
    auto verts = nlohmann::ordered_json::array();
    for (const auto& v : r.vertices) verts.push_back({{"id", v.id}, {"N", v.N}, {"k", v.k}, {"sigma", v.sigma}});
    j["vertices"] = std::move(verts);
    j["matrix"] = {{"rows", r.matrix_rows}, {"cols", r.matrix_cols}, {"rank", r.rank}};
    j["dimension"] = r.dimension;
    j["lowerBound"] = r.lower_bound;
    j["attainsBound"] = r.attains_bound;
    j["method"] = to_string(r.method);
    j["topologyIdentity"] = r.topology_identity;
    return j;
}

inline std::string report_to_text(const DimensionReport& r) {
    std::ostringstream os;
    os << "S_" << r.spec.d << "^" << r.spec.mu << "  method=" << to_string(r.method) << "\n";
    os << "  V=" << r.stats.V << " E=" << r.stats.E << " c=" << r.stats.c << " r=" << r.stats.r << " t=" << r.stats.t
       << "  (E - sum N = c - t: " << (r.topology_identity ? "yes" : "NO") << ")\n";
    for (const auto& v : r.vertices)
        os << "  vertex " << v.id << ": N=" << v.N << " k=" << v.k << " sigma=" << v.sigma << "\n";
    os << "  conformality matrix " << r.matrix_rows << "x" << r.matrix_cols << ", rank " << r.rank << "\n";
    os << "  dimension   " << r.dimension << "\n";
    os << "  lower bound " << r.lower_bound << (r.attains_bound ? " (attained)" : "") << "\n";
    return os.str();
}

inline nlohmann::ordered_json matrix_to_json(const RatMatrix& m) {
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Dimensions printed in the literature for the named gallery partitions.
/// These are comparison values only; they never feed a computation.
inline std::optional<long> reference_value(std::string_view name, const SplineSpec& s) {
    if (name == "morgan_scott_symmetric" && s.d == 2 && s.mu == 1) return 7;
    if (name == "morgan_scott_generic" && s.d == 2 && s.mu == 1) return 6;
    if (name == "yuan_stillman" && s.d == 5 && s.mu == 2) return 52;
    if (name == "mixed_polygonal" && s.d == 5 && s.mu == 3) return 39;
    if (name == "disjoint_two_ledges" && s.mu == 1 && s.d >= 2) return 7L * s.d * s.d - 15L * s.d + 11;
    return std::nullopt;
}

} // namespace splinedim
