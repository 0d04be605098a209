#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <string_view>
#include <vector>

#include "partition.hpp"

namespace splinedim {

enum class LEdgeClass { CrossCut, Ray, Truncated };

inline std::string_view to_string(LEdgeClass c) {
    switch (c) {
    case LEdgeClass::CrossCut: return "cross-cut";
    case LEdgeClass::Ray: return "ray";
    case LEdgeClass::Truncated: return "truncated";
    }
    return "?";
}

/// Maximal run of collinear interior edges joined at interior vertices.
struct LEdge {
    LinForm line;
    std::vector<std::size_t> chain; // vertices in order along the line
    std::vector<std::size_t> edges; // edges[i] joins chain[i] and chain[i + 1]
    LEdgeClass cls = LEdgeClass::CrossCut;

    std::size_t segment_count() const noexcept { return edges.size(); }
    bool contains(std::size_t v) const { return std::find(chain.begin(), chain.end(), v) != chain.end(); }
};

/// Interior vertices of a chain, i.e. all chain vertices except boundary ones.
inline std::size_t interior_chain_vertices(const Partition& p, const LEdge& l) {
    return static_cast<std::size_t>(
        std::count_if(l.chain.begin(), l.chain.end(), [&](auto v) { return p.is_interior_vertex(v); }));
}

namespace detail {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace detail

/// Every interior edge lands in exactly one l-edge. Runs are cut at
/// boundary vertices, so only chain endpoints may lie on the boundary.
inline std::vector<LEdge> extract_l_edges(const Partition& p) {
    std::map<LinForm, std::vector<std::size_t>> by_line;
    for (auto e : p.interior_edges()) by_line[p.edge_line(e)].push_back(e);

    std::vector<LEdge> out;
    for (const auto& [line, es] : by_line) {
        detail::DisjointSets ds(es.size());
        std::map<std::size_t, std::size_t> first_at;
        for (std::size_t i = 0; i < es.size(); ++i) {
            for (auto v : {p.edges()[es[i]].u, p.edges()[es[i]].v}) {
                if (p.is_boundary_vertex(v)) continue;
                auto [it, fresh] = first_at.try_emplace(v, i);
                if (!fresh) ds.unite(i, it->second);
            }
        }
        std::map<std::size_t, std::vector<std::size_t>> runs;
        for (std::size_t i = 0; i < es.size(); ++i) runs[ds.find(i)].push_back(es[i]);

        // Parameter along the line direction (-beta, alpha).
        auto along = [&](std::size_t v) -> Rational {
            const Point& q = p.vertices()[v];
            return -line.beta() * q.x + line.alpha() * q.y;
        };
        for (auto& [root, run] : runs) {
            std::set<std::size_t> vs;
            for (auto e : run) {
                vs.insert(p.edges()[e].u);
                vs.insert(p.edges()[e].v);
            }
            LEdge l{line, {vs.begin(), vs.end()}, {}, LEdgeClass::CrossCut};
            std::sort(l.chain.begin(), l.chain.end(), [&](auto a, auto b) { return along(a) < along(b); });
            for (std::size_t i = 0; i + 1 < l.chain.size(); ++i) {
                for (auto e : run) {
                    const Edge& ed = p.edges()[e];
                    if ((ed.u == l.chain[i] && ed.v == l.chain[i + 1]) ||
                        (ed.v == l.chain[i] && ed.u == l.chain[i + 1])) {
                        l.edges.push_back(e);
                        break;
                    }
                }
            }
            bool b0 = p.is_boundary_vertex(l.chain.front());
            bool b1 = p.is_boundary_vertex(l.chain.back());
            l.cls = (b0 && b1) ? LEdgeClass::CrossCut : (b0 || b1) ? LEdgeClass::Ray : LEdgeClass::Truncated;
            out.push_back(std::move(l));
        }
    }
    std::sort(out.begin(), out.end(), [](const LEdge& a, const LEdge& b) {
        auto key = [](const LEdge& l) {
            return std::minmax(l.chain.front(), l.chain.back());
        };
        return key(a) < key(b);
    });
    return out;
}

/// The set of truncated l-edges.
struct TEComponent {
    std::vector<LEdge> ledges;
    std::vector<std::size_t> vertex_set; // sorted
    bool disjoint = true;
};

inline TEComponent te_component(const std::vector<LEdge>& ledges) {
    TEComponent te;
    std::map<std::size_t, int> uses;
    for (const auto& l : ledges) {
        if (l.cls != LEdgeClass::Truncated) continue;
        te.ledges.push_back(l);
        for (auto v : l.chain) ++uses[v];
    }
    for (const auto& [v, n] : uses) {
        te.vertex_set.push_back(v);
        if (n > 1) te.disjoint = false;
    }
    return te;
}

inline TEComponent te_component(const Partition& p) { return te_component(extract_l_edges(p)); }

/// Distinct line directions among the edges at v.
inline std::vector<DirectionKey> vertex_directions(const Partition& p, std::size_t v) {
    std::set<DirectionKey> keys;
    for (auto e : p.incident_edges(v)) keys.insert(p.edge_line(e).direction());
    return {keys.begin(), keys.end()};
}

struct PartitionStats {
    std::size_t V = 0; // interior vertices
    std::size_t E = 0; // interior edges
    std::size_t c = 0; // cross-cuts
    std::size_t r = 0; // rays
    std::size_t t = 0; // truncated l-edges
    std::map<std::size_t, std::size_t> N; // interior vertex -> distinct directions

    std::size_t sum_N() const {
        std::size_t s = 0;
        for (const auto& [v, n] : N) s += n;
        return s;
    }
    /// E - sum N == c - t
    bool topology_identity_holds() const {
        return static_cast<long>(E) - static_cast<long>(sum_N()) == static_cast<long>(c) - static_cast<long>(t);
    }
};

inline PartitionStats compute_stats(const Partition& p, const std::vector<LEdge>& ledges) {
    PartitionStats s;
    for (auto v : p.interior_vertices()) s.N[v] = vertex_directions(p, v).size();
    s.V = s.N.size();
    s.E = p.interior_edges().size();
    for (const auto& l : ledges) {
        switch (l.cls) {
        case LEdgeClass::CrossCut: ++s.c; break;
        case LEdgeClass::Ray: ++s.r; break;
        case LEdgeClass::Truncated: ++s.t; break;
        }
    }
    return s;
}

inline PartitionStats compute_stats(const Partition& p) { return compute_stats(p, extract_l_edges(p)); }

} // namespace splinedim
