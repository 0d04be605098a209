#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linform.hpp"

namespace splinedim {

struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    bool operator==(const Edge&) const = default;
};

/// A face as a closed walk of vertices; bounded faces are counterclockwise.
struct Face {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> half_edges;
    Rational twice_area;
};

struct FaceSet {
    std::vector<Face> faces;
    std::size_t outer = 0;
};

namespace detail {

/// Strict counterclockwise angular order of direction vectors starting at
/// angle 0 (positive x axis).
inline bool angle_less(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
    auto upper = [](const Rational& x, const Rational& y) { return y > 0 || (y == 0 && x > 0); };
    bool ua = upper(ax, ay), ub = upper(bx, by);
    if (ua != ub) return ua;
    return ax * by - ay * bx > 0;
}

inline bool on_open_segment(const Point& a, const Point& b, const Point& p) {
    if (orient(a, b, p) != 0) return false;
    Rational dot = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
    Rational len = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
    return dot > 0 && dot < len;
}

inline bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = sgn(orient(a, b, c)), o2 = sgn(orient(a, b, d));
    int o3 = sgn(orient(c, d, a)), o4 = sgn(orient(c, d, b));
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    auto within = [](const Point& p, const Point& q, const Point& r) {
        return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
               r.y <= std::max(p.y, q.y);
    };
    if (o1 == 0 && within(a, b, c)) return true;
    if (o2 == 0 && within(a, b, d)) return true;
    if (o3 == 0 && within(c, d, a)) return true;
    if (o4 == 0 && within(c, d, b)) return true;
    return false;
}

} // namespace detail

/// Validated planar straight-line partition of a simply connected polygonal
/// domain. Immutable after construction.
class Partition {
public:
    /// Validates the input graph, splits edges at listed vertices lying in
    /// their interior, and derives faces and boundary flags.
    static Partition build(std::vector<Point> vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                           std::optional<std::string> name = std::nullopt) {
        Partition p;
        p.name_ = std::move(name);
        p.vertices_ = std::move(vertices);
        p.init_edges(edges);
        p.check_crossings();
        p.check_connected();
        p.build_rotation();
        p.faces_ = p.trace_faces();
        p.classify();
        return p;
    }

    const std::optional<std::string>& name() const noexcept { return name_; }
    const std::vector<Point>& vertices() const noexcept { return vertices_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const FaceSet& face_set() const noexcept { return faces_; }

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Bounded faces in traversal order; these are the cells.
    std::vector<std::size_t> cells() const {
        std::vector<std::size_t> out;
        for (std::size_t f = 0; f < faces_.faces.size(); ++f)
            if (f != faces_.outer) out.push_back(f);
        return out;
    }

    bool is_boundary_vertex(std::size_t v) const { return boundary_vertex_.at(v); }
    bool is_boundary_edge(std::size_t e) const { return boundary_edge_.at(e); }
    bool is_interior_vertex(std::size_t v) const { return !boundary_vertex_.at(v); }
    bool is_interior_edge(std::size_t e) const { return !boundary_edge_.at(e); }

    std::vector<std::size_t> interior_vertices() const {
        std::vector<std::size_t> out;
        for (std::size_t v = 0; v < vertices_.size(); ++v)
            if (!boundary_vertex_[v]) out.push_back(v);
        return out;
    }
    std::vector<std::size_t> interior_edges() const {
        std::vector<std::size_t> out;
        for (std::size_t e = 0; e < edges_.size(); ++e)
            if (!boundary_edge_[e]) out.push_back(e);
        return out;
    }

    /// Faces on the left of the two half-edges of e: (left of u->v, left of v->u).
    std::pair<std::size_t, std::size_t> adjacent_faces(std::size_t e) const {
        return {face_of_half_edge_.at(2 * e), face_of_half_edge_.at(2 * e + 1)};
    }

    /// Edges incident to v in counterclockwise angular order.
    std::vector<std::size_t> incident_edges(std::size_t v) const {
        std::vector<std::size_t> out;
        for (auto h : rotation_.at(v)) out.push_back(h / 2);
        return out;
    }

    std::size_t other_end(std::size_t e, std::size_t v) const {
        const Edge& ed = edges_.at(e);
        return ed.u == v ? ed.v : ed.u;
    }

    LinForm edge_line(std::size_t e) const {
        return LinForm::through(vertices_[edges_[e].u], vertices_[edges_[e].v]);
    }

private:
    Partition() = default;

    void init_edges(const std::vector<std::pair<std::size_t, std::size_t>>& input) {
        const std::size_t n = vertices_.size();
        {
            std::vector<std::size_t> order(n);
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](auto i, auto j) {
                if (vertices_[i] == vertices_[j]) return i < j;
                return point_less(vertices_[i], vertices_[j]);
            });
            for (std::size_t k = 1; k < n; ++k)
                if (vertices_[order[k - 1]] == vertices_[order[k]])
                    throw GeometryError("coincident vertices " + std::to_string(order[k - 1]) + " and " +
                                            std::to_string(order[k]),
                                        {order[k - 1], order[k]});
        }
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (std::size_t i = 0; i < input.size(); ++i) {
            auto [a, b] = input[i];
            if (a >= n || b >= n)
                throw GeometryError("edge " + std::to_string(i) + " references a missing vertex", {i});
            if (a == b) throw GeometryError("edge " + std::to_string(i) + " has zero length", {i});
            const Point& pa = vertices_[a];
            const Point& pb = vertices_[b];
            // Listed vertices strictly inside the segment, ordered from a to b.
            std::vector<std::pair<Rational, std::size_t>> inner;
            for (std::size_t v = 0; v < n; ++v) {
                if (v == a || v == b) continue;
                if (detail::on_open_segment(pa, pb, vertices_[v])) {
                    Rational t = (vertices_[v].x - pa.x) * (pb.x - pa.x) + (vertices_[v].y - pa.y) * (pb.y - pa.y);
                    inner.emplace_back(t, v);
                }
            }
            std::sort(inner.begin(), inner.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
            std::size_t prev = a;
            auto emit = [&](std::size_t x, std::size_t y) {
                auto key = std::minmax(x, y);
                if (seen.insert(key).second) {
                    edges_.push_back({key.first, key.second});
                    origin_.push_back(i);
                }
            };
            for (const auto& [t, v] : inner) {
                emit(prev, v);
                prev = v;
            }
            emit(prev, b);
        }
    }

    void check_crossings() const {
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            for (std::size_t j = i + 1; j < edges_.size(); ++j) {
                const Edge& e = edges_[i];
                const Edge& f = edges_[j];
                if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
                if (detail::segments_intersect(vertices_[e.u], vertices_[e.v], vertices_[f.u], vertices_[f.v])) {
                    std::size_t a = origin_[i], b = origin_[j];
                    throw GeometryError("edges " + std::to_string(a) + " and " + std::to_string(b) +
                                            " cross away from a listed vertex",
                                        {a, b});
                }
            }
        }
    }

    void check_connected() const {
        const std::size_t n = vertices_.size();
        if (n == 0) throw GeometryError("partition has no vertices");
        std::vector<std::vector<std::size_t>> adj(n);
        for (const auto& e : edges_) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        std::vector<bool> seen(n, false);
        std::queue<std::size_t> q;
        q.push(0);
        seen[0] = true;
        while (!q.empty()) {
            auto v = q.front();
            q.pop();
            for (auto w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
        }
        for (std::size_t v = 0; v < n; ++v)
            if (!seen[v]) throw GeometryError("edge graph is disconnected at vertex " + std::to_string(v), {v});
    }

    void build_rotation() {
        rotation_.assign(vertices_.size(), {});
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            rotation_[edges_[e].u].push_back(2 * e);
            rotation_[edges_[e].v].push_back(2 * e + 1);
        }
        for (std::size_t v = 0; v < vertices_.size(); ++v) {
            auto& hs = rotation_[v];
            std::sort(hs.begin(), hs.end(), [&](std::size_t h1, std::size_t h2) {
                const Point& o = vertices_[v];
                const Point& p1 = vertices_[head(h1)];
                const Point& p2 = vertices_[head(h2)];
                return detail::angle_less(p1.x - o.x, p1.y - o.y, p2.x - o.x, p2.y - o.y);
            });
        }
    }

    std::size_t tail(std::size_t h) const { return h % 2 == 0 ? edges_[h / 2].u : edges_[h / 2].v; }
    std::size_t head(std::size_t h) const { return h % 2 == 0 ? edges_[h / 2].v : edges_[h / 2].u; }

    /// Next half-edge around the face on the left of h.
    std::size_t next(std::size_t h) const {
        std::size_t v = head(h);
        std::size_t twin = h ^ 1u;
        const auto& hs = rotation_[v];
        auto it = std::find(hs.begin(), hs.end(), twin);
        std::size_t pos = static_cast<std::size_t>(it - hs.begin());
        return hs[(pos + hs.size() - 1) % hs.size()];
    }

    FaceSet trace_faces() {
        FaceSet fs;
        face_of_half_edge_.assign(2 * edges_.size(), SIZE_MAX);
        for (std::size_t h0 = 0; h0 < 2 * edges_.size(); ++h0) {
            if (face_of_half_edge_[h0] != SIZE_MAX) continue;
            Face f;
            std::size_t id = fs.faces.size();
            std::size_t h = h0;
            do {
                face_of_half_edge_[h] = id;
                f.half_edges.push_back(h);
                f.vertices.push_back(tail(h));
                h = next(h);
            } while (h != h0);
            for (std::size_t i = 0; i < f.vertices.size(); ++i) {
                const Point& a = vertices_[f.vertices[i]];
                const Point& b = vertices_[f.vertices[(i + 1) % f.vertices.size()]];
                f.twice_area += a.x * b.y - a.y * b.x;
            }
            fs.faces.push_back(std::move(f));
        }
        std::vector<std::size_t> unbounded;
        for (std::size_t i = 0; i < fs.faces.size(); ++i)
            if (fs.faces[i].twice_area <= 0) unbounded.push_back(i);
        if (unbounded.size() != 1)
            throw GeometryError("expected exactly one unbounded face, found " + std::to_string(unbounded.size()));
        fs.outer = unbounded.front();
        if (fs.faces.size() < 2) throw GeometryError("partition has no bounded face");
        for (std::size_t i = 0; i < fs.faces.size(); ++i) {
            std::vector<std::size_t> vs = fs.faces[i].vertices;
            std::sort(vs.begin(), vs.end());
            auto dup = std::adjacent_find(vs.begin(), vs.end());
            if (dup != vs.end()) {
                if (i == fs.outer)
                    throw GeometryError("domain boundary is not a simple cycle (pinched or dangling at vertex " +
                                            std::to_string(*dup) + ")",
                                        {*dup});
                throw GeometryError("cell boundary revisits vertex " + std::to_string(*dup) +
                                        " (dangling edge or hole)",
                                    {*dup});
            }
        }
        for (std::size_t e = 0; e < edges_.size(); ++e)
            if (face_of_half_edge_[2 * e] == face_of_half_edge_[2 * e + 1])
                throw GeometryError("edge " + std::to_string(e) + " has the same face on both sides", {e});
        return fs;
    }

    void classify() {
        boundary_vertex_.assign(vertices_.size(), false);
        boundary_edge_.assign(edges_.size(), false);
        for (auto h : faces_.faces[faces_.outer].half_edges) {
            boundary_edge_[h / 2] = true;
            boundary_vertex_[tail(h)] = true;
        }
    }

    std::optional<std::string> name_;
    std::vector<Point> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> origin_;
    std::vector<std::vector<std::size_t>> rotation_;
    std::vector<std::size_t> face_of_half_edge_;
    FaceSet faces_;
    std::vector<bool> boundary_vertex_;
    std::vector<bool> boundary_edge_;
};

/// Faces of a validated partition (the outer face included).
inline const FaceSet& extract_faces(const Partition& p) { return p.face_set(); }

} // namespace splinedim
