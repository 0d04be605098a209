#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "assembly.hpp"
#include "partition.hpp"

namespace splinedim {

using Triangle = std::array<Point, 3>;

/// Morgan-Scott partition: outer triangle ABC, inner triangle DEF with D
/// joined to C and A, E to C and B, F to A and B. Vertex order A..F.
inline Partition morgan_scott(const Triangle& outer, const Triangle& inner, std::string name = "morgan_scott") {
    const auto& [A, B, C] = outer;
    Rational o = orient(A, B, C);
    if (o == 0) throw GeometryError("outer triangle is degenerate");
    for (std::size_t i = 0; i < 3; ++i) {
        const Point& q = inner[i];
        if (sgn(orient(A, B, q)) != sgn(o) || sgn(orient(B, C, q)) != sgn(o) || sgn(orient(C, A, q)) != sgn(o))
            throw GeometryError("inner vertex " + std::to_string(3 + i) + " is not strictly inside ABC", {3 + i});
    }
    std::vector<Point> vs{A, B, C, inner[0], inner[1], inner[2]};
    enum { a, b, c, d, e, f };
    std::vector<std::pair<std::size_t, std::size_t>> es{{a, b}, {b, c}, {c, a}, {d, e}, {e, f}, {f, d},
                                                        {a, d}, {a, f}, {b, e}, {b, f}, {c, d}, {c, e}};
    Partition p = Partition::build(std::move(vs), es, std::move(name));
    if (p.cells().size() != 7) throw GeometryError("inner triangle does not produce the Morgan-Scott adjacency");
    for (std::size_t v = 0; v < 3; ++v)
        if (!p.is_boundary_vertex(v)) throw GeometryError("Morgan-Scott outer vertex is not on the boundary", {v});
    return p;
}

/// Inner vertices on the medians, halfway to the centroid: AE, BD, CF meet
/// at the centroid (5, 3).
inline Partition morgan_scott_symmetric() {
    return morgan_scott({Point{0, 0}, Point{12, 0}, Point{3, 9}},
                        {Point{rat(13, 4), rat(15, 4)}, Point{rat(25, 4), rat(15, 4)}, Point{rat(11, 2), rat(3, 2)}},
                        "morgan_scott_symmetric");
}

/// Symmetric instance with D moved by 1/100 in x.
inline Partition morgan_scott_generic() {
    return morgan_scott({Point{0, 0}, Point{12, 0}, Point{3, 9}},
                        {Point{rat(13, 4) + rat(1, 100), rat(15, 4)}, Point{rat(25, 4), rat(15, 4)},
                         Point{rat(11, 2), rat(3, 2)}},
                        "morgan_scott_generic");
}

/// Lines AE, BD, CF of a Morgan-Scott partition (vertex order A..F).
inline std::array<LinForm, 3> morgan_scott_cevians(const Partition& p) {
    const auto& v = p.vertices();
    return {LinForm::through(v[0], v[4]), LinForm::through(v[1], v[3]), LinForm::through(v[2], v[5])};
}

namespace detail {

/// Seeded generator with a platform-independent integer mapping.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}
    /// Uniform in [lo, hi].
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rational fraction(long lo, long hi, long den) { return rat(uniform(lo, hi), den); }

private:
    std::mt19937_64 eng_;
};

} // namespace detail

/// Random Morgan-Scott configuration. With `concurrent`, D, E, F lie on
/// the cevians through a random interior point Z (so AE, BD, CF meet at Z);
/// otherwise D is pushed off line BZ.
inline Partition random_morgan_scott(std::uint64_t seed, bool concurrent, int max_attempts = 200) {
    detail::SeededRng rng(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Point A{rng.uniform(-20, 0), rng.uniform(-20, 0)};
        Point B{rng.uniform(10, 30), rng.uniform(-20, 5)};
        Point C{rng.uniform(-10, 20), rng.uniform(15, 35)};
        if (orient(A, B, C) <= 0) continue;
        // Barycentric weights of Z, each at least 1/5.
        long wa = rng.uniform(2, 6), wb = rng.uniform(2, 6), wc = rng.uniform(2, 6);
        Rational sw = wa + wb + wc;
        Rational za = wa / sw, zb = wb / sw, zc = wc / sw;
        Point Z{za * A.x + zb * B.x + zc * C.x, za * A.y + zb * B.y + zc * C.y};
        auto push = [&](const Point& from, const Rational& wfrom) {
            // (1+s) Z - s from stays inside while s < w/(1-w); use a fraction of that.
            Rational smax = wfrom / (1 - wfrom);
            Rational s = smax * rng.fraction(10, 80, 100);
            return Point{(1 + s) * Z.x - s * from.x, (1 + s) * Z.y - s * from.y};
        };
        Point D = push(B, zb), E = push(A, za), F = push(C, zc);
        if (!concurrent) {
            Rational dx = rng.fraction(1, 40, 100) * (rng.uniform(0, 1) ? 1 : -1);
            Rational dy = rng.fraction(1, 40, 100) * (rng.uniform(0, 1) ? 1 : -1);
            D = Point{D.x + dx, D.y + dy};
        }
        try {
            Partition p = morgan_scott({A, B, C}, {D, E, F}, "morgan_scott_random");
            auto [l1, l2, l3] = morgan_scott_cevians(p);
            if (!concurrent && lines_concurrent(l1, l2, l3)) continue;
            return p;
        } catch (const GeometryError&) {
            continue;
        } catch (const DegenerateInput&) {
            continue;
        }
    }
    throw RetryExhausted("random_morgan_scott: no valid configuration after " + std::to_string(max_attempts) +
                         " attempts");
}

/// Yuan-Stillman partition. Vertex order A B C D E F O P Q.
inline Partition yuan_stillman() {
    std::vector<Point> vs{{-1, 4}, {3, 4}, {3, 0}, {3, -4}, {-1, -4}, {-1, 0}, {0, 0}, {1, 2}, {1, -2}};
    enum { A, B, C, D, E, F, O, P, Q };
    // Long diagonals are listed whole; they are split at O, P, Q on load.
    std::vector<std::pair<std::size_t, std::size_t>> es{{B, C}, {C, D}, {D, E}, {E, F}, {F, A}, {A, B}, {C, F},
                                                        {F, B}, {C, A}, {C, E}, {D, F}, {P, O}, {O, Q}};
    return Partition::build(std::move(vs), es, "yuan_stillman");
}

/// Mixed triangle/quadrilateral partition. Vertex order A..J.
inline Partition mixed_polygonal() {
    std::vector<Point> vs{{0, 0}, {0, 5}, {2, 5}, {6, 3}, {7, 0}, {4, 8}, {8, 6}, {3, 12}, {13, 10}, {10, 4}};
    enum { A, B, C, D, E, F, G, H, I, J };
    std::vector<std::pair<std::size_t, std::size_t>> es{{A, B}, {B, C}, {C, D}, {D, E}, {E, A}, {C, F},
                                                        {F, G}, {G, D}, {F, H}, {H, B}, {G, J}, {H, I},
                                                        {I, G}, {I, J}, {J, E}, {A, D}};
    return Partition::build(std::move(vs), es, "mixed_polygonal");
}

/// Two disjoint truncated l-edges A-C-B and D-E. Interior vertices first
/// (A B C D E), then the boundary.
inline Partition disjoint_two_ledges() {
    std::vector<Point> vs{{2, 2}, {5, 4}, {rat(7, 2), 3}, {9, 4}, {11, 4},
                          {0, 0}, {2, 0}, {12, 0}, {12, 6}, {9, 8}, {4, 6}, {1, 4}};
    enum { A, B, C, D, E, P0, P1, P2, P3, P4, P5, P6 };
    std::vector<std::pair<std::size_t, std::size_t>> es{
        {A, B}, {A, P0}, {A, P1}, {A, P6}, {P6, C}, {C, P1}, {P6, P0}, {C, P5}, {P6, P5}, {B, P5}, {B, P1}, {B, P2},
        {P0, P2}, {D, E}, {P5, D}, {P3, E}, {P3, P2}, {E, P2}, {D, P2}, {P5, P4}, {P4, P3}, {P4, D}, {P4, E}};
    return Partition::build(std::move(vs), es, "disjoint_two_ledges");
}

/// Default convex boundary for random_quasi_crosscut (counterclockwise).
inline std::vector<Point> default_crosscut_polygon() {
    return {{0, 0}, {10, 0}, {12, 7}, {5, 11}, {-2, 6}};
}

/// Convex polygon cut by `lines` random chords; every pairwise intersection
/// becomes an interior vertex, so each interior l-edge is a cross-cut.
inline Partition random_quasi_crosscut(std::uint64_t seed, int lines, std::vector<Point> polygon = {},
                                       bool allow_concurrent = false, int max_attempts = 500) {
    if (lines < 0) throw DomainError("random_quasi_crosscut: lines must be >= 0");
    if (polygon.empty()) polygon = default_crosscut_polygon();
    const std::size_t n = polygon.size();
    if (n < 3) throw GeometryError("boundary polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i)
        if (orient(polygon[i], polygon[(i + 1) % n], polygon[(i + 2) % n]) <= 0)
            throw GeometryError("boundary polygon must be strictly convex and counterclockwise", {i});

    detail::SeededRng rng(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        struct Chord {
            Point p, q;
        };
        std::vector<Chord> chords;
        std::vector<Point> ends;
        bool ok = true;
        for (int i = 0; i < lines && ok; ++i) {
            long e1 = rng.uniform(0, static_cast<long>(n) - 1);
            long e2 = rng.uniform(0, static_cast<long>(n) - 2);
            if (e2 >= e1) ++e2;
            auto at = [&](long e) {
                const Point& a = polygon[static_cast<std::size_t>(e)];
                const Point& b = polygon[(static_cast<std::size_t>(e) + 1) % n];
                Rational t = rng.fraction(1, 11, 12);
                return Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
            };
            Chord c{at(e1), at(e2)};
            for (const auto& q : ends)
                if (q == c.p || q == c.q) ok = false;
            ends.push_back(c.p);
            ends.push_back(c.q);
            chords.push_back(c);
        }
        if (!ok) continue;

        std::vector<Point> crossings;
        for (std::size_t i = 0; i < chords.size() && ok; ++i) {
            for (std::size_t j = i + 1; j < chords.size() && ok; ++j) {
                const auto& [a, b] = chords[i];
                const auto& [c, d] = chords[j];
                Rational den = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
                if (den == 0) continue;
                Rational t = ((c.x - a.x) * (d.y - c.y) - (c.y - a.y) * (d.x - c.x)) / den;
                Rational s = ((c.x - a.x) * (b.y - a.y) - (c.y - a.y) * (b.x - a.x)) / den;
                if (t <= 0 || t >= 1 || s <= 0 || s >= 1) continue;
                Point x{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
                bool seen = false;
                for (const auto& q : crossings)
                    if (q == x) seen = true;
                if (seen && !allow_concurrent) ok = false;
                if (!seen) crossings.push_back(x);
            }
        }
        if (!ok) continue;

        std::vector<Point> vs = polygon;
        vs.insert(vs.end(), ends.begin(), ends.end());
        vs.insert(vs.end(), crossings.begin(), crossings.end());
        std::vector<std::pair<std::size_t, std::size_t>> es;
        for (std::size_t i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
        for (std::size_t i = 0; i < chords.size(); ++i) es.emplace_back(n + 2 * i, n + 2 * i + 1);
        try {
            return Partition::build(std::move(vs), es,
                                    "random_quasi_crosscut(seed=" + std::to_string(seed) + ",lines=" +
                                        std::to_string(lines) + ")");
        } catch (const GeometryError&) {
            continue;
        }
    }
    throw RetryExhausted("random_quasi_crosscut: degeneracy avoidance failed after " + std::to_string(max_attempts) +
                         " attempts");
}

inline const std::vector<std::string>& gallery_names() {
    static const std::vector<std::string> names{"morgan_scott", "yuan_stillman", "mixed_polygonal",
                                                "disjoint_two_ledges", "random_quasi_crosscut"};
    return names;
}

struct GalleryOptions {
    std::string variant = "symmetric"; // morgan_scott only: symmetric | generic
    std::uint64_t seed = 1;            // random_quasi_crosscut only
    int lines = 3;                     // random_quasi_crosscut only
};

inline Partition gallery_emit(const std::string& name, const GalleryOptions& opt = {}) {
    if (name == "morgan_scott") {
        if (opt.variant == "symmetric") return morgan_scott_symmetric();
        if (opt.variant == "generic") return morgan_scott_generic();
        throw DomainError("unknown morgan_scott variant '" + opt.variant + "' (symmetric|generic)");
    }
    if (name == "yuan_stillman") return yuan_stillman();
    if (name == "mixed_polygonal") return mixed_polygonal();
    if (name == "disjoint_two_ledges") return disjoint_two_ledges();
    if (name == "random_quasi_crosscut") return random_quasi_crosscut(opt.seed, opt.lines);
    throw DomainError("unknown gallery partition '" + name + "'");
}

} // namespace splinedim
