#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <splinedim/splinedim.hpp>

namespace sdtest {

using namespace splinedim;

/// Small deterministic generator for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : eng_(seed) {}
    long integer(long lo, long hi) { return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    Rational rational(long span = 9, long max_den = 5) { return rat(integer(-span, span), integer(1, max_den)); }
    bool coin() { return eng_() & 1u; }

    RatMatrix matrix(std::size_t r, std::size_t c, int zero_percent = 30) {
        RatMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (integer(0, 99) >= zero_percent) m(i, j) = rational();
        return m;
    }

    /// Random matrix of prescribed rank (product of r x k and k x c factors).
    RatMatrix matrix_of_rank(std::size_t r, std::size_t c, std::size_t k) {
        RatMatrix a = matrix(r, k, 0), b = matrix(k, c, 0), out(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                for (std::size_t t = 0; t < k; ++t) out(i, j) += a(i, t) * b(t, j);
        return out;
    }

    Poly2 poly(int degree) {
        Poly2 p;
        for (const auto& m : monomials_upto(degree))
            if (coin()) p.add_term(m, rational());
        return p;
    }

    AffineMap invertible_map() {
        for (;;) {
            AffineMap m{rational(), rational(), rational(), rational(), rational(), rational()};
            if (m.det() != 0) return m;
        }
    }

private:
    std::mt19937_64 eng_;
};

/// Textbook Gauss-Jordan rank over the rationals; independent of mat_rank.
inline std::size_t naive_rank(RatMatrix m) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || m(i, c) == 0) continue;
            Rational f = m(i, c) / m(rank, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

/// The same partition with every vertex mapped through `map`.
inline Partition transformed(const Partition& p, const AffineMap& map) {
    std::vector<Point> vs;
    for (const auto& v : p.vertices()) {
        auto [x, y] = map.apply(v.x, v.y);
        vs.push_back({x, y});
    }
    std::vector<std::pair<std::size_t, std::size_t>> es;
    for (const auto& e : p.edges()) es.emplace_back(e.u, e.v);
    return Partition::build(std::move(vs), es, p.name());
}

/// The same partition with edge `e` split at its midpoint.
inline Partition split_edge(const Partition& p, std::size_t e) {
    std::vector<Point> vs = p.vertices();
    const Edge& ed = p.edges().at(e);
    vs.push_back({(vs[ed.u].x + vs[ed.v].x) / 2, (vs[ed.u].y + vs[ed.v].y) / 2});
    std::vector<std::pair<std::size_t, std::size_t>> es;
    for (std::size_t i = 0; i < p.edge_count(); ++i) {
        if (i == e) continue;
        es.emplace_back(p.edges()[i].u, p.edges()[i].v);
    }
    es.emplace_back(ed.u, vs.size() - 1);
    es.emplace_back(vs.size() - 1, ed.v);
    return Partition::build(std::move(vs), es, p.name());
}

inline std::vector<Partition> gallery_cases() {
    return {morgan_scott_symmetric(), morgan_scott_generic(), yuan_stillman(), mixed_polygonal(),
            disjoint_two_ledges()};
}

} // namespace sdtest
