#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "ledges.hpp"
#include "matrix.hpp"
#include "poly2.hpp"

namespace splinedim {

/// Degree d and smoothness order mu of S_d^mu.
struct SplineSpec {
    int d = 0;
    int mu = 0;

    void validate() const {
        if (d < 1 || mu < 0 || mu > d - 1)
            throw DomainError("need d >= 1 and 0 <= mu <= d - 1 (got d=" + std::to_string(d) +
                              ", mu=" + std::to_string(mu) + ")");
    }
    /// Degree bound of the edge cofactors.
    int cofactor_degree() const noexcept { return d - mu - 1; }
    /// C(d+2, 2)
    long poly_dim() const { return binom(d + 2, 2); }
    /// C(d-mu+1, 2)
    long cofactor_dim() const { return binom(d - mu + 1, 2); }
};

/// (u)_+
inline long positive_part(long u) { return u > 0 ? u : 0; }

/// k_d^mu(N): sum_{j=1}^{d-mu} (N(d-mu-j+1) - (d-j+2))_+
inline long local_dim_sum(long N, const SplineSpec& s) {
    if (N < 1) throw DomainError("local_dim_sum requires N >= 1");
    long k = 0;
    for (long j = 1; j <= s.d - s.mu; ++j) k += positive_part(N * (s.d - s.mu - j + 1) - (s.d - j + 2));
    return k;
}

/// Closed form of k_d^mu(N), valid for N >= 2.
inline long local_dim_closed(long N, const SplineSpec& s) {
    if (N < 2) throw DomainError("closed form of k_d^mu(N) needs N >= 2");
    const long d = s.d, mu = s.mu;
    const long fl = (mu + 1) / (N - 1);
    const long twice = positive_part(d - mu - fl) * ((N - 1) * d - (N + 1) * mu + (N - 3) + (N - 1) * fl);
    return twice / 2;
}

/// sigma_i of the formal lower bound: sum_{j=1}^{d-mu} (mu + 1 + j(1 - N))_+
inline long sigma_vertex(long N, const SplineSpec& s) {
    if (N < 1) throw DomainError("sigma_vertex requires N >= 1");
    long total = 0;
    for (long j = 1; j <= s.d - s.mu; ++j) total += positive_part(s.mu + 1 + j * (1 - N));
    return total;
}

/// One line direction through an interior vertex. `multiplicity` is 2 when
/// two opposite collinear edges share the direction.
struct VertexDirection {
    DirectionKey key;
    int multiplicity = 1;
    std::vector<std::size_t> edges;

    /// alpha X + beta Y in vertex-centred coordinates.
    Poly2 form() const { return Poly2::linear(Rational(key.a), Rational(key.b), 0); }
};

struct VertexSystem {
    std::size_t vertex = 0;
    Point location;
    std::vector<VertexDirection> directions; // sorted by key

    std::size_t index_of(const DirectionKey& k) const {
        for (std::size_t i = 0; i < directions.size(); ++i)
            if (directions[i].key == k) return i;
        throw DomainError("direction not incident to vertex " + std::to_string(vertex));
    }
};

inline VertexSystem vertex_system(const Partition& p, std::size_t v) {
    if (!p.is_interior_vertex(v)) throw DomainError("vertex " + std::to_string(v) + " is not interior");
    VertexSystem vs;
    vs.vertex = v;
    vs.location = p.vertices()[v];
    std::map<DirectionKey, VertexDirection> dirs;
    for (auto e : p.incident_edges(v)) {
        DirectionKey k = p.edge_line(e).direction();
        auto [it, fresh] = dirs.try_emplace(k, VertexDirection{k, 0, {}});
        it->second.multiplicity += 1;
        it->second.edges.push_back(e);
    }
    for (auto& [k, d] : dirs) {
        if (d.multiplicity > 2)
            throw GeometryError("more than two collinear edges at vertex " + std::to_string(v), {v});
        vs.directions.push_back(std::move(d));
    }
    return vs;
}

/// Canonical basis of W[A]: each tuple holds one merged cofactor per
/// direction, as a polynomial in vertex-centred coordinates X = x - x0,
/// Y = y - y0.
struct LocalBasis {
    std::size_t vertex = 0;
    Point location;
    std::vector<DirectionKey> directions;
    SplineSpec spec;
    std::vector<std::vector<Poly2>> basis;

    std::size_t k() const noexcept { return basis.size(); }

    /// Component for direction `dir` of tuple `i`, in global coordinates.
    Poly2 component_global(std::size_t i, std::size_t dir) const {
        return substitute_affine(basis.at(i).at(dir), AffineMap::translation(-location.x, -location.y));
    }

    /// Homogeneous degree of tuple i (every tuple is homogeneous).
    int tuple_degree(std::size_t i) const {
        int deg = -1;
        for (const auto& q : basis.at(i)) deg = std::max(deg, q.degree());
        return deg;
    }

    /// Number of tuples in the graded slice with cofactor degree d - mu - j.
    std::size_t slice_dimension(int j) const {
        std::size_t n = 0;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (tuple_degree(i) == spec.d - spec.mu - j) ++n;
        return n;
    }
};

/// Coefficient matrix of (p_1, ..., p_n) -> sum_dir p_dir L_dir^{mu+1}.
/// Rows: monomials of degree <= d; columns: (direction, monomial of degree
/// <= d - mu - 1), direction-major.
inline RatMatrix local_system_matrix(const VertexSystem& vs, const SplineSpec& spec) {
    const int m = spec.cofactor_degree();
    const auto cof = monomials_upto(m);
    const std::size_t rows = monomial_count(spec.d);
    RatMatrix A(rows, vs.directions.size() * cof.size());
    for (std::size_t k = 0; k < vs.directions.size(); ++k) {
        Poly2 Lp = vs.directions[k].form().pow(static_cast<unsigned>(spec.mu + 1));
        for (std::size_t c = 0; c < cof.size(); ++c) {
            Poly2 col = Poly2::monomial(cof[c]) * Lp;
            for (const auto& [mono, coef] : col.terms()) A(monomial_index(mono), k * cof.size() + c) = coef;
        }
    }
    return A;
}

inline LocalBasis local_basis(const VertexSystem& vs, const SplineSpec& spec) {
    spec.validate();
    const auto cof = monomials_upto(spec.cofactor_degree());
    LocalBasis lb;
    lb.vertex = vs.vertex;
    lb.location = vs.location;
    lb.spec = spec;
    for (const auto& d : vs.directions) lb.directions.push_back(d.key);
    for (auto& v : mat_nullspace(local_system_matrix(vs, spec))) {
        auto lead = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
        Rational scale = 1 / *lead;
        std::vector<Poly2> tuple(vs.directions.size());
        for (std::size_t k = 0; k < vs.directions.size(); ++k)
            for (std::size_t c = 0; c < cof.size(); ++c)
                tuple[k].add_term(cof[c], v[k * cof.size() + c] * scale);
        lb.basis.push_back(std::move(tuple));
    }
    return lb;
}

inline LocalBasis local_basis(const Partition& p, std::size_t v, const SplineSpec& spec) {
    return local_basis(vertex_system(p, v), spec);
}

/// Slope-based block Q_i of the graded local system for slice j:
/// entry (r, c) = C(d-j+1-c, r-c) gamma^{r-c} for r >= c.
inline RatMatrix schumaker_Q_block(const Rational& gamma, const SplineSpec& s, int j) {
    if (j < 1 || j > s.d - s.mu) throw DomainError("slice index j out of range 1..d-mu");
    const std::size_t rows = static_cast<std::size_t>(s.d - j + 2);
    const std::size_t cols = static_cast<std::size_t>(s.d - s.mu - j + 1);
    RatMatrix Q(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols && c <= r; ++c) {
            Rational g = 1;
            for (std::size_t e = 0; e < r - c; ++e) g *= gamma;
            Q(r, c) = Rational(binomial(static_cast<long>(s.d - j + 1 - static_cast<int>(c)), static_cast<long>(r - c))) * g;
        }
    }
    return Q;
}

} // namespace splinedim
