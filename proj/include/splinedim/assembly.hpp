#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ledges.hpp"
#include "local.hpp"
#include "matrix.hpp"

namespace splinedim {

struct ConformalityRow {
    std::size_t ledge = 0; // index into TEComponent::ledges
    Monomial monomial;
};

struct ConformalityCol {
    std::size_t vertex = 0;
    std::size_t freedom = 0;
};

/// Conformality matrix of the TE-connected component.
struct ConformalityMatrix {
    RatMatrix matrix;
    std::vector<ConformalityRow> row_labels;
    std::vector<ConformalityCol> col_labels;
};

enum class Method { General, Disjoint };

inline std::string_view to_string(Method m) { return m == Method::General ? "general" : "disjoint"; }

struct VertexReport {
    std::size_t id = 0;
    std::size_t N = 0;
    long k = 0;
    long sigma = 0;
};

struct DimensionReport {
    SplineSpec spec;
    PartitionStats stats;
    std::vector<VertexReport> vertices;
    std::size_t matrix_rows = 0;
    std::size_t matrix_cols = 0;
    std::size_t rank = 0;
    long dimension = 0;
    long lower_bound = 0;
    bool attains_bound = false;
    bool topology_identity = true;
    Method method = Method::General;
};

/// Local bases for every vertex of the TE-connected component, in vertex order.
inline std::map<std::size_t, LocalBasis> te_local_bases(const Partition& p, const TEComponent& te,
                                                        const SplineSpec& spec) {
    std::map<std::size_t, LocalBasis> out;
    for (auto v : te.vertex_set) out.emplace(v, local_basis(p, v, spec));
    return out;
}

/// Rows: for each truncated l-edge and each global monomial of degree
/// <= d - mu - 1, the coefficient of that monomial in the sum of the
/// l-edge-direction components over its chain vertices. Columns: local
/// freedoms of the TE vertices.
inline ConformalityMatrix assemble_conformality_matrix(const Partition& p, const TEComponent& te,
                                                       const SplineSpec& spec) {
    spec.validate();
    const auto bases = te_local_bases(p, te, spec);
    const auto monos = monomials_upto(spec.cofactor_degree());

    ConformalityMatrix cm;
    std::map<std::size_t, std::size_t> col_offset;
    for (const auto& [v, lb] : bases) {
        col_offset[v] = cm.col_labels.size();
        for (std::size_t f = 0; f < lb.k(); ++f) cm.col_labels.push_back({v, f});
    }
    for (std::size_t li = 0; li < te.ledges.size(); ++li)
        for (const auto& m : monos) cm.row_labels.push_back({li, m});

    cm.matrix = RatMatrix(cm.row_labels.size(), cm.col_labels.size());
    for (std::size_t li = 0; li < te.ledges.size(); ++li) {
        const LEdge& l = te.ledges[li];
        const DirectionKey dir = l.line.direction();
        const std::size_t row0 = li * monos.size();
        for (auto v : l.chain) {
            const LocalBasis& lb = bases.at(v);
            std::size_t di = 0;
            while (di < lb.directions.size() && !(lb.directions[di] == dir)) ++di;
            if (di == lb.directions.size()) throw DomainError("l-edge direction missing at vertex " + std::to_string(v));
            for (std::size_t f = 0; f < lb.k(); ++f) {
                Poly2 comp = lb.component_global(f, di);
                for (std::size_t r = 0; r < monos.size(); ++r) {
                    Rational c = comp.coeff(monos[r]);
                    if (c != 0) cm.matrix(row0 + r, col_offset[v] + f) += c;
                }
            }
        }
    }
    return cm;
}

inline ConformalityMatrix assemble_conformality_matrix(const Partition& p, const SplineSpec& spec) {
    return assemble_conformality_matrix(p, te_component(p), spec);
}

/// Formal (Schumaker-type) lower bound.
inline long schumaker_lower_bound(const PartitionStats& st, const SplineSpec& spec) {
    long bound = spec.poly_dim() + spec.cofactor_dim() * static_cast<long>(st.E) -
                 (spec.poly_dim() - binom(spec.mu + 2, 2)) * static_cast<long>(st.V);
    for (const auto& [v, n] : st.N) bound += sigma_vertex(static_cast<long>(n), spec);
    return bound;
}

inline long schumaker_lower_bound(const Partition& p, const SplineSpec& spec) {
    spec.validate();
    return schumaker_lower_bound(compute_stats(p), spec);
}

inline bool verify_topology_identity(const Partition& p) { return compute_stats(p).topology_identity_holds(); }

namespace detail {

inline DimensionReport base_report(const PartitionStats& st, const SplineSpec& spec) {
    DimensionReport rep;
    rep.spec = spec;
    rep.stats = st;
    for (const auto& [v, n] : st.N)
        rep.vertices.push_back({v, n, local_dim_sum(static_cast<long>(n), spec), sigma_vertex(static_cast<long>(n), spec)});
    rep.lower_bound = schumaker_lower_bound(st, spec);
    rep.topology_identity = st.topology_identity_holds();
    return rep;
}

inline long sum_k(const DimensionReport& rep) {
    long s = 0;
    for (const auto& v : rep.vertices) s += v.k;
    return s;
}

} // namespace detail

/// dim = C(d+2,2) + c C(d-mu+1,2) + sum_i k_d^mu(N_i) - rank M(TE).
inline DimensionReport dimension_general(const Partition& p, const SplineSpec& spec) {
    spec.validate();
    const auto ledges = extract_l_edges(p);
    const auto st = compute_stats(p, ledges);
    const auto te = te_component(ledges);
    const auto cm = assemble_conformality_matrix(p, te, spec);

    DimensionReport rep = detail::base_report(st, spec);
    rep.method = Method::General;
    rep.matrix_rows = cm.matrix.rows();
    rep.matrix_cols = cm.matrix.cols();
    rep.rank = mat_rank(cm.matrix);
    rep.dimension = spec.poly_dim() + static_cast<long>(st.c) * spec.cofactor_dim() + detail::sum_k(rep) -
                    static_cast<long>(rep.rank);
    rep.attains_bound = rep.dimension == rep.lower_bound;
    return rep;
}

/// dim = C(d+2,2) + (c - t) C(d-mu+1,2) + sum_i k_d^mu(N_i), for pairwise
/// disjoint truncated l-edges and N_i >= mu + 3 at every interior vertex.
inline DimensionReport dimension_disjoint(const Partition& p, const SplineSpec& spec) {
    spec.validate();
    const auto ledges = extract_l_edges(p);
    const auto st = compute_stats(p, ledges);
    const auto te = te_component(ledges);
    if (!te.disjoint) {
        std::map<std::size_t, std::size_t> uses;
        for (const auto& l : te.ledges)
            for (auto v : l.chain) ++uses[v];
        for (const auto& [v, n] : uses)
            if (n > 1)
                throw PreconditionError("truncated l-edges share vertex " + std::to_string(v));
    }
    for (const auto& [v, n] : st.N)
        if (static_cast<long>(n) < spec.mu + 3)
            throw PreconditionError("vertex " + std::to_string(v) + " has N = " + std::to_string(n) +
                                    " < mu + 3 = " + std::to_string(spec.mu + 3));

    DimensionReport rep = detail::base_report(st, spec);
    rep.method = Method::Disjoint;
    rep.matrix_rows = st.t * static_cast<std::size_t>(spec.cofactor_dim());
    for (auto v : te.vertex_set) rep.matrix_cols += static_cast<std::size_t>(local_dim_sum(static_cast<long>(st.N.at(v)), spec));
    rep.rank = rep.matrix_rows;
    rep.dimension = spec.poly_dim() + (static_cast<long>(st.c) - static_cast<long>(st.t)) * spec.cofactor_dim() +
                    detail::sum_k(rep);
    rep.attains_bound = rep.dimension == rep.lower_bound;
    return rep;
}

/// True iff the three lines are pairwise non-parallel and pass through one
/// point (vanishing coefficient determinant).
inline bool lines_concurrent(const LinForm& l1, const LinForm& l2, const LinForm& l3) {
    if (l1 == l2 || l1 == l3 || l2 == l3) throw DegenerateInput("lines_concurrent: two lines are identical");
    if (l1.direction() == l2.direction() || l1.direction() == l3.direction() || l2.direction() == l3.direction())
        return false;
    Rational det = l1.alpha() * (l2.beta() * l3.gamma0() - l2.gamma0() * l3.beta()) -
                   l1.beta() * (l2.alpha() * l3.gamma0() - l2.gamma0() * l3.alpha()) +
                   l1.gamma0() * (l2.alpha() * l3.beta() - l2.beta() * l3.alpha());
    return det == 0;
}

} // namespace splinedim
