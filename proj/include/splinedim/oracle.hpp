#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "local.hpp"
#include "matrix.hpp"
#include "partition.hpp"

namespace splinedim {

// Brute-force dimension count: one polynomial per cell, C^mu imposed edge by
// edge through coefficient vanishing. Shares no code path with the
// cofactor assembly beyond Poly2/Rational.

/// Rows over the 2 C(d+2,2) unknowns (coefficients of f1, then of f2, in
/// graded monomial order) asserting that f1 - f2, written in edge-aligned
/// coordinates u = -beta x + alpha y, w = alpha x + beta y + gamma0, has no
/// monomial u^a w^b with b <= mu.
inline RatMatrix edge_smoothness_rows(const LinForm& line, const SplineSpec& spec) {
    spec.validate();
    AffineMap to_edge;
    to_edge.m11 = -line.beta();
    to_edge.m12 = line.alpha();
    to_edge.m21 = line.alpha();
    to_edge.m22 = line.beta();
    to_edge.t1 = 0;
    to_edge.t2 = line.gamma0();
    const AffineMap from_edge = to_edge.inverse();

    const auto monos = monomials_upto(spec.d);
    std::vector<Monomial> targets;
    for (const auto& m : monos)
        if (m.b <= spec.mu) targets.push_back(m);
    std::map<Monomial, std::size_t, MonomialLess> row_of;
    for (std::size_t i = 0; i < targets.size(); ++i) row_of[targets[i]] = i;

    RatMatrix rows(targets.size(), 2 * monos.size());
    for (std::size_t c = 0; c < monos.size(); ++c) {
        Poly2 img = substitute_affine(Poly2::monomial(monos[c]), from_edge);
        for (const auto& [m, coef] : img.terms()) {
            auto it = row_of.find(m);
            if (it == row_of.end()) continue;
            rows(it->second, c) = coef;
            rows(it->second, monos.size() + c) = -coef;
        }
    }
    return rows;
}

namespace detail {

/// Incremental row echelon form over sparse rational rows.
class SparseEchelon {
public:
    using Row = std::vector<std::pair<std::size_t, Rational>>; // sorted by column

    /// Reduces the row against the stored pivots; keeps it if independent.
    bool insert(Row row) {
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) break;
            row = axpy(row, it->second, -row.front().second);
        }
        if (row.empty()) return false;
        Rational inv = 1 / row.front().second;
        for (auto& [c, v] : row) v *= inv;
        pivots_.emplace(row.front().first, std::move(row));
        return true;
    }

    std::size_t rank() const noexcept { return pivots_.size(); }

private:
    static Row axpy(const Row& x, const Row& y, const Rational& a) {
        Row out;
        out.reserve(x.size() + y.size());
        std::size_t i = 0, j = 0;
        while (i < x.size() || j < y.size()) {
            if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
                out.push_back(x[i++]);
            } else if (i == x.size() || y[j].first < x[i].first) {
                out.emplace_back(y[j].first, a * y[j].second);
                ++j;
            } else {
                Rational v = x[i].second + a * y[j].second;
                if (v != 0) out.emplace_back(x[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::map<std::size_t, Row> pivots_;
};

} // namespace detail

struct OracleLimits {
    std::size_t max_cells = 15;
    int max_degree = 6;
};

struct OracleResult {
    long dimension = 0;
    std::size_t cells = 0;
    std::size_t unknowns = 0;
    std::size_t constraint_rows = 0;
    std::size_t rank = 0;
    std::vector<std::string> warnings; // ScaleWarning messages; non-fatal
};

inline OracleResult oracle_run(const Partition& p, const SplineSpec& spec, const OracleLimits& limits = {}) {
    spec.validate();
    OracleResult res;
    const auto cells = p.cells();
    res.cells = cells.size();
    if (cells.size() > limits.max_cells)
        res.warnings.push_back("ScaleWarning: " + std::to_string(cells.size()) + " cells exceeds the intended " +
                               std::to_string(limits.max_cells));
    if (spec.d > limits.max_degree)
        res.warnings.push_back("ScaleWarning: degree " + std::to_string(spec.d) + " exceeds the intended " +
                               std::to_string(limits.max_degree));

    std::map<std::size_t, std::size_t> cell_index;
    for (std::size_t i = 0; i < cells.size(); ++i) cell_index[cells[i]] = i;
    const std::size_t block = monomial_count(spec.d);
    res.unknowns = cells.size() * block;

    detail::SparseEchelon ech;
    for (auto e : p.interior_edges()) {
        auto [f1, f2] = p.adjacent_faces(e);
        const std::size_t o1 = cell_index.at(f1) * block, o2 = cell_index.at(f2) * block;
        const RatMatrix local = edge_smoothness_rows(p.edge_line(e), spec);
        for (std::size_t r = 0; r < local.rows(); ++r) {
            detail::SparseEchelon::Row row;
            for (std::size_t c = 0; c < local.cols(); ++c) {
                if (local(r, c) == 0) continue;
                std::size_t col = c < block ? o1 + c : o2 + (c - block);
                row.emplace_back(col, local(r, c));
            }
            std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            ++res.constraint_rows;
            ech.insert(std::move(row));
        }
    }
    res.rank = ech.rank();
    res.dimension = static_cast<long>(res.unknowns) - static_cast<long>(res.rank);
    return res;
}

/// dim S_d^mu by brute force.
inline long oracle_dimension(const Partition& p, const SplineSpec& spec) { return oracle_run(p, spec).dimension; }

} // namespace splinedim
