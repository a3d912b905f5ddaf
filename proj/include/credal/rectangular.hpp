#pragma once

// Rectangular hull of a credal set with respect to a partition, and the
// pointwise maximality test used to cross-check it.

#include <string>
#include <vector>

#include "credal/credal_set.hpp"
#include "credal/model.hpp"

namespace credal {

namespace detail {

/// Conditionals available on each cell, one list per cell.
inline std::vector<std::vector<Prior>> cell_conditionals(const CredalSet& c, const Partition& partition,
                                                         UpdateMode mode) {
    std::vector<std::vector<Prior>> out;
    out.reserve(partition.size());
    for (const auto& cell : partition) out.push_back(update_set(c, cell, mode).vertices());
    return out;
}

}  // namespace detail

/// Extreme points of { sum_i P_0(E_i) P_i^{E_i} : P_0, ..., P_n in C }.
///
/// The map (P_0, P_1, ..., P_n) -> sum_i P_0(E_i) P_i^{E_i} is linear in the
/// cell weights and in each conditional separately, and the conditionals of a
/// polytope form the polytope spanned by the conditionals of its generators.
/// Every point of the image is therefore a convex combination of images of
/// generator tuples, so enumerating the distinct marginal vectors against the
/// distinct per-cell conditionals yields a generating set.
inline CredalSet rectangular_hull(const CredalSet& c, const Partition& partition,
                                  UpdateMode mode = UpdateMode::Strict) {
    detail::require_same_space(c, partition.n_states(), "partition");
    const auto conditionals = detail::cell_conditionals(c, partition, mode);
    const auto marginals = partition_marginals(c, partition);

    const std::size_t n = c.dimension();
    const std::size_t cells = partition.size();
    std::vector<Prior> generators;
    std::vector<std::size_t> choice(cells, 0);
    for (const auto& weights : marginals.vertices()) {
        std::fill(choice.begin(), choice.end(), 0);
        for (;;) {
            RationalVector point(n, Rational(0));
            for (std::size_t i = 0; i < cells; ++i) {
                if (sgn(weights[i]) == 0) continue;
                const Prior& q = conditionals[i][choice[i]];
                for (std::size_t s : partition[i]) point[s] += weights[i] * q[s];
            }
            generators.emplace_back(std::move(point));

            // Advance the mixed-radix counter, skipping cells of zero weight
            // whose conditional does not affect the point.
            std::size_t i = 0;
            for (; i < cells; ++i) {
                if (sgn(weights[i]) == 0) continue;
                if (++choice[i] < conditionals[i].size()) break;
                choice[i] = 0;
            }
            if (i == cells) break;
        }
    }
    return canonicalize(CredalSet(c.space(), std::move(generators)));
}

/// The set representing the coherent precautionary restriction of the Bewley
/// preference with priors c: the most incomplete unanimity rule that agrees
/// with c on bets over cells and on every conditional, while containing c.
/// It coincides with the rectangular hull.
inline CredalSet coherent_precautionary_restriction(const CredalSet& c, const Partition& partition,
                                                    UpdateMode mode = UpdateMode::Strict) {
    return rectangular_hull(c, partition, mode);
}

inline bool is_rectangular(const CredalSet& c, const Partition& partition, UpdateMode mode = UpdateMode::Strict) {
    return set_equals(c, rectangular_hull(c, partition, mode));
}

/// Pointwise test of the two defining conditions of the largest set with the
/// same conditionals and the same cell marginals as c: every conditional of q
/// on a cell it charges lies in the updated set, and q's cell masses lie in
/// the marginal polytope. Independent of rectangular_hull.
inline bool maximality_oracle(const CredalSet& c, const Partition& partition, const Prior& q,
                              UpdateMode mode = UpdateMode::Strict) {
    detail::require_same_space(c, partition.n_states(), "partition");
    detail::require_same_space(c, q.size(), "prior");
    for (const auto& cell : partition) {
        if (sgn(q.probability(cell)) == 0) continue;
        if (!contains(update_set(c, cell, mode), bayes_update(q, cell))) return false;
    }
    return contains(partition_marginals(c, partition), cell_masses(q, partition));
}

}  // namespace credal
