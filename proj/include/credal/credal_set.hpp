#pragma once

// Credal sets: polytopes of priors given by a finite list of generators.
// All set-level operations use hull semantics; the generator list may contain
// redundant points.

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "credal/errors.hpp"
#include "credal/lp.hpp"
#include "credal/model.hpp"
#include "credal/rational.hpp"

namespace credal {

enum class UpdateMode { Strict, Lenient };

inline const char* to_string(UpdateMode m) { return m == UpdateMode::Strict ? "strict" : "lenient"; }

class CredalSet {
public:
    CredalSet() = default;

    CredalSet(StateSpace space, std::vector<Prior> vertices) : space_(std::move(space)), vertices_(std::move(vertices)) {
        if (vertices_.empty()) throw InvalidArgument("credal set needs at least one prior");
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (vertices_[i].size() != space_.size())
                throw DimensionMismatch("prior " + std::to_string(i) + " has " + std::to_string(vertices_[i].size()) +
                                        " entries, state space has " + std::to_string(space_.size()));
    }

    /// The whole probability simplex over the space.
    static CredalSet simplex(StateSpace space) {
        std::vector<Prior> v;
        for (std::size_t s = 0; s < space.size(); ++s) v.push_back(Prior::dirac(space.size(), s));
        return CredalSet(std::move(space), std::move(v));
    }

    const StateSpace& space() const noexcept { return space_; }
    std::size_t dimension() const noexcept { return space_.size(); }
    const std::vector<Prior>& vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    const Prior& operator[](std::size_t i) const { return vertices_.at(i); }

private:
    StateSpace space_;
    std::vector<Prior> vertices_;
};

/// Minimum of a linear functional over the set, with the vertex attaining it.
struct SupportResult {
    Rational value;
    Prior witness;
    std::size_t vertex_index = 0;
};

/// Proof that q lies in the hull: q = sum_k weights[k] * vertex_k.
struct ConvexCombination {
    RationalVector weights;
};

/// Proof that q lies outside the hull: direction.q > bound >= direction.v for
/// every generator v.
struct Separation {
    RationalVector direction;
    Rational bound;
};

using MembershipCertificate = std::variant<ConvexCombination, Separation>;

/// A generator of D that is not in C, with the certificate of exclusion.
struct UncoveredPoint {
    std::size_t index = 0;
    Prior point;
    Separation separation;
};

namespace detail {

inline void require_same_space(const CredalSet& c, std::size_t n, const char* what) {
    if (c.dimension() != n)
        throw DimensionMismatch(std::string(what) + " has " + std::to_string(n) + " states, credal set has " +
                                std::to_string(c.dimension()));
}

/// Removes exact duplicates, keeping the first occurrence.
inline std::vector<Prior> dedupe(std::vector<Prior> points) {
    std::vector<Prior> out;
    out.reserve(points.size());
    for (auto& p : points)
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    return out;
}

inline MembershipCertificate hull_membership(std::span<const Prior> points, std::span<const Rational> q) {
    const std::size_t n = q.size();
    for (std::size_t k = 0; k < points.size(); ++k)
        if (std::equal(q.begin(), q.end(), points[k].mass().begin())) {
            RationalVector w(points.size(), Rational(0));
            w[k] = 1;
            return ConvexCombination{std::move(w)};
        }

    lp::Matrix a(n + 1, points.size());
    RationalVector b(n + 1);
    for (std::size_t k = 0; k < points.size(); ++k) {
        for (std::size_t s = 0; s < n; ++s) a(s, k) = points[k][s];
        a(n, k) = 1;
    }
    for (std::size_t s = 0; s < n; ++s) b[s] = q[s];
    b[n] = 1;

    auto result = lp::solve_feasibility(a, b);
    if (auto* x = std::get_if<lp::FeasiblePoint>(&result)) return ConvexCombination{std::move(x->x)};
    auto& y = std::get<lp::FarkasCertificate>(result).y;
    // y = (d, c) with d.v + c <= 0 for all generators and d.q + c > 0.
    Separation sep;
    sep.direction.assign(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n));
    sep.bound = -y[n];
    return sep;
}

}  // namespace detail

/// min over the hull of sum_s direction(s) P(s). Linear, so attained at a
/// generator; ties go to the first generator in list order.
inline SupportResult support_min(const CredalSet& c, const UtilityProfile& direction) {
    detail::require_same_space(c, direction.size(), "direction");
    std::size_t best = 0;
    Rational best_value = expected_utility(c[0], direction);
    for (std::size_t k = 1; k < c.size(); ++k) {
        Rational v = expected_utility(c[k], direction);
        if (v < best_value) {
            best = k;
            best_value = std::move(v);
        }
    }
    return {std::move(best_value), c[best], best};
}

/// Same as support_min for the maximum.
inline SupportResult support_max(const CredalSet& c, const UtilityProfile& direction) {
    detail::require_same_space(c, direction.size(), "direction");
    std::size_t best = 0;
    Rational best_value = expected_utility(c[0], direction);
    for (std::size_t k = 1; k < c.size(); ++k) {
        Rational v = expected_utility(c[k], direction);
        if (v > best_value) {
            best = k;
            best_value = std::move(v);
        }
    }
    return {std::move(best_value), c[best], best};
}

/// Membership of q in the hull, with a checked certificate either way.
inline MembershipCertificate membership(const CredalSet& c, std::span<const Rational> q) {
    detail::require_same_space(c, q.size(), "point");
    return detail::hull_membership(c.vertices(), q);
}

inline bool contains(const CredalSet& c, std::span<const Rational> q) {
    return std::holds_alternative<ConvexCombination>(membership(c, q));
}

inline bool contains(const CredalSet& c, const Prior& q) { return contains(c, q.mass()); }

/// First generator of d outside the hull of c, if any.
inline std::optional<UncoveredPoint> find_uncovered(const CredalSet& c, const CredalSet& d) {
    if (c.dimension() != d.dimension()) throw DimensionMismatch("credal sets over state spaces of different size");
    for (std::size_t k = 0; k < d.size(); ++k) {
        auto cert = membership(c, d[k].mass());
        if (auto* sep = std::get_if<Separation>(&cert)) return UncoveredPoint{k, d[k], std::move(*sep)};
    }
    return std::nullopt;
}

/// True iff hull(d) is a subset of hull(c).
inline bool includes(const CredalSet& c, const CredalSet& d) { return !find_uncovered(c, d).has_value(); }

inline bool set_equals(const CredalSet& c, const CredalSet& d) { return includes(c, d) && includes(d, c); }

/// Prior-by-prior Bayesian update of the set on a cell. In Strict mode every
/// generator must give the cell positive mass. In Lenient mode zero-mass
/// generators are dropped, and at least one must remain.
inline CredalSet update_set(const CredalSet& c, const Cell& cell, UpdateMode mode = UpdateMode::Strict) {
    if (cell.empty()) throw InvalidArgument("cannot condition on an empty cell");
    for (std::size_t s : cell)
        if (s >= c.dimension()) throw DimensionMismatch("cell refers to state index " + std::to_string(s) + " out of range");
    std::vector<Prior> updated;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (sgn(c[k].probability(cell)) == 0) {
            if (mode == UpdateMode::Strict)
                throw ZeroMassConditioning("prior " + to_string(c[k]) + " gives cell " + cell_name(c.space(), cell) +
                                           " probability zero");
            continue;
        }
        updated.push_back(bayes_update(c[k], cell));
    }
    if (updated.empty()) throw ZeroMassConditioning("every prior gives cell " + cell_name(c.space(), cell) + " probability zero");
    return CredalSet(c.space(), detail::dedupe(std::move(updated)));
}

/// Image of the set under P -> (P(E_1), ..., P(E_n)), over the quotient space.
inline CredalSet partition_marginals(const CredalSet& c, const Partition& partition) {
    detail::require_same_space(c, partition.n_states(), "partition");
    std::vector<Prior> marginals;
    for (const auto& v : c.vertices()) marginals.emplace_back(cell_masses(v, partition));
    return CredalSet(partition.quotient(c.space()), detail::dedupe(std::move(marginals)));
}

/// Same hull, generators reduced to extreme points and sorted in descending
/// lexicographic order.
inline CredalSet canonicalize(const CredalSet& c) {
    std::vector<Prior> points = detail::dedupe(c.vertices());
    std::sort(points.begin(), points.end(), [](const Prior& a, const Prior& b) { return b < a; });
    // Dropping a point that lies in the hull of the others leaves the hull
    // unchanged, so redundant points can be removed one at a time.
    for (std::size_t k = points.size(); k-- > 0 && points.size() > 1;) {
        std::vector<Prior> others;
        others.reserve(points.size() - 1);
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != k) others.push_back(points[j]);
        if (std::holds_alternative<ConvexCombination>(detail::hull_membership(others, points[k].mass())))
            points.erase(points.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return CredalSet(c.space(), std::move(points));
}

}  // namespace credal
