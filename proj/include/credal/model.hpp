#pragma once

// Finite state spaces, partitions, priors and acts expressed in utility units.

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "credal/errors.hpp"
#include "credal/rational.hpp"

namespace credal {

/// Ordered list of state labels. The order is the index order of every vector
/// built over the space.
class StateSpace {
public:
    StateSpace() = default;

    explicit StateSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
        if (labels_.empty()) throw InvalidArgument("state space must contain at least one state");
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (labels_[i].empty()) throw InvalidArgument("empty state label at index " + std::to_string(i));
            if (!index_.emplace(labels_[i], i).second)
                throw InvalidArgument("duplicate state label '" + labels_[i] + "'");
        }
    }

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    std::optional<std::size_t> find(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t index_of(const std::string& label) const {
        if (auto i = find(label)) return *i;
        throw InvalidArgument("unknown state label '" + label + "'");
    }

    friend bool operator==(const StateSpace& a, const StateSpace& b) { return a.labels_ == b.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// A set of state indices, kept sorted and duplicate free.
class Cell {
public:
    Cell() = default;

    explicit Cell(std::vector<std::size_t> states) : states_(std::move(states)) {
        std::sort(states_.begin(), states_.end());
        states_.erase(std::unique(states_.begin(), states_.end()), states_.end());
    }

    Cell(std::initializer_list<std::size_t> states) : Cell(std::vector<std::size_t>(states)) {}

    /// Every index in [0, n).
    static Cell full(std::size_t n) {
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i;
        return Cell(std::move(all));
    }

    bool contains(std::size_t s) const { return std::binary_search(states_.begin(), states_.end(), s); }
    bool empty() const noexcept { return states_.empty(); }
    std::size_t size() const noexcept { return states_.size(); }
    const std::vector<std::size_t>& states() const noexcept { return states_; }
    auto begin() const noexcept { return states_.begin(); }
    auto end() const noexcept { return states_.end(); }

    /// Complement within [0, n).
    Cell complement(std::size_t n) const {
        std::vector<std::size_t> out;
        for (std::size_t s = 0; s < n; ++s)
            if (!contains(s)) out.push_back(s);
        return Cell(std::move(out));
    }

    friend bool operator==(const Cell&, const Cell&) = default;

private:
    std::vector<std::size_t> states_;
};

/// Display name of a cell: concatenated labels when every label is a single
/// character ("RB"), otherwise labels joined with '+'.
inline std::string cell_name(const StateSpace& space, const Cell& cell) {
    bool short_labels = std::all_of(cell.begin(), cell.end(),
                                    [&](std::size_t s) { return space.label(s).size() == 1; });
    std::string out;
    for (std::size_t s : cell) {
        if (!out.empty() && !short_labels) out += '+';
        out += space.label(s);
    }
    return out.empty() ? std::string("{}") : out;
}

/// Ordered list of pairwise disjoint, non-empty cells covering the space.
class Partition {
public:
    Partition() = default;

    Partition(std::size_t n_states, std::vector<Cell> cells) : n_states_(n_states), cells_(std::move(cells)) {
        if (cells_.empty()) throw InvalidArgument("partition must have at least one cell");
        std::vector<int> seen(n_states_, 0);
        for (std::size_t i = 0; i < cells_.size(); ++i) {
            if (cells_[i].empty()) throw InvalidArgument("partition cell " + std::to_string(i) + " is empty");
            for (std::size_t s : cells_[i]) {
                if (s >= n_states_)
                    throw InvalidArgument("partition cell " + std::to_string(i) + " refers to state index " +
                                          std::to_string(s) + " out of range");
                if (seen[s]++) throw InvalidArgument("state index " + std::to_string(s) + " lies in two cells");
            }
        }
        for (std::size_t s = 0; s < n_states_; ++s)
            if (!seen[s]) throw InvalidArgument("state index " + std::to_string(s) + " is not covered by the partition");
    }

    /// Builds a partition from label lists, e.g. {{"G"}, {"R", "B"}}.
    static Partition from_labels(const StateSpace& space, const std::vector<std::vector<std::string>>& cells) {
        std::vector<Cell> out;
        out.reserve(cells.size());
        for (const auto& labels : cells) {
            std::vector<std::size_t> idx;
            for (const auto& l : labels) idx.push_back(space.index_of(l));
            Cell c(std::move(idx));
            if (c.size() != labels.size()) throw InvalidArgument("duplicate label inside a partition cell");
            out.push_back(std::move(c));
        }
        return Partition(space.size(), std::move(out));
    }

    static Partition trivial(std::size_t n_states) { return Partition(n_states, {Cell::full(n_states)}); }

    std::size_t n_states() const noexcept { return n_states_; }
    std::size_t size() const noexcept { return cells_.size(); }
    const Cell& operator[](std::size_t i) const { return cells_.at(i); }
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    auto begin() const noexcept { return cells_.begin(); }
    auto end() const noexcept { return cells_.end(); }

    /// Index of the cell containing state s.
    std::size_t cell_of(std::size_t s) const {
        for (std::size_t i = 0; i < cells_.size(); ++i)
            if (cells_[i].contains(s)) return i;
        throw InvalidArgument("state index " + std::to_string(s) + " out of range");
    }

    /// State space whose states are the cells, labelled by cell_name.
    StateSpace quotient(const StateSpace& space) const {
        std::vector<std::string> labels;
        for (const auto& c : cells_) labels.push_back(cell_name(space, c));
        return StateSpace(std::move(labels));
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.n_states_ == b.n_states_ && a.cells_ == b.cells_;
    }

private:
    std::size_t n_states_ = 0;
    std::vector<Cell> cells_;
};

/// Probability vector over a finite state space: non-negative, sums to one.
class Prior {
public:
    Prior() = default;

    explicit Prior(RationalVector mass) : mass_(std::move(mass)) {
        if (mass_.empty()) throw InvalidArgument("prior over an empty state space");
        for (std::size_t i = 0; i < mass_.size(); ++i)
            if (sgn(mass_[i]) < 0)
                throw InvalidArgument("prior has negative mass " + to_string(mass_[i]) + " at index " + std::to_string(i));
        if (credal::sum(mass_) != 1)
            throw InvalidArgument("prior " + to_string(std::span<const Rational>(mass_)) + " sums to " +
                                  to_string(credal::sum(mass_)) + ", not 1");
    }

    Prior(std::initializer_list<Rational> mass) : Prior(RationalVector(mass)) {}

    /// Point mass on state s.
    static Prior dirac(std::size_t n, std::size_t s) {
        RationalVector m(n, Rational(0));
        m.at(s) = 1;
        return Prior(std::move(m));
    }

    std::size_t size() const noexcept { return mass_.size(); }
    const Rational& operator[](std::size_t i) const { return mass_[i]; }
    std::span<const Rational> mass() const noexcept { return mass_; }
    const RationalVector& vector() const noexcept { return mass_; }

    Rational probability(const Cell& cell) const {
        Rational acc = 0;
        for (std::size_t s : cell) acc += mass_.at(s);
        return acc;
    }

    friend bool operator==(const Prior&, const Prior&) = default;
    /// Lexicographic order on the mass vector.
    friend bool operator<(const Prior& a, const Prior& b) { return a.mass_ < b.mass_; }

private:
    RationalVector mass_;
};

inline std::string to_string(const Prior& p) { return to_string(p.mass()); }

/// An act in utility units: one exact utility per state.
class UtilityProfile {
public:
    UtilityProfile() = default;
    explicit UtilityProfile(RationalVector utils) : utils_(std::move(utils)) {}
    UtilityProfile(std::initializer_list<Rational> utils) : utils_(utils) {}

    static UtilityProfile constant(std::size_t n, const Rational& x) { return UtilityProfile(RationalVector(n, x)); }

    std::size_t size() const noexcept { return utils_.size(); }
    const Rational& operator[](std::size_t i) const { return utils_[i]; }
    std::span<const Rational> utils() const noexcept { return utils_; }
    const RationalVector& vector() const noexcept { return utils_; }

    friend bool operator==(const UtilityProfile&, const UtilityProfile&) = default;

    friend UtilityProfile operator-(const UtilityProfile& a, const UtilityProfile& b) {
        if (a.size() != b.size()) throw DimensionMismatch("acts of different length");
        RationalVector out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
        return UtilityProfile(std::move(out));
    }

    /// Positive affine transform a*u + b.
    UtilityProfile affine(const Rational& a, const Rational& b) const {
        RationalVector out(utils_.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a * utils_[i] + b;
        return UtilityProfile(std::move(out));
    }

private:
    RationalVector utils_;
};

inline std::string to_string(const UtilityProfile& f) { return to_string(f.utils()); }

/// Consequence labels with their utilities. Used as a front end for acts
/// written in terms of outcomes instead of utilities.
class ConsequenceTable {
public:
    ConsequenceTable() = default;

    void add(const std::string& label, const Rational& utility) {
        if (label.empty()) throw InvalidArgument("empty consequence label");
        if (!entries_.emplace(label, utility).second)
            throw InvalidArgument("duplicate consequence label '" + label + "'");
    }

    std::optional<Rational> utility(const std::string& label) const {
        auto it = entries_.find(label);
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    /// True when some consequence plays the role of the zero-utility outcome.
    bool has_zero_outcome() const {
        return std::any_of(entries_.begin(), entries_.end(), [](const auto& e) { return sgn(e.second) == 0; });
    }

    bool empty() const noexcept { return entries_.empty(); }
    const std::map<std::string, Rational>& entries() const noexcept { return entries_; }

    /// Maps an act written in consequence labels to utility units.
    UtilityProfile evaluate(const std::vector<std::string>& consequences) const {
        RationalVector out;
        for (const auto& c : consequences) {
            auto u = utility(c);
            if (!u) throw InvalidArgument("unknown consequence '" + c + "'");
            out.push_back(*u);
        }
        return UtilityProfile(std::move(out));
    }

    friend bool operator==(const ConsequenceTable&, const ConsequenceTable&) = default;

private:
    std::map<std::string, Rational> entries_;
};

// ---------------------------------------------------------------------------

inline Rational expected_utility(const Prior& p, const UtilityProfile& f) {
    if (p.size() != f.size())
        throw DimensionMismatch("prior has " + std::to_string(p.size()) + " states, act has " + std::to_string(f.size()));
    return dot(p.mass(), f.utils());
}

/// Bayesian update p(. | cell).
inline Prior bayes_update(const Prior& p, const Cell& cell) {
    for (std::size_t s : cell)
        if (s >= p.size()) throw DimensionMismatch("cell refers to state index " + std::to_string(s) + " out of range");
    const Rational mass = p.probability(cell);
    if (sgn(mass) == 0)
        throw ZeroMassConditioning("conditioning " + to_string(p) + " on a cell of probability zero");
    RationalVector out(p.size(), Rational(0));
    for (std::size_t s : cell) out[s] = p[s] / mass;
    return Prior(std::move(out));
}

/// The act equal to f on cell and to g elsewhere.
inline UtilityProfile splice(const UtilityProfile& f, const UtilityProfile& g, const Cell& cell) {
    if (f.size() != g.size()) throw DimensionMismatch("splice of acts of different length");
    RationalVector out = g.vector();
    for (std::size_t s : cell) {
        if (s >= out.size()) throw DimensionMismatch("cell refers to state index " + std::to_string(s) + " out of range");
        out[s] = f[s];
    }
    return UtilityProfile(std::move(out));
}

/// Pointwise alpha*f + (1-alpha)*g.
inline UtilityProfile mixture(const UtilityProfile& f, const UtilityProfile& g, const Rational& alpha) {
    if (f.size() != g.size()) throw DimensionMismatch("mixture of acts of different length");
    if (sgn(alpha) < 0 || alpha > 1) throw AlphaOutOfRange("mixture weight " + to_string(alpha) + " outside [0,1]");
    RationalVector out(f.size());
    const Rational beta = 1 - alpha;
    for (std::size_t s = 0; s < out.size(); ++s) out[s] = alpha * f[s] + beta * g[s];
    return UtilityProfile(std::move(out));
}

/// Cell probabilities (p(E_1), ..., p(E_n)).
inline RationalVector cell_masses(const Prior& p, const Partition& partition) {
    if (p.size() != partition.n_states())
        throw DimensionMismatch("prior has " + std::to_string(p.size()) + " states, partition covers " +
                                std::to_string(partition.n_states()));
    RationalVector out;
    out.reserve(partition.size());
    for (const auto& c : partition) out.push_back(p.probability(c));
    return out;
}

/// Law of total probability: sum_i weight_i * conditional_i, where
/// conditional_i must be supported inside cell i.
inline Prior total_probability_recompose(std::span<const Rational> weights, std::span<const Prior> conditionals,
                                         const Partition& partition) {
    if (weights.size() != partition.size() || conditionals.size() != partition.size())
        throw DimensionMismatch("expected one weight and one conditional per partition cell");
    for (const auto& w : weights)
        if (sgn(w) < 0) throw WeightNotNormalized("negative cell weight " + to_string(w));
    if (credal::sum(weights) != 1) throw WeightNotNormalized("cell weights sum to " + to_string(credal::sum(weights)));

    const std::size_t n = partition.n_states();
    RationalVector out(n, Rational(0));
    for (std::size_t i = 0; i < partition.size(); ++i) {
        const Prior& q = conditionals[i];
        if (q.size() != n) throw DimensionMismatch("conditional " + std::to_string(i) + " has wrong length");
        for (std::size_t s = 0; s < n; ++s) {
            if (sgn(q[s]) != 0 && !partition[i].contains(s))
                throw SupportViolation("conditional " + std::to_string(i) + " puts mass on a state outside its cell");
            out[s] += weights[i] * q[s];
        }
    }
    return Prior(std::move(out));
}

}  // namespace credal
