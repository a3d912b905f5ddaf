#pragma once

// Audits of dynamic consistency, consequentialism, and of the set-level
// conditions relating a credal set to a candidate replacement.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "credal/credal_set.hpp"
#include "credal/decision.hpp"
#include "credal/model.hpp"
#include "credal/sampling.hpp"

namespace credal {

enum class Rule { Bewley, Maxmin };

inline const char* to_string(Rule r) { return r == Rule::Bewley ? "bewley" : "maxmin"; }

/// Ranking of f against g under the rule, on the common four-valued scale.
inline VerdictKind judge(Rule rule, const CredalSet& c, const UtilityProfile& f, const UtilityProfile& g) {
    if (rule == Rule::Bewley) return bewley_compare(c, f, g).kind;
    switch (maxmin_compare(c, f, g)) {
        case MaxminOrder::Better: return VerdictKind::StrictlyBetter;
        case MaxminOrder::Worse: return VerdictKind::StrictlyWorse;
        case MaxminOrder::Indifferent: break;
    }
    return VerdictKind::Indifferent;
}

struct NamedAct {
    std::string name;
    UtilityProfile utils;

    friend bool operator==(const NamedAct&, const NamedAct&) = default;
};

/// One failed check. For dynamic consistency, ex_post is the conditional
/// ranking of f against g given the cell and ex_ante the unconditional
/// ranking of the spliced act (f on the cell, g elsewhere) against g.
/// Consequentialism violations carry no ex_ante verdict.
struct AuditViolation {
    std::size_t first = 0;
    std::size_t second = 0;
    std::size_t cell = 0;
    std::optional<VerdictKind> ex_ante;
    VerdictKind ex_post = VerdictKind::Indifferent;
};

struct AuditOptions {
    UpdateMode mode = UpdateMode::Strict;
    std::uint64_t seed = default_seed;
    /// Seeded random acts appended to the supplied ones.
    std::size_t sampled_acts = 0;
};

struct AuditReport {
    std::string check;
    Rule rule = Rule::Maxmin;
    UpdateMode mode = UpdateMode::Strict;
    std::uint64_t seed = default_seed;
    std::vector<NamedAct> acts;
    std::vector<std::string> cells;
    std::size_t checked_pairs = 0;
    std::vector<AuditViolation> violations;

    bool passed() const noexcept { return violations.empty(); }
};

namespace detail {

inline AuditReport start_report(std::string check, const CredalSet& c, const Partition& partition,
                                std::vector<NamedAct> acts, const AuditOptions& opt) {
    require_same_space(c, partition.n_states(), "partition");
    if (acts.empty() && opt.sampled_acts == 0) throw InvalidArgument("audit needs at least one act");
    for (const auto& a : acts) require_same_space(c, a.utils.size(), ("act '" + a.name + "'").c_str());
    AuditReport r;
    r.check = std::move(check);
    r.mode = opt.mode;
    r.seed = opt.seed;
    r.acts = std::move(acts);
    auto sampled = sample_acts(c.dimension(), opt.sampled_acts, opt.seed);
    for (std::size_t k = 0; k < sampled.size(); ++k)
        r.acts.push_back({"sample" + std::to_string(k), std::move(sampled[k])});
    for (const auto& cell : partition) r.cells.push_back(cell_name(c.space(), cell));
    return r;
}

}  // namespace detail

/// Checks f >=_E g  <=>  fEg >= g for every ordered pair of distinct acts and
/// every cell, with conditional sets obtained by prior-by-prior updating. The
/// biconditional is compared verdict-wise: any difference between the
/// conditional and the unconditional verdict class is a violation.
inline AuditReport dynamic_consistency_audit(const CredalSet& c, const Partition& partition, Rule rule,
                                             std::vector<NamedAct> acts, const AuditOptions& opt = {}) {
    AuditReport r = detail::start_report("dynamic-consistency", c, partition, std::move(acts), opt);
    r.rule = rule;
    std::vector<CredalSet> conditional;
    for (const auto& cell : partition) conditional.push_back(update_set(c, cell, opt.mode));

    for (std::size_t i = 0; i < r.acts.size(); ++i)
        for (std::size_t j = 0; j < r.acts.size(); ++j) {
            if (i == j) continue;
            ++r.checked_pairs;
            const auto& f = r.acts[i].utils;
            const auto& g = r.acts[j].utils;
            for (std::size_t e = 0; e < partition.size(); ++e) {
                const VerdictKind ex_post = judge(rule, conditional[e], f, g);
                const VerdictKind ex_ante = judge(rule, c, splice(f, g, partition[e]), g);
                if (ex_post != ex_ante) r.violations.push_back({i, j, e, ex_ante, ex_post});
            }
        }
    return r;
}

/// For every ordered pair (f, g) and cell E, replaces g by the act equal to f
/// on E and to g elsewhere, and checks that both rules are indifferent given E.
inline AuditReport consequentialism_check(const CredalSet& c, const Partition& partition, std::vector<NamedAct> acts,
                                          const AuditOptions& opt = {}) {
    AuditReport r = detail::start_report("consequentialism", c, partition, std::move(acts), opt);
    std::vector<CredalSet> conditional;
    for (const auto& cell : partition) conditional.push_back(update_set(c, cell, opt.mode));

    for (std::size_t i = 0; i < r.acts.size(); ++i)
        for (std::size_t j = 0; j < r.acts.size(); ++j) {
            ++r.checked_pairs;
            const auto& f = r.acts[i].utils;
            for (std::size_t e = 0; e < partition.size(); ++e) {
                const auto agreeing = splice(f, r.acts[j].utils, partition[e]);
                for (Rule rule : {Rule::Bewley, Rule::Maxmin}) {
                    const VerdictKind v = judge(rule, conditional[e], f, agreeing);
                    if (v != VerdictKind::Indifferent) r.violations.push_back({i, j, e, std::nullopt, v});
                }
            }
        }
    return r;
}

// ---------------------------------------------------------------------------

enum class ConditionStatus { Pass, Fail, NotChecked };

inline const char* to_string(ConditionStatus s) {
    switch (s) {
        case ConditionStatus::Pass: return "pass";
        case ConditionStatus::Fail: return "fail";
        case ConditionStatus::NotChecked: return "not-checked";
    }
    return "?";
}

/// Result of one condition. When it fails, `uncovered` is a generator of the
/// set named by `missing_from_other` that lies outside the other set, with a
/// separating direction.
struct ConditionResult {
    std::string id;
    std::string description;
    ConditionStatus status = ConditionStatus::Pass;
    std::optional<std::size_t> cell;
    std::optional<UncoveredPoint> uncovered;
    std::string missing_from_other;
};

struct AxiomReport {
    UpdateMode mode = UpdateMode::Strict;
    std::vector<std::string> cells;
    std::vector<ConditionResult> conditions;

    bool passed() const {
        for (const auto& c : conditions)
            if (c.status == ConditionStatus::Fail) return false;
        return true;
    }

    /// True when every condition with the given id passed or was not checked.
    bool passed(const std::string& id) const {
        for (const auto& c : conditions)
            if (c.id == id && c.status == ConditionStatus::Fail) return false;
        return true;
    }
};

/// Set-level conditions under which the unanimity rule with priors c_hat is
/// a prudent and coherent replacement for the one with priors c:
///   (i)   same utility: holds by construction, reported as not checked;
///   (ii)  c is contained in c_hat;
///   (iii) the updated sets agree on every cell;
///   (iv)  every cell-marginal vector of c_hat is one of c.
inline AxiomReport coherence_prudence_check(const CredalSet& c, const CredalSet& c_hat, const Partition& partition,
                                            UpdateMode mode = UpdateMode::Strict) {
    detail::require_same_space(c, partition.n_states(), "partition");
    if (c.dimension() != c_hat.dimension()) throw DimensionMismatch("credal sets over state spaces of different size");

    AxiomReport r;
    r.mode = mode;
    for (const auto& cell : partition) r.cells.push_back(cell_name(c.space(), cell));

    r.conditions.push_back({"i", "both preferences share one utility function", ConditionStatus::NotChecked,
                            std::nullopt, std::nullopt, ""});

    auto inclusion = [](std::string id, std::string description, const CredalSet& outer, const CredalSet& inner,
                        std::optional<std::size_t> cell, std::string inner_name) {
        ConditionResult res{std::move(id), std::move(description), ConditionStatus::Pass, cell, std::nullopt, ""};
        if (auto miss = find_uncovered(outer, inner)) {
            res.status = ConditionStatus::Fail;
            res.uncovered = std::move(miss);
            res.missing_from_other = std::move(inner_name);
        }
        return res;
    };

    r.conditions.push_back(inclusion("ii", "original priors are contained in the new set", c_hat, c, std::nullopt, "C"));

    for (std::size_t e = 0; e < partition.size(); ++e) {
        const auto updated = update_set(c, partition[e], mode);
        const auto updated_hat = update_set(c_hat, partition[e], mode);
        auto res = inclusion("iii", "updated sets coincide on " + r.cells[e], updated, updated_hat, e, "C_hat|E");
        if (res.status == ConditionStatus::Pass)
            res = inclusion("iii", "updated sets coincide on " + r.cells[e], updated_hat, updated, e, "C|E");
        r.conditions.push_back(std::move(res));
    }

    r.conditions.push_back(inclusion("iv", "cell marginals of the new set are marginals of the original",
                                     partition_marginals(c, partition), partition_marginals(c_hat, partition),
                                     std::nullopt, "marginals(C_hat)"));
    return r;
}

}  // namespace credal
