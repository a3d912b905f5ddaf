#pragma once

// Unanimity (Bewley) and maxmin criteria over a credal set, their recursive
// form over a partition, and a checker for the link between the two.

#include <optional>
#include <string>
#include <vector>

#include "credal/credal_set.hpp"
#include "credal/model.hpp"

namespace credal {

enum class VerdictKind { StrictlyBetter, Indifferent, StrictlyWorse, Incomparable };

inline const char* to_string(VerdictKind v) {
    switch (v) {
        case VerdictKind::StrictlyBetter: return "strictly-better";
        case VerdictKind::Indifferent: return "indifferent";
        case VerdictKind::StrictlyWorse: return "strictly-worse";
        case VerdictKind::Incomparable: return "incomparable";
    }
    return "?";
}

/// Outcome of a unanimity comparison of f against g.
///
/// favours_first is a prior with EU(f) > EU(g), favours_second one with
/// EU(g) > EU(f); each is present exactly when such a prior exists in the set.
struct Verdict {
    VerdictKind kind = VerdictKind::Indifferent;
    std::optional<Prior> favours_first;
    std::optional<Prior> favours_second;

    /// f is weakly preferred by every prior.
    bool weakly_prefers() const { return kind == VerdictKind::StrictlyBetter || kind == VerdictKind::Indifferent; }
};

inline Verdict bewley_compare(const CredalSet& c, const UtilityProfile& f, const UtilityProfile& g) {
    if (f.size() != g.size()) throw DimensionMismatch("compared acts have different length");
    const auto f_minus_g = support_min(c, f - g);  // < 0: some prior favours g
    const auto g_minus_f = support_min(c, g - f);  // < 0: some prior favours f
    Verdict v;
    const bool some_favour_f = sgn(g_minus_f.value) < 0;
    const bool some_favour_g = sgn(f_minus_g.value) < 0;
    if (some_favour_f) v.favours_first = g_minus_f.witness;
    if (some_favour_g) v.favours_second = f_minus_g.witness;
    if (some_favour_f && some_favour_g)
        v.kind = VerdictKind::Incomparable;
    else if (some_favour_f)
        v.kind = VerdictKind::StrictlyBetter;
    else if (some_favour_g)
        v.kind = VerdictKind::StrictlyWorse;
    else
        v.kind = VerdictKind::Indifferent;
    return v;
}

/// Lowest and highest expected utility of f over the set.
struct ExpectationBounds {
    Rational lower;
    Rational upper;
};

inline ExpectationBounds expectation_bounds(const CredalSet& c, const UtilityProfile& f) {
    return {support_min(c, f).value, support_max(c, f).value};
}

inline Rational maxmin_value(const CredalSet& c, const UtilityProfile& f) { return support_min(c, f).value; }

enum class MaxminOrder { Better, Indifferent, Worse };

inline const char* to_string(MaxminOrder o) {
    switch (o) {
        case MaxminOrder::Better: return "better";
        case MaxminOrder::Indifferent: return "indifferent";
        case MaxminOrder::Worse: return "worse";
    }
    return "?";
}

inline MaxminOrder maxmin_compare(const CredalSet& c, const UtilityProfile& f, const UtilityProfile& g) {
    if (f.size() != g.size()) throw DimensionMismatch("compared acts have different length");
    const int s = cmp(maxmin_value(c, f), maxmin_value(c, g));
    return s > 0 ? MaxminOrder::Better : s < 0 ? MaxminOrder::Worse : MaxminOrder::Indifferent;
}

/// Backward-induction maxmin: minimum over the cell marginals of the
/// weighted conditional maxmin values. Both minima are linear, so they are
/// attained at generators.
inline Rational recursive_maxmin_value(const CredalSet& c, const Partition& partition, const UtilityProfile& f,
                                       UpdateMode mode = UpdateMode::Strict) {
    detail::require_same_space(c, partition.n_states(), "partition");
    detail::require_same_space(c, f.size(), "act");
    RationalVector conditional_values;
    for (const auto& cell : partition) conditional_values.push_back(maxmin_value(update_set(c, cell, mode), f));
    return maxmin_value(partition_marginals(c, partition), UtilityProfile(std::move(conditional_values)));
}

// ---------------------------------------------------------------------------

struct GmmsCounterexample {
    enum class Kind { Consistency, DefaultToCertainty };
    Kind kind;
    UtilityProfile first;
    UtilityProfile second;  // the constant act for DefaultToCertainty
    std::string detail;
};

struct GmmsReport {
    std::size_t consistency_checks = 0;
    std::size_t certainty_checks = 0;
    std::vector<GmmsCounterexample> counterexamples;

    bool passed() const noexcept { return counterexamples.empty(); }
};

/// Verifies that maxmin over c completes unanimity over c:
///  - consistency: if every prior weakly prefers f to g, maxmin does too;
///  - default to certainty: if not every prior weakly prefers f to the
///    constant x, maxmin strictly prefers x.
/// Acts and constants are both used as acts for the consistency part.
inline GmmsReport gmms_completion_check(const CredalSet& c, const std::vector<UtilityProfile>& acts,
                                        const std::vector<Rational>& constants) {
    if (acts.empty()) throw InvalidArgument("completion check needs at least one act");
    const std::size_t n = c.dimension();
    std::vector<UtilityProfile> all = acts;
    for (const auto& x : constants) all.push_back(UtilityProfile::constant(n, x));

    GmmsReport report;
    for (const auto& f : all)
        for (const auto& g : all) {
            ++report.consistency_checks;
            if (bewley_compare(c, f, g).weakly_prefers() && maxmin_compare(c, f, g) == MaxminOrder::Worse)
                report.counterexamples.push_back({GmmsCounterexample::Kind::Consistency, f, g,
                                                  "unanimity ranks " + to_string(f) + " weakly above " +
                                                      to_string(g) + " but maxmin ranks it strictly below"});
        }
    for (const auto& f : acts)
        for (const auto& x : constants) {
            ++report.certainty_checks;
            const auto cx = UtilityProfile::constant(n, x);
            if (!bewley_compare(c, f, cx).weakly_prefers() && maxmin_compare(c, cx, f) != MaxminOrder::Better)
                report.counterexamples.push_back({GmmsCounterexample::Kind::DefaultToCertainty, f, cx,
                                                  "unanimity does not rank " + to_string(f) + " above constant " +
                                                      to_string(x) + " but maxmin does not prefer the constant"});
        }
    return report;
}

/// Constants lo, lo + step, ..., hi spanning the utility range of the acts in
/// `steps` equal intervals.
inline std::vector<Rational> certainty_grid(const std::vector<UtilityProfile>& acts, unsigned steps) {
    if (acts.empty() || acts.front().size() == 0 || steps == 0) return {};
    Rational lo = acts.front()[0], hi = lo;
    for (const auto& f : acts)
        for (const auto& u : f.utils()) {
            if (u < lo) lo = u;
            if (u > hi) hi = u;
        }
    std::vector<Rational> grid;
    for (unsigned k = 0; k <= steps; ++k) grid.push_back(lo + (hi - lo) * Rational(k) / steps);
    if (lo == hi) grid.resize(1);
    return grid;
}

}  // namespace credal
