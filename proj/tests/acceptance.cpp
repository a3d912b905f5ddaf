// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "credal/audit.hpp"
#include "credal/decision.hpp"
#include "credal/rectangular.hpp"
#include "credal/scenario.hpp"
#include "test_support.hpp"

using namespace credal;
using credal::test::prior;
using credal::test::q;

namespace {

constexpr std::size_t instance_count = 50;
constexpr std::size_t priors_per_instance = 1000;
constexpr std::size_t acts_per_instance = 20;
constexpr std::uint64_t instance_seed = 20200401;

std::string fixture(const std::string& name) { return std::string(CREDAL_SCENARIO_DIR) + "/" + name; }

class Check {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failures_.size() < 5) failures_.push_back(what);
        if (!ok) ++failed_;
    }
    bool ok() const { return failed_ == 0; }
    std::string summary() const {
        std::ostringstream s;
        s << checks_ << " checks";
        if (failed_) {
            s << ", " << failed_ << " failed";
            for (const auto& f : failures_) s << "; " << f;
        }
        return s.str();
    }

private:
    std::size_t checks_ = 0, failed_ = 0;
    std::vector<std::string> failures_;
};

std::vector<test::Instance> instances() {
    Rng rng(instance_seed);
    std::vector<test::Instance> out;
    for (std::size_t i = 0; i < instance_count; ++i) out.push_back(test::random_instance(rng, 5, 4, 3));
    return out;
}

Check ex_ante_ranking() {
    const test::Ellsberg e;
    Check c;
    c.expect(maxmin_value(e.c, e.f) == q("10/3"), "maxmin f = " + to_string(maxmin_value(e.c, e.f)));
    c.expect(maxmin_value(e.c, e.g) == q("20/3"), "maxmin g = " + to_string(maxmin_value(e.c, e.g)));
    c.expect(maxmin_compare(e.c, e.g, e.f) == MaxminOrder::Better, "g not ranked above f");
    return c;
}

Check ex_post_ranking() {
    const test::Ellsberg e;
    Check c;
    const auto rb = update_set(e.c, e.rb_cell, UpdateMode::Lenient);
    c.expect(set_equals(rb, CredalSet(e.space, {prior({"1", "0", "0"}), prior({"1/3", "2/3", "0"})})),
             "updated set differs");
    c.expect(maxmin_compare(rb, e.f, e.g) == MaxminOrder::Better, "f not ranked above g given RB");
    return c;
}

Check dc_detection() {
    Check c;
    const auto doc = load_scenario(fixture("ellsberg.scn"));
    const std::vector<NamedAct> fg{*doc.find_act("f"), *doc.find_act("g")};
    const AuditOptions opt{doc.mode, doc.seed, 0};
    const auto before = dynamic_consistency_audit(doc.credal(), doc.partition, Rule::Maxmin, fg, opt);
    c.expect(!before.violations.empty(), "no violation found");
    for (const auto& v : before.violations) {
        const auto pair = before.acts[v.first].name + before.acts[v.second].name;
        c.expect((pair == "fg" || pair == "gf") && before.cells[v.cell] == "RB",
                 "unexpected violation " + pair + " on " + before.cells[v.cell]);
    }
    const auto& first = before.violations.front();
    c.expect(before.acts[first.first].name == "f" && before.cells[first.cell] == "RB" &&
                 first.ex_post == VerdictKind::StrictlyBetter && first.ex_ante == VerdictKind::StrictlyWorse,
             "(f,g,RB) not reported");

    const auto hull = rectangular_hull(doc.credal(), doc.partition, doc.mode);
    for (Rule rule : {Rule::Maxmin, Rule::Bewley}) {
        const auto after = dynamic_consistency_audit(hull, doc.partition, rule, fg, opt);
        c.expect(after.passed(), "violations after rectangularizing: " + std::to_string(after.violations.size()));
    }
    return c;
}

Check hull_values() {
    const test::Ellsberg e;
    Check c;
    const auto hull = rectangular_hull(e.c, e.partition, UpdateMode::Lenient);
    c.expect(maxmin_value(hull, e.g) == 0, "I(g) = " + to_string(maxmin_value(hull, e.g)));
    c.expect(maxmin_value(hull, e.f) == q("10/3"), "I(f) = " + to_string(maxmin_value(hull, e.f)));
    c.expect(contains(hull, prior({"1/9", "2/9", "6/9"})), "(1/9,2/9,6/9) not in hull");
    return c;
}

Check reversal() {
    const test::Ellsberg e;
    Check c;
    c.expect(bewley_compare(e.c, e.g, e.f_prime).kind == VerdictKind::StrictlyBetter, "g not unanimously above f'");
    // grid oracle first, over the closed form of the hull
    const Rational grid_fp = test::parametric_grid_min(e.f_prime, 100);
    const Rational grid_g = test::parametric_grid_min(e.g, 100);
    c.expect(grid_fp == q("10/9") && grid_g == 0, "grid oracle gives " + to_string(grid_fp) + " vs " + to_string(grid_g));
    const auto hull = rectangular_hull(e.c, e.partition, UpdateMode::Lenient);
    c.expect(maxmin_value(hull, e.f_prime) == grid_fp, "hull value of f' = " + to_string(maxmin_value(hull, e.f_prime)));
    c.expect(maxmin_value(hull, e.g) == grid_g, "hull value of g differs from grid");
    c.expect(maxmin_compare(hull, e.f_prime, e.g) == MaxminOrder::Better, "f' not ranked above g");
    return c;
}

Check hull_properties(const std::vector<test::Instance>& family) {
    Check c;
    Rng rng(instance_seed + 1);
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& [set, p] = family[i];
        const auto tag = "instance " + std::to_string(i);
        const auto hull = rectangular_hull(set, p);
        c.expect(set_equals(hull, CredalSet(set.space(), test::brute_rectangular_generators(set, p))),
                 tag + ": hull differs from brute force");
        c.expect(includes(hull, set), tag + ": containment");
        c.expect(set_equals(rectangular_hull(hull, p), hull), tag + ": idempotence");
        for (const auto& cell : p)
            c.expect(set_equals(update_set(hull, cell), update_set(set, cell)), tag + ": update preservation");
        c.expect(set_equals(partition_marginals(hull, p), partition_marginals(set, p)), tag + ": marginal preservation");
        for (const auto& x : test::sample_priors(rng, set, p, priors_per_instance))
            c.expect(maximality_oracle(set, p, x) == contains(hull, x), tag + ": oracle disagrees at " + to_string(x));
    }
    return c;
}

Check recursive_decomposition(const std::vector<test::Instance>& family) {
    Check c;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& [set, p] = family[i];
        const auto hull = rectangular_hull(set, p);
        for (const auto& f : sample_acts(set.dimension(), acts_per_instance, instance_seed + i))
            c.expect(recursive_maxmin_value(set, p, f) == maxmin_value(hull, f),
                     "instance " + std::to_string(i) + ": act " + to_string(f.utils()));
    }
    return c;
}

Check gmms(const std::vector<test::Instance>& family) {
    Check c;
    auto run = [&](const CredalSet& set, std::vector<UtilityProfile> acts, const std::string& tag) {
        const auto r = gmms_completion_check(set, acts, certainty_grid(acts, 20));
        c.expect(r.passed(), tag + ": " + (r.passed() ? std::string() : r.counterexamples.front().detail));
    };
    for (const char* name : {"ellsberg.scn", "singleton.scn"}) {
        const auto doc = load_scenario(fixture(name));
        std::vector<UtilityProfile> acts;
        for (const auto& a : doc.acts) acts.push_back(a.utils);
        auto extra = sample_acts(doc.states.size(), 10, doc.seed);
        acts.insert(acts.end(), extra.begin(), extra.end());
        run(doc.credal(), acts, name);
        run(rectangular_hull(doc.credal(), doc.partition, doc.mode), acts, std::string(name) + " hull");
    }
    for (std::size_t i = 0; i < family.size(); ++i)
        run(family[i].c, sample_acts(family[i].c.dimension(), 10, instance_seed + 100 + i),
            "instance " + std::to_string(i));
    return c;
}

bool certified(const ConditionResult& cond) {
    if (!cond.uncovered) return false;
    const auto& sep = cond.uncovered->separation;
    return dot(sep.direction, cond.uncovered->point.mass()) > sep.bound;
}

Check coherence_prudence(const std::vector<test::Instance>& family) {
    Check c;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& [set, p] = family[i];
        const auto r = coherence_prudence_check(set, rectangular_hull(set, p), p);
        for (const char* id : {"ii", "iii", "iv"})
            c.expect(r.passed(id), "instance " + std::to_string(i) + ": condition " + id);
    }
    const test::Ellsberg e;
    c.expect(coherence_prudence_check(e.c, e.hull, e.partition, UpdateMode::Lenient).passed(), "Ellsberg hull");
    const auto neg = coherence_prudence_check(e.c, CredalSet::simplex(e.space), e.partition, UpdateMode::Lenient);
    c.expect(neg.passed("ii"), "simplex fails containment");
    c.expect(!neg.passed("iii") && !neg.passed("iv"), "simplex passes (iii) or (iv)");
    for (const auto& cond : neg.conditions)
        if (cond.status == ConditionStatus::Fail)
            c.expect(certified(cond), "no valid certificate for (" + cond.id + ")");
    return c;
}

}  // namespace

int main() {
    const auto family = instances();
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
        {"ex-ante maxmin ranking on the three-colour urn", ex_ante_ranking},
        {"ex-post ranking after prior-by-prior updating", ex_post_ranking},
        {"dynamic consistency violation detected and removed by the hull", dc_detection},
        {"maxmin values and membership for the rectangular hull", hull_values},
        {"ranking reversal on the rectangular hull", reversal},
        {"rectangular hull properties on random instances", [&] { return hull_properties(family); }},
        {"recursive maxmin equals maxmin on the hull", [&] { return recursive_decomposition(family); }},
        {"maxmin completes unanimity", [&] { return gmms(family); }},
        {"coherence and prudence conditions", [&] { return coherence_prudence(family); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Check result;
        try {
            result = criteria[i].second();
        } catch (const std::exception& e) {
            result.expect(false, std::string("exception: ") + e.what());
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        std::cout << (result.ok() ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << " ("
                  << result.summary() << ", " << ms << " ms)\n";
        if (!result.ok()) ++failed;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
