// Walks through the three-colour urn: maxmin ranks g above f ex ante, but
// given "red or blue" it ranks f above g. Replacing the priors by their
// rectangular hull removes the reversal.

#include <iostream>

#include "credal/audit.hpp"
#include "credal/rectangular.hpp"

int main() {
    using namespace credal;

    const StateSpace space({"R", "B", "G"});
    const auto partition = Partition::from_labels(space, {{"G"}, {"R", "B"}});
    const CredalSet priors(space, {Prior{Rational(1, 3), 0, Rational(2, 3)}, Prior{Rational(1, 3), Rational(2, 3), 0}});
    const UtilityProfile f{10, 0, 10}, g{0, 10, 10};
    const auto mode = UpdateMode::Lenient;

    std::cout << "ex ante:        f " << to_string(maxmin_value(priors, f)) << ", g " << to_string(maxmin_value(priors, g))
              << "\n";
    const auto given_rb = update_set(priors, partition[1], mode);
    std::cout << "given R or B:   f " << to_string(maxmin_value(given_rb, f)) << ", g "
              << to_string(maxmin_value(given_rb, g)) << "\n";

    const auto hull = rectangular_hull(priors, partition, mode);
    std::cout << "rectangular hull:\n";
    for (const auto& v : hull.vertices()) std::cout << "  " << to_string(v) << "\n";
    std::cout << "after hull:     f " << to_string(maxmin_value(hull, f)) << ", g " << to_string(maxmin_value(hull, g))
              << "\n";

    const AuditOptions opt{mode};
    const auto before = dynamic_consistency_audit(priors, partition, Rule::Maxmin, {{"f", f}, {"g", g}}, opt);
    const auto after = dynamic_consistency_audit(hull, partition, Rule::Maxmin, {{"f", f}, {"g", g}}, opt);
    std::cout << "dynamic consistency violations: " << before.violations.size() << " before, "
              << after.violations.size() << " after\n";
    return 0;
}
