#include <gtest/gtest.h>

#include "credal/model.hpp"
#include "test_support.hpp"

using namespace credal;
using credal::test::prior;
using credal::test::q;

TEST(StateSpace, RejectsDuplicateAndEmptyLabels) {
    EXPECT_THROW(StateSpace({"R", "R"}), InvalidArgument);
    EXPECT_THROW(StateSpace({"R", ""}), InvalidArgument);
    EXPECT_THROW(StateSpace(std::vector<std::string>{}), InvalidArgument);
    StateSpace s({"R", "B", "G"});
    EXPECT_EQ(s.index_of("G"), 2u);
    EXPECT_THROW(s.index_of("Y"), InvalidArgument);
}

TEST(Partition, ValidatesCover) {
    EXPECT_THROW(Partition(3, {Cell{0}, Cell{1}}), InvalidArgument);        // state 2 uncovered
    EXPECT_THROW(Partition(3, {Cell{0, 1}, Cell{1, 2}}), InvalidArgument);  // overlap
    EXPECT_THROW(Partition(3, {Cell{0, 1, 2}, Cell{}}), InvalidArgument);   // empty cell
    EXPECT_THROW(Partition(2, {Cell{0, 1, 2}}), InvalidArgument);           // out of range
    EXPECT_THROW(Partition(2, {}), InvalidArgument);
    const StateSpace s({"R", "B", "G"});
    const auto p = Partition::from_labels(s, {{"G"}, {"R", "B"}});
    EXPECT_EQ(p.cell_of(0), 1u);
    EXPECT_EQ(cell_name(s, p[1]), "RB");
    EXPECT_EQ(p.quotient(s).labels(), (std::vector<std::string>{"G", "RB"}));
    EXPECT_THROW(Partition::from_labels(s, {{"G", "G"}, {"R", "B"}}), InvalidArgument);
    EXPECT_EQ(cell_name(StateSpace({"low", "high"}), Cell{0, 1}), "low+high");
}

TEST(Prior, Invariants) {
    EXPECT_THROW(prior({"1/3", "1/3"}), InvalidArgument);
    EXPECT_THROW(prior({"-1/3", "4/3"}), InvalidArgument);
    EXPECT_NO_THROW(prior({"1/3", "2/3"}));
    EXPECT_EQ(parse_rational("2/4"), q("1/2"));
    EXPECT_THROW(parse_rational("0.5"), InvalidArgument);
    EXPECT_THROW(parse_rational("1/0"), InvalidArgument);
    EXPECT_THROW(parse_rational("1/-2"), InvalidArgument);
    EXPECT_THROW(parse_rational(""), InvalidArgument);
    EXPECT_EQ(to_string(q("-6/4")), "-3/2");
    EXPECT_EQ(to_string(q("+7")), "7");
}

TEST(BayesUpdate, Examples) {
    const Cell rb{0, 1};
    EXPECT_EQ(bayes_update(prior({"1/3", "0", "2/3"}), rb), prior({"1", "0", "0"}));
    EXPECT_EQ(bayes_update(prior({"1/3", "2/3", "0"}), rb), prior({"1/3", "2/3", "0"}));
    EXPECT_EQ(bayes_update(prior({"1/3", "0", "2/3"}), Cell::full(3)), prior({"1/3", "0", "2/3"}));
    EXPECT_THROW(bayes_update(prior({"1/3", "2/3", "0"}), Cell{2}), ZeroMassConditioning);
    EXPECT_THROW(bayes_update(prior({"1/3", "2/3", "0"}), Cell{5}), DimensionMismatch);
}

TEST(Splice, Examples) {
    const Cell rb{0, 1};
    const UtilityProfile f{10, 0, 10}, g{0, 10, 10};
    EXPECT_EQ(splice(f, g, rb), f);
    EXPECT_EQ(splice(g, f, rb), g);
    const UtilityProfile h{1, 2, 3};
    EXPECT_EQ(splice(h, h, Cell{}), h);
    EXPECT_THROW(splice(f, UtilityProfile{1, 2}, rb), DimensionMismatch);
}

TEST(Mixture, Examples) {
    const UtilityProfile f{10, 0, 10}, g{0, 10, 10};
    EXPECT_EQ(mixture(f, g, 1), f);
    EXPECT_EQ(mixture(f, g, q("1/2")), (UtilityProfile{5, 5, 10}));
    EXPECT_EQ(mixture(UtilityProfile{2, 4, 6}, UtilityProfile{2, 4, 6}, q("1/3")), (UtilityProfile{2, 4, 6}));
    EXPECT_THROW(mixture(f, g, q("3/2")), AlphaOutOfRange);
    EXPECT_THROW(mixture(f, g, q("-1/2")), AlphaOutOfRange);
    EXPECT_THROW(mixture(f, UtilityProfile{1}, 0), DimensionMismatch);
}

TEST(TotalProbability, Examples) {
    const StateSpace s({"R", "B", "G"});
    const auto p = Partition::from_labels(s, {{"G"}, {"R", "B"}});
    // 1/3 (0,0,1) + 2/3 (1,0,0)
    const RationalVector w{q("1/3"), q("2/3")};
    const std::vector<Prior> cond{prior({"0", "0", "1"}), prior({"1", "0", "0"})};
    EXPECT_EQ(total_probability_recompose(w, cond, p), prior({"2/3", "0", "1/3"}));

    const RationalVector degenerate{1, 0};
    const std::vector<Prior> cond2{prior({"0", "0", "1"}), prior({"1/2", "1/2", "0"})};
    EXPECT_EQ(total_probability_recompose(degenerate, cond2, p), prior({"0", "0", "1"}));

    const Prior x = prior({"1/3", "0", "2/3"});
    const std::vector<Prior> parts{bayes_update(x, p[0]), bayes_update(x, p[1])};
    EXPECT_EQ(total_probability_recompose(cell_masses(x, p), parts, p), x);

    const std::vector<Prior> leaking{prior({"1/2", "0", "1/2"}), prior({"1", "0", "0"})};
    EXPECT_THROW(total_probability_recompose(w, leaking, p), SupportViolation);
    const RationalVector unnormalized{q("1/3"), q("1/3")};
    EXPECT_THROW(total_probability_recompose(unnormalized, cond, p), WeightNotNormalized);
}

TEST(ConsequenceTable, MapsLabelsToUtilities) {
    ConsequenceTable t;
    t.add("win", 10);
    t.add("lose", 0);
    EXPECT_TRUE(t.has_zero_outcome());
    EXPECT_THROW(t.add("win", 3), InvalidArgument);
    EXPECT_EQ(t.evaluate({"win", "lose", "win"}), (UtilityProfile{10, 0, 10}));
    EXPECT_THROW(t.evaluate({"draw"}), InvalidArgument);
}

// Randomized properties over small exact priors.
TEST(ModelProperties, UpdateSpliceMixtureRecompose) {
    Rng rng(11);
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t n = 2 + rng.below(5);
        const auto partition = test::random_partition(rng, n, 3);
        const Prior x = random_prior(rng, n, 1, 9);

        std::vector<Prior> parts;
        for (const auto& cell : partition) {
            const Prior u = bayes_update(x, cell);
            Rational inside = 0;
            for (std::size_t s = 0; s < n; ++s) {
                if (!cell.contains(s)) EXPECT_EQ(sgn(u[s]), 0);
                else inside += u[s];
            }
            EXPECT_EQ(inside, 1);
            parts.push_back(u);
        }
        EXPECT_EQ(total_probability_recompose(cell_masses(x, partition), parts, partition), x);

        const auto acts = sample_acts(n, 2, 100 + static_cast<std::uint64_t>(iter));
        const auto& cell = partition[rng.below(partition.size())];
        const auto h = splice(acts[0], acts[1], cell);
        for (std::size_t s = 0; s < n; ++s) EXPECT_EQ(h[s], cell.contains(s) ? acts[0][s] : acts[1][s]);

        const Rational alpha = rng.rational(0, 1, 12);
        const auto m = mixture(acts[0], acts[1], alpha);
        for (std::size_t s = 0; s < n; ++s) EXPECT_EQ(m[s], alpha * acts[0][s] + (1 - alpha) * acts[1][s]);
    }
}
