#include <doctest.h>

#include "tourney/score_sequence.hpp"

#include "golden_matrices.hpp"

using namespace tourney;

namespace {

ScoreSequence seq(std::vector<int> v) { return ScoreSequence(std::move(v)); }

}  // namespace

TEST_SUITE("validate_feasible") {
    TEST_CASE("accepts realizable sequences") {
        CHECK(validate_feasible(seq({0})).feasible());
        CHECK(validate_feasible(seq({0, 1})).feasible());
        CHECK(validate_feasible(seq({0, 1, 2})).feasible());
        CHECK(validate_feasible(seq({1, 1, 1})).feasible());
        CHECK(validate_feasible(seq(golden::kExample1Scores)).feasible());
        CHECK(validate_feasible(seq(golden::kExample2Scores)).feasible());
    }

    TEST_CASE("rejects the empty sequence") {
        const auto r = validate_feasible(seq({}));
        CHECK(r.violation == Violation::EmptySequence);
        CHECK_FALSE(r.feasible());
    }

    TEST_CASE("reports the first decreasing entry") {
        const auto r = validate_feasible(seq({1, 0, 2}));
        CHECK(r.violation == Violation::NotNondecreasing);
        CHECK(r.index == 2);
        CHECK(r.expected == 1);
        CHECK(r.actual == 0);
    }

    TEST_CASE("reports a wrong total") {
        const auto r = validate_feasible(seq({0, 0, 2}));
        CHECK(r.violation == Violation::WrongTotal);
        CHECK(r.index == 3);
        CHECK(r.expected == 3);
        CHECK(r.actual == 2);
    }

    TEST_CASE("reports the first failing prefix") {
        // Total is right but the first two entries cannot both lose so much.
        const auto r = validate_feasible(seq({0, 0, 3}));
        CHECK(r.violation == Violation::PrefixDeficit);
        CHECK(r.index == 2);
        CHECK(r.expected == 1);
        CHECK(r.actual == 0);
    }

    TEST_CASE("checks run in a fixed order") {
        // Monotonicity outranks the total...
        CHECK(validate_feasible(seq({2, 1})).violation == Violation::NotNondecreasing);
        // ...and the total outranks the prefix bounds.
        CHECK(validate_feasible(seq({0, 0, 1, 1})).violation == Violation::WrongTotal);
    }

    TEST_CASE("describe names every violation") {
        CHECK(validate_feasible(seq({0, 1, 2})).describe() == "feasible");
        for (auto v : {seq({}), seq({2, 1}), seq({0, 0, 2}), seq({0, 0, 3})})
            CHECK_FALSE(validate_feasible(v).describe().empty());
    }
}

TEST_SUITE("normalize") {
    TEST_CASE("subtracts the transitive baseline") {
        CHECK(normalize(seq({0, 1, 2})).values() == std::vector<int>{0, 0, 0});
        CHECK(normalize(seq(golden::kExample1Scores)).values() ==
              std::vector<int>{2, 1, 0, -1, -2, 0, 0, 0, 1, 0, -1});
        CHECK(normalize(seq(golden::kExample2Scores)).values() ==
              std::vector<int>{2, 1, 0, -1, -1, 0, 0, 1, 0, -1, -1});
    }

    TEST_CASE("accepts infeasible input") {
        CHECK(normalize(seq({5, 5})).values() == std::vector<int>{5, 4});
    }

    TEST_CASE("denormalize inverts it") {
        for (const auto& r : {std::vector<int>{0}, std::vector<int>{1, 1, 1},
                              golden::kExample1Scores, golden::kExample2Scores})
            CHECK(denormalize(normalize(seq(r))).values() == r);
    }

    TEST_CASE("denormalize rejects non-monotone reconstructions") {
        CHECK_THROWS_AS(denormalize(NormalizedVector({1, -1})), NotMonotoneError);
        try {
            denormalize(NormalizedVector({1, -1}));
        } catch (const NotMonotoneError& e) {
            CHECK(e.index() == 2);
        }
    }
}

TEST_SUITE("min_upsets") {
    TEST_CASE("sums the positive normalized entries") {
        CHECK(min_upsets(seq({0, 1, 2})) == 0);
        CHECK(min_upsets(seq({1, 1, 1})) == 1);
        CHECK(min_upsets(seq(golden::kExample1Scores)) == 4);
        CHECK(min_upsets(seq(golden::kExample2Scores)) == 4);
    }

    TEST_CASE("requires feasibility") {
        CHECK_THROWS_AS(min_upsets(seq({0, 0, 2})), InfeasibleError);
        try {
            min_upsets(seq({0, 0, 2}));
        } catch (const InfeasibleError& e) {
            CHECK(e.report().violation == Violation::WrongTotal);
        }
    }
}

TEST_SUITE("upset_multisets") {
    TEST_CASE("collects indices with multiplicity") {
        const auto m = upset_multisets(seq(golden::kExample1Scores));
        CHECK(m.x_indices ==
              std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {9, 1}});
        CHECK(m.y_indices ==
              std::vector<std::pair<int, int>>{{4, 1}, {5, 2}, {11, 1}});
        CHECK(m.ell == 4);
    }

    TEST_CASE("smallest nontrivial case") {
        const auto m = upset_multisets(seq({1, 1, 1}));
        CHECK(m.x_indices == std::vector<std::pair<int, int>>{{1, 1}});
        CHECK(m.y_indices == std::vector<std::pair<int, int>>{{3, 1}});
        CHECK(m.ell == 1);
    }

    TEST_CASE("transitive sequences have empty multisets") {
        const auto m = upset_multisets(seq({0, 1, 2, 3}));
        CHECK(m.x_indices.empty());
        CHECK(m.y_indices.empty());
        CHECK(m.ell == 0);
    }

    TEST_CASE("requires feasibility") {
        CHECK_THROWS_AS(upset_multisets(seq({})), InfeasibleError);
    }
}
