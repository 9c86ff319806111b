#include <doctest.h>

#include <algorithm>

#include "tourney/oracle.hpp"
#include "tourney/uniqueness.hpp"

using namespace tourney;

TEST_SUITE("enumerate_feasible_sequences") {
    TEST_CASE("small lengths in full") {
        CHECK(enumerate_feasible_sequences(1) ==
              std::vector<ScoreSequence>{ScoreSequence({0})});
        CHECK(enumerate_feasible_sequences(4) ==
              std::vector<ScoreSequence>{
                  ScoreSequence({0, 1, 2, 3}), ScoreSequence({0, 2, 2, 2}),
                  ScoreSequence({1, 1, 1, 3}), ScoreSequence({1, 1, 2, 2})});
    }

    TEST_CASE("counts match the known table") {
        const std::vector<std::size_t> expected = {1,   1,   2,   4,   9,
                                                   22,  59,  167, 490, 1486};
        for (std::size_t n = 1; n <= expected.size(); ++n)
            CHECK(enumerate_feasible_sequences(static_cast<int>(n)).size() ==
                  expected[n - 1]);
    }

    TEST_CASE("every entry is feasible, ordered, distinct") {
        for (int n = 1; n <= 8; ++n) {
            const auto seqs = enumerate_feasible_sequences(n);
            CHECK(std::is_sorted(seqs.begin(), seqs.end()));
            CHECK(std::adjacent_find(seqs.begin(), seqs.end()) == seqs.end());
            for (const auto& seq : seqs) CHECK(validate_feasible(seq).feasible());
        }
    }
}

TEST_SUITE("brute_force_census") {
    TEST_CASE("three players") {
        const auto census = brute_force_census(3);
        REQUIRE(census.size() == 2);
        CHECK(census[0].sequence == ScoreSequence({0, 1, 2}));
        CHECK(census[0].min_upsets == 0);
        CHECK(census[0].minimizer_count == 1);
        CHECK(census[1].sequence == ScoreSequence({1, 1, 1}));
        CHECK(census[1].min_upsets == 1);
        CHECK(census[1].minimizer_count == 1);
        REQUIRE(census[1].minimizers.size() == 1);
        CHECK(census[1].minimizers[0].to_rows() ==
              std::vector<std::string>{"001", "100", "010"});
    }

    TEST_CASE("four players") {
        const auto census = brute_force_census(4);
        REQUIRE(census.size() == 4);
        for (const auto& e : census) {
            CHECK(e.min_upsets == (e.sequence == ScoreSequence({0, 1, 2, 3}) ? 0 : 1));
            CHECK(e.minimizer_count == 1);
        }
    }

    TEST_CASE("retained minimizers carry the right sums and counts") {
        for (int n = 2; n <= 6; ++n)
            for (const auto& e : brute_force_census(n)) {
                CHECK(static_cast<long long>(e.minimizers.size()) ==
                      e.minimizer_count);
                for (const auto& m : e.minimizers) {
                    CHECK(row_sums(m) == e.sequence.values());
                    CHECK(count_upsets(m) == e.min_upsets);
                }
            }
    }

    TEST_CASE("order bounds") {
        CHECK_THROWS_AS(brute_force_census(0), std::out_of_range);
        CHECK_THROWS_AS(brute_force_census(8), std::out_of_range);
    }
}

TEST_SUITE("verification sweeps") {
    TEST_CASE("theorem checks pass through order six") {
        for (int n = 1; n <= 6; ++n) {
            const auto report = verify_theorems(n);
            for (const auto& check : report.checks) {
                INFO(check.name, ": ", check.counterexample);
                CHECK(check.passed);
            }
        }
    }

    TEST_CASE("census-free checks pass at order eight") {
        CHECK(verify_theorems(8).all_passed());
    }

    TEST_CASE("count census agrees with the recurrence") {
        CHECK(verify_count(8).all_passed());
    }

    TEST_CASE("bounds") {
        CHECK_THROWS_AS(verify_theorems(11), std::out_of_range);
        CHECK_THROWS_AS(verify_count(13), std::out_of_range);
    }
}

TEST_SUITE("families") {
    TEST_CASE("shapes") {
        CHECK(brualdi_li_sequence(11, 2).values() ==
              std::vector<int>{2, 2, 2, 3, 4, 5, 6, 7, 8, 8, 8});
        CHECK(near_regular_sequence(7).values() ==
              std::vector<int>{3, 3, 3, 3, 3, 3, 3});
        CHECK(near_regular_sequence(6).values() ==
              std::vector<int>{2, 2, 2, 3, 3, 3});
        CHECK(near_regular_sequence(1).values() == std::vector<int>{0});
        CHECK_THROWS_AS(brualdi_li_sequence(4, 2), std::invalid_argument);
    }

    TEST_CASE("members are uniquely minimized") {
        CHECK(is_unique_min(brualdi_li_sequence(12, 3)));
        CHECK(is_unique_min(near_regular_sequence(12)));
        CHECK(enumerate_feasible_tuples(near_regular_sequence(12)).size() == 1);
    }

    TEST_CASE("family sweep passes") {
        CHECK(verify_families(16).all_passed());
    }
}
