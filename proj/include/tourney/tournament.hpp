#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "tourney/score_sequence.hpp"

namespace tourney {

// 0/1 adjacency matrix of a round robin: entry(i, j) == 1 means player i
// beat player j, so A + A^T = J - I. Rows and columns are 0-based here;
// the 1-based convention is confined to tuples and reports.
class TournamentMatrix {
public:
    explicit TournamentMatrix(int n);

    // Parses rows of '0'/'1' characters. Throws std::invalid_argument unless
    // the grid is square with a zero diagonal and complementary off-diagonal.
    static TournamentMatrix from_rows(const std::vector<std::string>& rows);

    int order() const { return n_; }
    int entry(int row, int col) const { return cells_[static_cast<std::size_t>(row) * n_ + col]; }

    // Records row beating col (and col losing to row). row != col.
    void set_winner(int row, int col);

    std::vector<std::string> to_rows() const;

    friend auto operator<=>(const TournamentMatrix&, const TournamentMatrix&) = default;

private:
    int n_ = 0;
    std::vector<std::uint8_t> cells_;
};

// Set of games won by lower-ranked players: 1-based pairs (i, j) with i < j
// where player i beats player j on top of the transitive baseline. Canonical
// form is lexicographically sorted.
struct FeasibleTuple {
    std::vector<std::pair<int, int>> pairs;

    void canonicalize();

    friend auto operator<=>(const FeasibleTuple&, const FeasibleTuple&) = default;
};

// Baseline tournament where every player beats exactly the lower-indexed
// players: strictly lower triangle of ones, scores (0, 1, ..., n-1).
TournamentMatrix transitive_base(int n);

// Transitive baseline with each pair (i, j) of `t` flipped so that i beats j.
// Throws std::invalid_argument on a duplicate pair or unless 1 <= i < j <= n.
TournamentMatrix apply_tuple(int n, const FeasibleTuple& t);

// Number of ones above the diagonal.
int count_upsets(const TournamentMatrix& m);

std::vector<int> row_sums(const TournamentMatrix& m);

// True when the pairs of `t` are exactly the upset obligations of h: each
// index i with h_i > 0 appears h_i times on the left, each j with h_j < 0
// appears -h_j times on the right, nothing else appears, and all pairs are
// distinct with i < j.
bool tuple_matches(const FeasibleTuple& t, const NormalizedVector& h);

// All feasible tuples for `seq` in canonical order; applying each to the
// transitive baseline yields exactly the minimum-upset tournaments, without
// repetition. Throws InfeasibleError. `limit` caps the search for callers
// that only probe; a truncated result is still sorted but is an arbitrary
// subset, so pass the default when completeness matters.
std::vector<FeasibleTuple> enumerate_feasible_tuples(
    const ScoreSequence& seq,
    std::size_t limit = std::numeric_limits<std::size_t>::max());

// Convenience: apply_tuple over enumerate_feasible_tuples, same order.
std::vector<TournamentMatrix> enumerate_min_upset_matrices(const ScoreSequence& seq);

std::ostream& operator<<(std::ostream& os, const FeasibleTuple& t);

}  // namespace tourney
