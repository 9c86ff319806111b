#pragma once

#include <string>
#include <vector>

#include "tourney/score_sequence.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

// Everything the exhaustive sweep learned about one score sequence.
struct CensusEntry {
    ScoreSequence sequence;
    int min_upsets = 0;
    long long minimizer_count = 0;
    // The minimum-upset matrices themselves, in increasing bitmask order.
    // Retained only for order <= 6; empty for order 7, where 2^21 matrices
    // make retention pointless and counts are all the checks need.
    std::vector<TournamentMatrix> minimizers;
};

// Walks all 2^C(n,2) tournaments on n players, grouped by sorted score
// sequence. Entries are sorted by sequence. Requires 1 <= n <= 7.
std::vector<CensusEntry> brute_force_census(int n);

// All feasible score sequences of length n in lexicographic order, built by
// backtracking with the Landau bounds, independent of the census. n >= 1.
std::vector<ScoreSequence> enumerate_feasible_sequences(int n);

struct VerificationCheck {
    std::string name;
    bool passed = true;
    std::string counterexample;  // empty when passed

    friend bool operator==(const VerificationCheck&, const VerificationCheck&) = default;
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;

    bool all_passed() const;
};

// Cross-checks the fast paths against brute force for every feasible
// sequence of length n:
//   n <= 6  census keys, minimum upsets, full matrix sets, counts,
//           uniqueness decisions, and tuple invariants
//   n == 7  the same with matrix sets replaced by counts
//   8..10   census-free: tuple invariants, distinctness of the constructed
//           matrices, and uniqueness against tuple counts
// Requires 1 <= n <= 10.
VerificationReport verify_theorems(int n);

// Checks, for each n = 1..n_max, that the counting recurrence equals both
// the direct census of unique minimizers among enumerate_feasible_sequences
// and the other two counting paths. Requires 1 <= n_max <= 12.
VerificationReport verify_count(int n_max);

// The Brualdi-Li pattern: k copies of k, then the run k, k+1, ..., n-k-1,
// then k copies of n-k-1. Feasible with a unique minimizer whenever k > 1
// and 2k + 1 < n.
ScoreSequence brualdi_li_sequence(int n, int k);

// Everyone wins (n-1)/2 games for odd n; for even n, half the players win
// n/2 - 1 and half win n/2. Normalizes to a single segment of maximal peak,
// the worst case for a wrongly ordered tuple search.
ScoreSequence near_regular_sequence(int n);

// Checks both families for every valid parameter up to n_max: each sequence
// must be feasible, decompose, and yield exactly one tuple, which must equal
// the forced tuple and rebuild a matrix with the original row sums.
VerificationReport verify_families(int n_max);

}  // namespace tourney
