#pragma once

#include <stdexcept>
#include <variant>
#include <vector>

#include "tourney/score_sequence.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

// Maximal stretch of zero entries sitting between segments (or at either end).
struct ZeroRun {
    int length = 0;  // >= 1

    friend bool operator==(const ZeroRun&, const ZeroRun&) = default;
};

// Symmetric stretch (p, p-1, ..., 1, 0^t, -1, -2, ..., -p) with peak p >= 1
// and t >= 1 interior zeros.
struct Segment {
    int peak = 0;
    int middle_zeros = 0;

    int expanded_length() const { return 2 * peak + middle_zeros; }

    friend bool operator==(const Segment&, const Segment&) = default;
};

using DecompositionItem = std::variant<ZeroRun, Segment>;

// Parse of a normalized vector as a concatenation of zero runs and symmetric
// segments; expand() reproduces the vector entry for entry.
struct Decomposition {
    std::vector<DecompositionItem> items;

    NormalizedVector expand() const;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// `position` is the 1-based entry where the scan found a value incompatible
// with any parse; it is n + 1 when the vector ended with a segment still
// owing entries.
struct NotDecomposable {
    int position = 0;

    friend bool operator==(const NotDecomposable&, const NotDecomposable&) = default;
};

using DecomposeResult = std::variant<Decomposition, NotDecomposable>;

// Thrown by unique_min_matrix when the minimizer is not unique.
class NotUniqueError : public std::invalid_argument {
public:
    explicit NotUniqueError(int position);
    // Position reported by the failed decomposition.
    int position() const { return position_; }

private:
    int position_;
};

// Attempts the unique parse of h into zero runs and symmetric segments.
DecomposeResult decompose(const NormalizedVector& h);

// Whether exactly one tournament attains the minimum number of upsets:
// equivalent to the normalized vector being decomposable. Throws
// InfeasibleError.
bool is_unique_min(const ScoreSequence& seq);

// The single feasible tuple of a decomposable vector: within each segment,
// donor s is paired with every receiver r >= s.
FeasibleTuple forced_tuple(const Decomposition& d);

// The one minimum-upset tournament of a uniquely-minimized sequence. Throws
// InfeasibleError or NotUniqueError.
TournamentMatrix unique_min_matrix(const ScoreSequence& seq);

}  // namespace tourney
