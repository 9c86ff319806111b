#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tourney {

// Nondecreasing vector of game wins (r_1, ..., r_n). The wrapper accepts any
// integer contents so that diagnostics can say exactly what is wrong with a
// candidate; validate_feasible() is the gatekeeper for every operation that
// needs a realizable sequence.
class ScoreSequence {
public:
    ScoreSequence() = default;
    explicit ScoreSequence(std::vector<int> scores) : scores_(std::move(scores)) {}

    int size() const { return static_cast<int>(scores_.size()); }
    bool empty() const { return scores_.empty(); }
    const std::vector<int>& values() const { return scores_; }

    friend auto operator<=>(const ScoreSequence&, const ScoreSequence&) = default;

private:
    std::vector<int> scores_;
};

// Deviation of each score from the transitive baseline: h_i = r_i - (i - 1).
// For a feasible sequence this satisfies h_i - h_{i+1} <= 1, h_1 >= 0,
// h_n <= 0, nonnegative prefix sums, and total sum 0.
class NormalizedVector {
public:
    NormalizedVector() = default;
    explicit NormalizedVector(std::vector<int> entries) : entries_(std::move(entries)) {}

    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }
    const std::vector<int>& values() const { return entries_; }

    friend auto operator<=>(const NormalizedVector&, const NormalizedVector&) = default;

private:
    std::vector<int> entries_;
};

enum class Violation {
    None,
    EmptySequence,
    NotNondecreasing,
    WrongTotal,
    PrefixDeficit,
};

// Outcome of validate_feasible. `index` is 1-based: for NotNondecreasing the
// first position whose entry drops below its predecessor, for WrongTotal n,
// for PrefixDeficit the first prefix length k whose Landau inequality
// sum(r_1..r_k) >= C(k,2) fails. `expected`/`actual` carry the two sides of
// the violated relation where one exists.
struct FeasibilityReport {
    Violation violation = Violation::None;
    int index = 0;
    long long expected = 0;
    long long actual = 0;

    bool feasible() const { return violation == Violation::None; }
    std::string describe() const;

    friend bool operator==(const FeasibilityReport&, const FeasibilityReport&) = default;
};

// Thrown by operations whose precondition is a feasible sequence.
class InfeasibleError : public std::invalid_argument {
public:
    explicit InfeasibleError(FeasibilityReport report);
    const FeasibilityReport& report() const { return report_; }

private:
    FeasibilityReport report_;
};

// Thrown by denormalize when the reconstructed sequence is not nondecreasing.
class NotMonotoneError : public std::invalid_argument {
public:
    explicit NotMonotoneError(int index);
    // 1-based position of the first entry below its predecessor.
    int index() const { return index_; }

private:
    int index_;
};

// Positive and negative entries of a normalized vector as (1-based index,
// multiplicity) lists; `ell` is the shared total multiplicity, the minimum
// number of upsets.
struct UpsetMultisets {
    std::vector<std::pair<int, int>> x_indices;
    std::vector<std::pair<int, int>> y_indices;
    int ell = 0;

    friend bool operator==(const UpsetMultisets&, const UpsetMultisets&) = default;
};

// Checks, in order: nonempty, nondecreasing, total sum = C(n,2), Landau
// prefix inequalities. Reports the first violated condition.
FeasibilityReport validate_feasible(const ScoreSequence& seq);

// h_i = r_i - (i - 1). Accepts infeasible input; candidate generators rely
// on that and filter afterwards.
NormalizedVector normalize(const ScoreSequence& seq);

// Inverse of normalize: r_i = h_i + (i - 1). Throws NotMonotoneError when
// the result is not nondecreasing.
ScoreSequence denormalize(const NormalizedVector& h);

// Minimum number of upsets over all tournaments with score sequence `seq`:
// the sum of the positive normalized entries. Throws InfeasibleError.
int min_upsets(const ScoreSequence& seq);

// Throws InfeasibleError.
UpsetMultisets upset_multisets(const ScoreSequence& seq);

std::ostream& operator<<(std::ostream& os, const ScoreSequence& seq);
std::ostream& operator<<(std::ostream& os, const NormalizedVector& h);

}  // namespace tourney
