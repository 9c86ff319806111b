#include "tourney/score_sequence.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

namespace tourney {

namespace {

long long choose2(long long k) { return k * (k - 1) / 2; }

std::string describe_report(const FeasibilityReport& r) {
    std::ostringstream os;
    switch (r.violation) {
        case Violation::None:
            os << "feasible";
            break;
        case Violation::EmptySequence:
            os << "sequence is empty";
            break;
        case Violation::NotNondecreasing:
            os << "entry " << r.index << " is " << r.actual
               << ", below its predecessor " << r.expected;
            break;
        case Violation::WrongTotal:
            os << "total is " << r.actual << " but a sequence of length "
               << r.index << " must sum to " << r.expected;
            break;
        case Violation::PrefixDeficit:
            os << "first " << r.index << " entries sum to " << r.actual
               << ", below the required " << r.expected;
            break;
    }
    return os.str();
}

}  // namespace

std::string FeasibilityReport::describe() const { return describe_report(*this); }

InfeasibleError::InfeasibleError(FeasibilityReport report)
    : std::invalid_argument("infeasible score sequence: " + report.describe()),
      report_(std::move(report)) {}

NotMonotoneError::NotMonotoneError(int index)
    : std::invalid_argument("denormalized sequence decreases at entry " +
                            std::to_string(index)),
      index_(index) {}

FeasibilityReport validate_feasible(const ScoreSequence& seq) {
    const auto& r = seq.values();
    const int n = seq.size();
    if (n == 0) return {Violation::EmptySequence, 0, 0, 0};
    for (int i = 1; i < n; ++i) {
        if (r[i] < r[i - 1])
            return {Violation::NotNondecreasing, i + 1, r[i - 1], r[i]};
    }
    const long long total = std::accumulate(r.begin(), r.end(), 0LL);
    if (total != choose2(n)) return {Violation::WrongTotal, n, choose2(n), total};
    long long prefix = 0;
    for (int k = 1; k < n; ++k) {
        prefix += r[k - 1];
        if (prefix < choose2(k))
            return {Violation::PrefixDeficit, k, choose2(k), prefix};
    }
    return {};
}

NormalizedVector normalize(const ScoreSequence& seq) {
    const auto& r = seq.values();
    std::vector<int> h(r.size());
    for (int i = 0; i < seq.size(); ++i) h[i] = r[i] - i;
    return NormalizedVector(std::move(h));
}

ScoreSequence denormalize(const NormalizedVector& h) {
    const auto& v = h.values();
    std::vector<int> r(v.size());
    for (int i = 0; i < h.size(); ++i) {
        r[i] = v[i] + i;
        if (i > 0 && r[i] < r[i - 1]) throw NotMonotoneError(i + 1);
    }
    return ScoreSequence(std::move(r));
}

int min_upsets(const ScoreSequence& seq) {
    if (auto report = validate_feasible(seq); !report.feasible())
        throw InfeasibleError(report);
    int ell = 0;
    const NormalizedVector h = normalize(seq);
    for (int e : h.values())
        if (e > 0) ell += e;
    return ell;
}

UpsetMultisets upset_multisets(const ScoreSequence& seq) {
    if (auto report = validate_feasible(seq); !report.feasible())
        throw InfeasibleError(report);
    UpsetMultisets m;
    const NormalizedVector norm = normalize(seq);
    const auto& h = norm.values();
    for (int i = 0; i < static_cast<int>(h.size()); ++i) {
        if (h[i] > 0) m.x_indices.emplace_back(i + 1, h[i]);
        if (h[i] < 0) m.y_indices.emplace_back(i + 1, -h[i]);
    }
    for (const auto& [i, mult] : m.x_indices) m.ell += mult;
    return m;
}

namespace {

std::ostream& print_csv(std::ostream& os, const std::vector<int>& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) os << ", ";
        os << v[i];
    }
    return os << ')';
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const ScoreSequence& seq) {
    return print_csv(os, seq.values());
}

std::ostream& operator<<(std::ostream& os, const NormalizedVector& h) {
    return print_csv(os, h.values());
}

}  // namespace tourney
