#include "tourney/uniqueness.hpp"

#include <string>

namespace tourney {

NotUniqueError::NotUniqueError(int position)
    : std::invalid_argument(
          "minimum-upset tournament is not unique; normalized vector stops "
          "decomposing at entry " +
          std::to_string(position)),
      position_(position) {}

NormalizedVector Decomposition::expand() const {
    std::vector<int> v;
    for (const auto& item : items) {
        if (const auto* z = std::get_if<ZeroRun>(&item)) {
            v.insert(v.end(), z->length, 0);
        } else {
            const auto& s = std::get<Segment>(item);
            for (int e = s.peak; e >= 1; --e) v.push_back(e);
            v.insert(v.end(), s.middle_zeros, 0);
            for (int e = 1; e <= s.peak; ++e) v.push_back(-e);
        }
    }
    return NormalizedVector(std::move(v));
}

// The greedy left-to-right scan is exhaustive: a parse, if one exists, is
// forced at every step. A positive entry can only be the peak of a segment
// (peaks are where descents start), the descent p, p-1, ..., 1 admits no
// variation, every zero after the descent must be an interior zero of that
// segment (the following item cannot open with -1), and the run -1, ..., -p
// admits no variation either. Zeros seen outside a segment likewise have no
// alternative reading. So the first incompatible entry refutes all parses
// and no backtracking is ever needed.
DecomposeResult decompose(const NormalizedVector& h) {
    const auto& v = h.values();
    const int n = h.size();
    std::vector<DecompositionItem> items;
    int pos = 0;
    while (pos < n) {
        if (v[pos] == 0) {
            int len = 0;
            while (pos < n && v[pos] == 0) {
                ++len;
                ++pos;
            }
            items.emplace_back(ZeroRun{len});
        } else if (v[pos] > 0) {
            const int p = v[pos];
            for (int k = 0; k < p; ++k)
                if (pos + k >= n || v[pos + k] != p - k)
                    return NotDecomposable{pos + k + 1};
            pos += p;
            int zeros = 0;
            while (pos < n && v[pos] == 0) {
                ++zeros;
                ++pos;
            }
            if (zeros == 0) return NotDecomposable{pos + 1};
            for (int k = 0; k < p; ++k)
                if (pos + k >= n || v[pos + k] != -(k + 1))
                    return NotDecomposable{pos + k + 1};
            pos += p;
            items.emplace_back(Segment{p, zeros});
        } else {
            // A negative entry outside a segment has no donor above it.
            return NotDecomposable{pos + 1};
        }
    }
    return Decomposition{std::move(items)};
}

bool is_unique_min(const ScoreSequence& seq) {
    if (auto report = validate_feasible(seq); !report.feasible())
        throw InfeasibleError(report);
    return std::holds_alternative<Decomposition>(decompose(normalize(seq)));
}

FeasibleTuple forced_tuple(const Decomposition& d) {
    FeasibleTuple t;
    int offset = 0;  // entries consumed before the current item
    for (const auto& item : d.items) {
        if (const auto* z = std::get_if<ZeroRun>(&item)) {
            offset += z->length;
            continue;
        }
        const auto& seg = std::get<Segment>(item);
        // Donor s at 1-based position offset + s, receiver r at
        // offset + peak + middle_zeros + r; within a segment the pairing
        // {(s, r) : s <= r} is the only one meeting every multiplicity.
        for (int s = 1; s <= seg.peak; ++s)
            for (int r = s; r <= seg.peak; ++r)
                t.pairs.emplace_back(offset + s,
                                     offset + seg.peak + seg.middle_zeros + r);
        offset += seg.expanded_length();
    }
    t.canonicalize();
    return t;
}

TournamentMatrix unique_min_matrix(const ScoreSequence& seq) {
    if (auto report = validate_feasible(seq); !report.feasible())
        throw InfeasibleError(report);
    DecomposeResult result = decompose(normalize(seq));
    if (const auto* blocked = std::get_if<NotDecomposable>(&result))
        throw NotUniqueError(blocked->position);
    return apply_tuple(seq.size(), forced_tuple(std::get<Decomposition>(result)));
}

}  // namespace tourney
