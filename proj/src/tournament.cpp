#include "tourney/tournament.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace tourney {

TournamentMatrix::TournamentMatrix(int n)
    : n_(n), cells_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 1) throw std::invalid_argument("matrix order must be at least 1");
}

TournamentMatrix TournamentMatrix::from_rows(const std::vector<std::string>& rows) {
    const int n = static_cast<int>(rows.size());
    TournamentMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("matrix rows must form a square grid");
        for (int j = 0; j < n; ++j) {
            const char c = rows[i][j];
            if (c != '0' && c != '1')
                throw std::invalid_argument("matrix entries must be '0' or '1'");
            m.cells_[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint8_t>(c - '0');
        }
    }
    for (int i = 0; i < n; ++i) {
        if (m.entry(i, i) != 0)
            throw std::invalid_argument("matrix diagonal must be zero");
        for (int j = i + 1; j < n; ++j)
            if (m.entry(i, j) + m.entry(j, i) != 1)
                throw std::invalid_argument("each game needs exactly one winner");
    }
    return m;
}

void TournamentMatrix::set_winner(int row, int col) {
    if (row == col) throw std::invalid_argument("a player cannot play itself");
    cells_[static_cast<std::size_t>(row) * n_ + col] = 1;
    cells_[static_cast<std::size_t>(col) * n_ + row] = 0;
}

std::vector<std::string> TournamentMatrix::to_rows() const {
    std::vector<std::string> rows(n_);
    for (int i = 0; i < n_; ++i) {
        rows[i].resize(n_);
        for (int j = 0; j < n_; ++j)
            rows[i][j] = static_cast<char>('0' + entry(i, j));
    }
    return rows;
}

void FeasibleTuple::canonicalize() { std::sort(pairs.begin(), pairs.end()); }

TournamentMatrix transitive_base(int n) {
    TournamentMatrix m(n);
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) m.set_winner(i, j);
    return m;
}

TournamentMatrix apply_tuple(int n, const FeasibleTuple& t) {
    auto pairs = t.pairs;
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
        throw std::invalid_argument("tuple contains a duplicate pair");
    TournamentMatrix m = transitive_base(n);
    for (const auto& [i, j] : pairs) {
        if (i < 1 || j > n || i >= j)
            throw std::invalid_argument("tuple pairs must satisfy 1 <= i < j <= n");
        m.set_winner(i - 1, j - 1);
    }
    return m;
}

int count_upsets(const TournamentMatrix& m) {
    int upsets = 0;
    for (int i = 0; i < m.order(); ++i)
        for (int j = i + 1; j < m.order(); ++j) upsets += m.entry(i, j);
    return upsets;
}

std::vector<int> row_sums(const TournamentMatrix& m) {
    std::vector<int> sums(m.order(), 0);
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j) sums[i] += m.entry(i, j);
    return sums;
}

bool tuple_matches(const FeasibleTuple& t, const NormalizedVector& h) {
    const int n = h.size();
    auto pairs = t.pairs;
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) return false;
    std::vector<int> left(n + 1, 0), right(n + 1, 0);
    for (const auto& [i, j] : pairs) {
        if (i < 1 || j > n || i >= j) return false;
        ++left[i];
        ++right[j];
    }
    for (int k = 1; k <= n; ++k) {
        const int e = h.values()[k - 1];
        if (left[k] != std::max(e, 0)) return false;
        if (right[k] != std::max(-e, 0)) return false;
    }
    return true;
}

namespace {

// Backtracking assignment of upset partners. Each position j with demand
// d_j = -h_j must receive d_j distinct partners i < j drawn from positions
// with h_i > 0, where position i can serve in at most h_i pairs overall.
//
// Demands are filled from the largest j downward: the highest position sees
// every donor, so its choices are the least constrained and the chains they
// force resolve immediately below. Filling from the smallest j instead looks
// equivalent but backtracks explosively on near-regular sequences, where
// every donor choice at the bottom collides high above.
class TupleSearch {
public:
    TupleSearch(const UpsetMultisets& m, std::size_t limit)
        : ys_(m.y_indices), limit_(limit) {
        xpos_.reserve(m.x_indices.size());
        xcap_.reserve(m.x_indices.size());
        for (const auto& [pos, cap] : m.x_indices) {
            xpos_.push_back(pos);
            xcap_.push_back(cap);
        }
    }

    std::vector<FeasibleTuple> run() {
        if (satisfiable(static_cast<int>(ys_.size())))
            descend(static_cast<int>(ys_.size()) - 1);
        for (auto& t : results_) t.canonicalize();
        std::sort(results_.begin(), results_.end());
        return std::move(results_);
    }

private:
    // Necessary conditions on the still-unfilled prefix ys_[0..count): the
    // running demand cannot exceed the donor units below each position, and
    // no single demand can exceed the distinct donors below it.
    bool satisfiable(int count) const {
        long long need = 0;
        for (int t = 0; t < count; ++t) {
            const auto& [j, d] = ys_[t];
            need += d;
            long long units = 0;
            int distinct = 0;
            for (std::size_t s = 0; s < xpos_.size() && xpos_[s] < j; ++s) {
                units += xcap_[s];
                distinct += xcap_[s] > 0;
            }
            if (units < need || distinct < d) return false;
        }
        return true;
    }

    void descend(int y) {
        if (results_.size() >= limit_) return;
        if (y < 0) {
            results_.push_back(FeasibleTuple{chosen_});
            return;
        }
        pick(y, ys_[y].second, 0);
    }

    // Chooses `remaining` distinct partners for ys_[y], scanning donor slots
    // from `from` upward so each combination is produced once.
    void pick(int y, int remaining, std::size_t from) {
        if (results_.size() >= limit_) return;
        if (remaining == 0) {
            if (satisfiable(y)) descend(y - 1);
            return;
        }
        const int j = ys_[y].first;
        for (std::size_t s = from; s < xpos_.size() && xpos_[s] < j; ++s) {
            if (xcap_[s] == 0) continue;
            --xcap_[s];
            chosen_.emplace_back(xpos_[s], j);
            pick(y, remaining - 1, s + 1);
            chosen_.pop_back();
            ++xcap_[s];
        }
    }

    std::vector<std::pair<int, int>> ys_;
    std::vector<int> xpos_;
    std::vector<int> xcap_;
    std::vector<std::pair<int, int>> chosen_;
    std::vector<FeasibleTuple> results_;
    std::size_t limit_;
};

}  // namespace

std::vector<FeasibleTuple> enumerate_feasible_tuples(const ScoreSequence& seq,
                                                     std::size_t limit) {
    const UpsetMultisets m = upset_multisets(seq);  // throws InfeasibleError
    return TupleSearch(m, limit).run();
}

std::vector<TournamentMatrix> enumerate_min_upset_matrices(const ScoreSequence& seq) {
    const int n = seq.size();
    std::vector<TournamentMatrix> matrices;
    for (const auto& t : enumerate_feasible_tuples(seq))
        matrices.push_back(apply_tuple(n, t));
    return matrices;
}

std::ostream& operator<<(std::ostream& os, const FeasibleTuple& t) {
    os << '{';
    for (std::size_t k = 0; k < t.pairs.size(); ++k) {
        if (k > 0) os << ", ";
        os << '(' << t.pairs[k].first << ", " << t.pairs[k].second << ')';
    }
    return os << '}';
}

}  // namespace tourney
