#pragma once

// Randomized feasible score sequences for the property suites: a random
// decomposable vector gives a feasible base, unit moves that conserve the
// total perturb it off the easy path, and validate_feasible filters the
// wreckage. Deterministic under a fixed seed.

#include <random>
#include <vector>

#include "tourney/score_sequence.hpp"

namespace testgen {

inline std::vector<int> random_decomposable(std::mt19937_64& rng, int n) {
    std::vector<int> v;
    v.reserve(n);
    int rem = n;
    while (rem > 0) {
        if (rem >= 3 && std::uniform_int_distribution<int>(0, 9)(rng) < 6) {
            const int p = std::uniform_int_distribution<int>(1, (rem - 1) / 2)(rng);
            const int t = std::uniform_int_distribution<int>(1, rem - 2 * p)(rng);
            for (int e = p; e >= 1; --e) v.push_back(e);
            v.insert(v.end(), t, 0);
            for (int e = 1; e <= p; ++e) v.push_back(-e);
            rem -= 2 * p + t;
        } else {
            v.push_back(0);
            --rem;
        }
    }
    return v;
}

inline tourney::ScoreSequence random_feasible(std::mt19937_64& rng, int n) {
    const std::vector<int> h = random_decomposable(rng, n);
    std::vector<int> base(n);
    for (int i = 0; i < n; ++i) base[i] = h[i] + i;

    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<int> cand = base;
        const int moves = std::uniform_int_distribution<int>(0, 3)(rng);
        for (int m = 0; m < moves; ++m) {
            --cand[pick(rng)];
            ++cand[pick(rng)];
        }
        tourney::ScoreSequence seq(std::move(cand));
        if (tourney::validate_feasible(seq).feasible()) return seq;
    }
    return tourney::ScoreSequence(std::move(base));
}

}  // namespace testgen
