#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "tourney/score_sequence.hpp"

namespace tourney {

using BigInt = boost::multiprecision::cpp_int;

// a_n = number of feasible score sequences of length n whose minimum-upset
// tournament is unique, i.e. the number of decomposable normalized vectors
// of length n. a_0 = 1 by convention (the empty concatenation).
//
// Counted by summing over the final item of the concatenation: a trailing
// zero extends any shorter vector, and a trailing segment with peak p and
// i interior zeros consumes 2p + i entries.
BigInt count_unique_recurrence(int n);

// Same quantity via the order-4 linear recurrence
// a_n = 2 a_{n-1} - a_{n-3} + a_{n-4} for n >= 5.
BigInt count_unique_linear(int n);

// Same quantity via the spectral closed form: with x_1..x_4 the roots of
// x^4 - 2x^3 + x - 1 = 0, a_n = sum_k c_k x_k^(n-1). Two roots are real and
// two form a conjugate pair, so the evaluation runs in complex doubles; the
// imaginary parts must cancel and the real part must sit near an integer.
struct ClosedFormCount {
    double real_part = 0.0;
    double imag_magnitude = 0.0;  // residue of the conjugate cancellation
    BigInt rounded;
    double residual = 0.0;  // |real_part - rounded|
    bool within_tolerance = false;
};

// `relative_tolerance` bounds both residual and imag_magnitude against
// max(1, |real_part|). Requires n >= 1.
ClosedFormCount count_unique_closed(int n, double relative_tolerance = 1e-6);

// All decomposable normalized vectors of length n in lexicographic order;
// the list has exactly count_unique_recurrence(n) entries. Requires n >= 1.
// Memory grows with the count, so this is for small n (the count near
// doubles with each increment).
std::vector<NormalizedVector> enumerate_unique_normvecs(int n);

}  // namespace tourney
