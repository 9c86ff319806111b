#include "tourney/counting.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace tourney {

namespace {

void require_nonnegative(int n) {
    if (n < 0) throw std::invalid_argument("count is defined for n >= 0");
}

// Table a_0..a_n from the double sum over the final item.
std::vector<BigInt> recurrence_table(int n) {
    std::vector<BigInt> a;
    a.reserve(n + 1);
    a.push_back(1);  // a_0: the empty concatenation
    for (int m = 1; m <= n; ++m) {
        BigInt total = a[m - 1];  // final item is a zero
        for (int p = 1; 2 * p + 1 <= m; ++p)           // final segment peak
            for (int i = 1; 2 * p + i <= m; ++i)       // its interior zeros
                total += a[m - 2 * p - i];
        a.push_back(std::move(total));
    }
    return a;
}

}  // namespace

BigInt count_unique_recurrence(int n) {
    require_nonnegative(n);
    return recurrence_table(n).back();
}

BigInt count_unique_linear(int n) {
    require_nonnegative(n);
    std::vector<BigInt> a = {1, 1, 1, 2, 4};  // a_0..a_4
    if (n <= 4) return a[n];
    for (int m = 5; m <= n; ++m)
        a.push_back(2 * a[m - 1] - a[m - 3] + a[m - 4]);
    return a.back();
}

ClosedFormCount count_unique_closed(int n, double relative_tolerance) {
    if (n < 1) throw std::invalid_argument("closed form is defined for n >= 1");
    using C = std::complex<double>;
    const double s5 = std::sqrt(5.0);
    const double rp = std::sqrt(2.0 * s5 + 3.0);  // spread of the real roots
    const double rm = std::sqrt(2.0 * s5 - 3.0);  // spread of the complex pair

    // Roots of x^4 - 2x^3 + x - 1 and their coefficients, fitted to
    // a_1..a_4 = 1, 1, 2, 4.
    const C lambda[4] = {C((1.0 - rp) / 2.0, 0.0), C((1.0 + rp) / 2.0, 0.0),
                         C(0.5, -rm / 2.0), C(0.5, rm / 2.0)};
    const C coeff[4] = {
        C((s5 + 1.0) / 4.0 * (1.0 / s5 - 1.0 / rp), 0.0),
        C((s5 + 1.0) / 4.0 * (1.0 / s5 + 1.0 / rp), 0.0),
        (s5 - 1.0) / 4.0 * C(1.0 / s5, -1.0 / rm),
        (s5 - 1.0) / 4.0 * C(1.0 / s5, 1.0 / rm),
    };

    C value(0.0, 0.0);
    for (int k = 0; k < 4; ++k)
        value += coeff[k] * std::pow(lambda[k], C(static_cast<double>(n - 1), 0.0));

    ClosedFormCount out;
    out.real_part = value.real();
    out.imag_magnitude = std::abs(value.imag());
    const double nearest = std::round(out.real_part);
    out.residual = std::abs(out.real_part - nearest);
    out.rounded = BigInt(nearest);
    const double scale = std::max(1.0, std::abs(out.real_part));
    out.within_tolerance = out.residual <= relative_tolerance * scale &&
                           out.imag_magnitude <= relative_tolerance * scale;
    return out;
}

std::vector<NormalizedVector> enumerate_unique_normvecs(int n) {
    if (n < 1) throw std::invalid_argument("enumeration is defined for n >= 1");
    // lists[m] = every decomposable vector of length m, built as first item
    // plus a shorter decomposable suffix.
    std::vector<std::vector<std::vector<int>>> lists(n + 1);
    lists[0] = {{}};
    for (int m = 1; m <= n; ++m) {
        auto& out = lists[m];
        for (const auto& suffix : lists[m - 1]) {
            std::vector<int> v;
            v.reserve(m);
            v.push_back(0);
            v.insert(v.end(), suffix.begin(), suffix.end());
            out.push_back(std::move(v));
        }
        for (int p = 1; 2 * p + 1 <= m; ++p) {
            for (int t = 1; 2 * p + t <= m; ++t) {
                for (const auto& suffix : lists[m - 2 * p - t]) {
                    std::vector<int> v;
                    v.reserve(m);
                    for (int e = p; e >= 1; --e) v.push_back(e);
                    v.insert(v.end(), t, 0);
                    for (int e = 1; e <= p; ++e) v.push_back(-e);
                    v.insert(v.end(), suffix.begin(), suffix.end());
                    out.push_back(std::move(v));
                }
            }
        }
    }
    std::sort(lists[n].begin(), lists[n].end());
    std::vector<NormalizedVector> result;
    result.reserve(lists[n].size());
    for (auto& v : lists[n]) result.emplace_back(std::move(v));
    return result;
}

}  // namespace tourney
