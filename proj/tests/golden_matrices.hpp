#pragma once

// Hand-checked fixtures for the two 11-player worked examples: the unique
// minimum-upset tournament of R1 and all six minimum-upset tournaments of
// R2. Row i is the beats-vector of player i.

#include <array>
#include <string_view>
#include <vector>

namespace golden {

inline const std::vector<int> kExample1Scores = {2, 2, 2, 2, 2, 5, 6, 7, 9, 9, 9};
inline const std::vector<int> kExample2Scores = {2, 2, 2, 2, 3, 5, 6, 8, 8, 8, 9};

inline constexpr std::array<std::string_view, 11> kExample1Matrix = {
    "00011000000",
    "10001000000",
    "11000000000",
    "01100000000",
    "00110000000",
    "11111000000",
    "11111100000",
    "11111110000",
    "11111111001",
    "11111111100",
    "11111111010",
};

inline constexpr std::array<std::string_view, 11> kExample2Matrix1 = {
    "00011000000",
    "10000000010",
    "11000000000",
    "01100000000",
    "01110000000",
    "11111000000",
    "11111100000",
    "11111110001",
    "11111111000",
    "10111111100",
    "11111110110",
};

inline constexpr std::array<std::string_view, 11> kExample2Matrix2 = {
    "00011000000",
    "10000000001",
    "11000000000",
    "01100000000",
    "01110000000",
    "11111000000",
    "11111100000",
    "11111110010",
    "11111111000",
    "11111110100",
    "10111111110",
};

inline constexpr std::array<std::string_view, 11> kExample2Matrix3 = {
    "00001000010",
    "10010000000",
    "11000000000",
    "10100000000",
    "01110000000",
    "11111000000",
    "11111100000",
    "11111110001",
    "11111111000",
    "01111111100",
    "11111110110",
};

inline constexpr std::array<std::string_view, 11> kExample2Matrix4 = {
    "00001000001",
    "10010000000",
    "11000000000",
    "10100000000",
    "01110000000",
    "11111000000",
    "11111100000",
    "11111110010",
    "11111111000",
    "11111110100",
    "01111111110",
};

inline constexpr std::array<std::string_view, 11> kExample2Matrix5 = {
    "00010000010",
    "10001000000",
    "11000000000",
    "01100000000",
    "10110000000",
    "11111000000",
    "11111100000",
    "11111110001",
    "11111111000",
    "01111111100",
    "11111110110",
};

inline constexpr std::array<std::string_view, 11> kExample2Matrix6 = {
    "00010000001",
    "10001000000",
    "11000000000",
    "01100000000",
    "10110000000",
    "11111000000",
    "11111100000",
    "11111110010",
    "11111111000",
    "11111110100",
    "01111111110",
};

inline std::vector<std::string> rows_of(const std::array<std::string_view, 11>& m) {
    return std::vector<std::string>(m.begin(), m.end());
}

inline std::vector<std::vector<std::string>> example2_matrices() {
    return {rows_of(kExample2Matrix1), rows_of(kExample2Matrix2),
            rows_of(kExample2Matrix3), rows_of(kExample2Matrix4),
            rows_of(kExample2Matrix5), rows_of(kExample2Matrix6)};
}

}  // namespace golden
