#pragma once

// Values transcribed from the published table of a_{n,N} and the worked examples.

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace shiftpat::reference {

// (n, N) -> a_{n,N} for 2 <= n <= 8.
inline const std::map<std::pair<int, int>, long long> kTable1 = {
    {{2, 2}, 2},
    {{3, 2}, 6},
    {{4, 2}, 18},   {{4, 3}, 6},
    {{5, 2}, 48},   {{5, 3}, 66},    {{5, 4}, 6},
    {{6, 2}, 126},  {{6, 3}, 402},   {{6, 4}, 186},   {{6, 5}, 6},
    {{7, 2}, 306},  {{7, 3}, 2028},  {{7, 4}, 2232},  {{7, 5}, 468},   {{7, 6}, 6},
    {{8, 2}, 738},  {{8, 3}, 8790},  {{8, 4}, 19426}, {{8, 5}, 10212}, {{8, 6}, 1098}, {{8, 7}, 6},
};

// Cells where the printed table disagrees with every method here. The printed
// 19426 leaves row 8 summing to 40270 instead of 8! = 40320; the closed form,
// the sweep over S_8 and the word oracle all give 19476.
inline const std::map<std::pair<int, int>, long long> kTable1Corrections = {
    {{8, 4}, 19476},
};

inline long long table1_corrected(int n, int alphabet) {
  if (const auto it = kTable1Corrections.find({n, alphabet}); it != kTable1Corrections.end()) return it->second;
  if (const auto it = kTable1.find({n, alphabet}); it != kTable1.end()) return it->second;
  return 0;
}

inline const std::vector<std::string> kAllowed3Binary = {"123", "132", "312", "321", "231", "213"};

inline const std::vector<std::string> kAllowed4Binary = {
    "1234", "1243", "3412", "1432", "4123", "2143", "4312", "4321", "1342",
    "1324", "4231", "4213", "2341", "2413", "2431", "3124", "3142", "3214"};

inline const std::vector<std::string> kMinimalForbidden6Of4 = {"615243", "324156", "342516",
                                                               "162534", "453621", "435261"};

}  // namespace shiftpat::reference
