#pragma once

// Leaf/total node counts of the published decision trees for the 36
// SENSEVAL-1 tasks, per feature-selection measure.

#include <array>
#include <cstddef>
#include <string_view>

namespace bigram_wsd::testing {

struct PublishedTreeSize {
  std::string_view task;
  std::string_view measure;
  std::size_t leaves;
  std::size_t total;
};

inline constexpr std::array<PublishedTreeSize, 72> kPublishedTreeSizes{{
    {"accident-n", "pow", 8, 15},
    {"accident-n", "dice", 12, 23},
    {"behaviour-n", "pow", 2, 3},
    {"behaviour-n", "dice", 2, 3},
    {"bet-n", "pow", 20, 39},
    {"bet-n", "dice", 20, 39},
    {"excess-n", "pow", 13, 25},
    {"excess-n", "dice", 11, 21},
    {"float-n", "pow", 7, 13},
    {"float-n", "dice", 7, 13},
    {"giant-n", "pow", 16, 31},
    {"giant-n", "dice", 14, 27},
    {"knee-n", "pow", 23, 45},
    {"knee-n", "dice", 20, 39},
    {"onion-n", "pow", 1, 1},
    {"onion-n", "dice", 1, 1},
    {"promise-n", "pow", 95, 189},
    {"promise-n", "dice", 49, 97},
    {"sack-n", "pow", 5, 9},
    {"sack-n", "dice", 5, 9},
    {"scrap-n", "pow", 7, 13},
    {"scrap-n", "dice", 7, 13},
    {"shirt-n", "pow", 38, 75},
    {"shirt-n", "dice", 55, 109},
    {"amaze-v", "pow", 11, 21},
    {"amaze-v", "dice", 11, 21},
    {"bet-v", "pow", 4, 7},
    {"bet-v", "dice", 4, 7},
    {"bother-v", "pow", 19, 37},
    {"bother-v", "dice", 20, 39},
    {"bury-v", "pow", 28, 55},
    {"bury-v", "dice", 32, 63},
    {"calculate-v", "pow", 5, 9},
    {"calculate-v", "dice", 5, 9},
    {"consume-v", "pow", 4, 7},
    {"consume-v", "dice", 4, 7},
    {"derive-v", "pow", 10, 19},
    {"derive-v", "dice", 10, 19},
    {"float-v", "pow", 24, 47},
    {"float-v", "dice", 24, 47},
    {"invade-v", "pow", 55, 109},
    {"invade-v", "dice", 66, 127},
    {"promise-v", "pow", 3, 5},
    {"promise-v", "dice", 5, 9},
    {"sack-v", "pow", 1, 1},
    {"sack-v", "dice", 1, 1},
    {"scrap-v", "pow", 1, 1},
    {"scrap-v", "dice", 1, 1},
    {"seize-v", "pow", 26, 51},
    {"seize-v", "dice", 57, 113},
    {"brilliant-a", "pow", 26, 51},
    {"brilliant-a", "dice", 42, 83},
    {"floating-a", "pow", 7, 13},
    {"floating-a", "dice", 7, 13},
    {"generous-a", "pow", 57, 113},
    {"generous-a", "dice", 56, 111},
    {"giant-a", "pow", 2, 3},
    {"giant-a", "dice", 1, 1},
    {"modest-a", "pow", 14, 27},
    {"modest-a", "dice", 10, 19},
    {"slight-a", "pow", 2, 3},
    {"slight-a", "dice", 2, 3},
    {"wooden-a", "pow", 2, 3},
    {"wooden-a", "dice", 2, 3},
    {"band-p", "pow", 14, 27},
    {"band-p", "dice", 21, 41},
    {"bitter-p", "pow", 22, 43},
    {"bitter-p", "dice", 22, 43},
    {"sanction-p", "pow", 12, 23},
    {"sanction-p", "dice", 12, 23},
    {"shake-p", "pow", 90, 179},
    {"shake-p", "dice", 81, 161},
}};

/// The one published pair that cannot describe a binary tree (2*66-1 = 131).
inline constexpr PublishedTreeSize kInconsistentTreeSize{"invade-v", "dice", 66, 127};

}  // namespace bigram_wsd::testing
