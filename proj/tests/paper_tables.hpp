#pragma once

// Published reference values for the three coefficient families, used as
// golden data by the unit and acceptance suites. Row r holds n = r + 2,
// columns k = 1 .. n-1.

#include <cstdint>
#include <vector>

namespace naples_tables {

// Theta^{(=)}_{n,k}, n = 2..8
inline const std::vector<std::vector<std::int64_t>> kThetaEq = {
    {1},
    {4, 4},
    {27, 21, 27},
    {256, 176, 176, 256},
    {3125, 1995, 1765, 1995, 3125},
    {46656, 28344, 23304, 23304, 28344, 46656},
    {823543, 482825, 378007, 351337, 378007, 482825, 823543},
};

// T_{n,k}, n = 2..8
inline const std::vector<std::vector<std::int64_t>> kT = {
    {4},
    {23, 27},
    {192, 229, 256},
    {2077, 2558, 2869, 3125},
    {27808, 35154, 40000, 43531, 46656},
    {444411, 572470, 662519, 726668, 776887, 823543},
    {8266240, 10815697, 12693504, 14055341, 15097600, 15953673, 16777216},
};

// v^{(0)}_{n,k}(1), n = 2..9
inline const std::vector<std::vector<std::int64_t>> kV0 = {
    {1},
    {1, 4},
    {1, 11, 27},
    {1, 38, 131, 256},
    {1, 131, 783, 1829, 3125},
    {1, 490, 5136, 15634, 29849, 46656},
    {1, 1897, 34623, 148321, 332869, 561399, 823543},
    {1, 7714, 251817, 1505148, 4102015, 7735566, 11994247, 16777216},
};

}  // namespace naples_tables
