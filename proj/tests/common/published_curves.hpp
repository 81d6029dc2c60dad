#pragma once

// Minimal models with their conductors and analytic ranks from Cremona's tables.
// Every additive prime is >= 5.

namespace testdata {

struct Published {
    const char* label;
    long a[5];
    long conductor;
    int w;  // (-1)^rank
};

inline const Published kCurves[] = {
    {"11a1", {0, -1, 1, -10, -20}, 11, 1},    {"14a1", {1, 0, 1, 4, -6}, 14, 1},
    {"15a1", {1, 1, 1, -10, -10}, 15, 1},     {"17a1", {1, -1, 1, -1, -14}, 17, 1},
    {"19a1", {0, 1, 1, -9, -15}, 19, 1},      {"21a1", {1, 0, 0, -4, -1}, 21, 1},
    {"26a1", {1, 0, 1, -5, -8}, 26, 1},       {"26b1", {1, -1, 1, -3, 3}, 26, 1},
    {"37a1", {0, 0, 1, -1, 0}, 37, -1},       {"43a1", {0, 1, 1, 0, 0}, 43, -1},
    {"53a1", {1, -1, 1, 0, 0}, 53, -1},       {"57a1", {0, -1, 1, -2, 2}, 57, -1},
    {"58a1", {1, -1, 0, -1, 1}, 58, -1},      {"61a1", {1, 0, 0, -2, 1}, 61, -1},
    {"65a1", {1, 0, 0, -1, 0}, 65, -1},       {"77a1", {0, 0, 1, 2, 0}, 77, -1},
    {"79a1", {1, 1, 1, -2, 0}, 79, -1},       {"91a1", {0, 0, 1, 1, 0}, 91, -1},
    {"91b1", {0, 1, 1, -7, 5}, 91, -1},       {"389a1", {0, 1, 1, -2, 0}, 389, 1},
    {"5077a1", {0, 0, 1, -7, 6}, 5077, -1},   {"49a1", {1, -1, 0, -2, -1}, 49, 1},
    {"50a1", {1, 0, 1, -1, -2}, 50, 1},       {"50b1", {1, 1, 1, -3, 1}, 50, 1},
    {"121a1", {1, 1, 1, -30, -76}, 121, 1},   {"121b1", {0, -1, 1, -7, 10}, 121, -1},
    {"121c1", {1, 1, 0, -2, -7}, 121, 1},     {"121d1", {0, -1, 1, -40, -221}, 121, 1},
};

}  // namespace testdata
