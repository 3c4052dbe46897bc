#pragma once

#include <optional>
#include <utility>

#include "knc/tableau.hpp"

namespace knc {

// One-column condition: for every symmetric pair (z, -z) in the column, with
// z in row a from the top and -z in row b from the bottom, a + b <= z.
// Equivalently, at most z letters of the column have absolute value <= z.
struct Admissibility {
    bool admissible;
    int failure_z;  // minimal z witnessing the failure; 0 when admissible

    explicit operator bool() const { return admissible; }
};

// Requires a strictly increasing column with letters in [+-n].
Admissibility admissibility(const Column& c, int n);

// Left/right companion columns of an admissible column, via the greedy
// substitution of each symmetric pair (z_i, -z_i) by (t_i, -t_i).
struct SplitResult {
    Column left;
    Column right;
    std::vector<std::pair<int, int>> pairs;  // (z_i, t_i), z_1 > z_2 > ...
};

// Throws input_error when the column is malformed or not admissible.
SplitResult split(const Column& c, int n);

}  // namespace knc
