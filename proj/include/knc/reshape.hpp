#pragma once

#include "knc/tableau.hpp"

namespace knc {

// Frank word: the lengths of the maximal strictly increasing factors form
// the same multiset as the column lengths of the insertion tableau.
bool is_frank(const Word& w, int n);

// Lengths of the maximal strictly increasing (column) factors, left to right.
std::vector<int> column_factor_lengths(const Word& w);

// Canonical skew shape for a left-to-right sequence of column lengths: the
// rightmost column starts at the top and adjacent columns take the tight
// offset max(0, len_{j+1} - len_j), so consecutive columns always share a row.
SkewShape canonical_skew_shape(const std::vector<int>& lengths);

// The unique KN skew tableau of the target shape that rectifies to t and has
// a frank reading word.  Preconditions: t is a straight KN tableau, target
// has the same column-length multiset, and consecutive target columns share
// at least one row.
Tableau reshape(const Tableau& t, const SkewShape& target, int n);

// Brute-force realization of the same map: enumerate the KN fillings of the
// target, keep those with frank reading word rectifying to t, and insist on a
// unique survivor.  Test oracle; exponential in the shape size.
Tableau reshape_oracle(const Tableau& t, const SkewShape& target, int n);

// Exchange of the lengths of a valid two-column skew KN tableau; the result
// has the same rectification.  `offset` is the number of rows by which the
// first column's top cell sits below the second column's top cell (0 for a
// straight two-column tableau); the output offset is derived.
struct ColumnExchange {
    Column first;
    Column second;
    int offset;
};

ColumnExchange column_exchange(const Column& c1, const Column& c2, int offset, int n);

}  // namespace knc
