#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "knc/core.hpp"

namespace knc {

// Strictly increasing (symplectic order) sequence of letters, top to bottom.
using Column = std::vector<Letter>;

bool column_strictly_increasing(const Column& c);

// A (possibly skew) tableau stored column-major: columns[j] holds the filled
// cells of column j top to bottom, starting at ambient row shape.col_top(j)+1.
// Construction checks only that the filling fits the shape; the order
// conditions are the business of validate_* / is_kn.
struct Tableau {
    SkewShape shape;
    std::vector<Column> columns;

    Tableau() = default;
    Tableau(SkewShape s, std::vector<Column> cols);

    static Tableau straight(std::vector<Column> cols);

    bool empty() const { return columns.empty(); }
    int cells() const { return shape.cells(); }

    // Entry at 1-based ambient (row, col), or nullopt when the cell is not
    // part of the skew diagram.
    std::optional<Letter> cell(int row, int col) const;

    // One vector per ambient row, filled cells only (inner cells skipped).
    std::vector<std::vector<Letter>> rows() const;

    bool operator==(const Tableau& o) const { return shape == o.shape && columns == o.columns; }
    bool operator!=(const Tableau& o) const { return !(*this == o); }
};

// Column reading: down each column, rightmost column first.
Word reading_word(const Tableau& t);

WeightVector tableau_weight(const Tableau& t, int n);

// Canonical order used for reproducible sets and files: by shape, then by
// reading word in the symplectic lexicographic order.
bool tableau_less(const Tableau& a, const Tableau& b);

// Columns strict + rows weakly increasing across filled cells.
bool is_semistandard(const Tableau& t, std::string* why = nullptr);

// Rebuild a tableau of the given shape from a reading word (rightmost column
// first, top to bottom).  Throws invariant_error if the word length does not
// match the shape; does not check the order conditions.
Tableau tableau_from_reading_word(const Word& w, const SkewShape& shape);

// -- text format -------------------------------------------------------------
// One row per line, top row first; entries are signed decimal integers
// separated by single spaces; inner (skew) cells rendered as "."; a blank
// line (or end of input) terminates.

std::string format_tableau(const Tableau& t);
Tableau parse_tableau(const std::string& text);
Tableau read_tableau(std::istream& in);

}  // namespace knc
