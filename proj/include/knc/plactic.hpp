#pragma once

#include "knc/tableau.hpp"
#include "knc/word_crystal.hpp"

namespace knc {

// Insertion tableau P(w), computed by the crystal-isomorphism method: lift w
// to the highest-weight word of its component, read off the shape, and replay
// the lowering sequence from the key tableau of that shape.
Tableau insert(const Word& w, int n);

// Oscillating recording tableau: shape of P of every prefix of w.
using OscillatingTableau = std::vector<Partition>;

struct RSPair {
    Tableau p;
    OscillatingTableau q;
};

RSPair rs(const Word& w, int n);

// Plactic (Knuth) equivalence: equal insertion tableaux.
bool knuth_equivalent(const Word& a, const Word& b, int n);

// Rectification of a skew KN tableau; equals P of its reading word and is
// independent of the slide order.
Tableau rectify(const Tableau& skew, int n);

}  // namespace knc
