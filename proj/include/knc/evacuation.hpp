#pragma once

#include "knc/tableau.hpp"

namespace knc {

// Star word: reverse and bar-complement (k <-> -k).  An involution.
Word star(const Word& w);

// Type-C evacuation (Lusztig involution on the tableau crystal): insert the
// star of the reading word.  Preserves the shape and negates the weight.
Tableau evacuate(const Tableau& t, int n);

}  // namespace knc
