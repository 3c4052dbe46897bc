#pragma once

#include "knc/tableau.hpp"

namespace knc {

// Key tableaux: straight-shape KN tableaux whose column letter sets are
// nested (each column contains the next) and which contain no symmetric pair
// i, -i.  They are in bijection with the B_n-orbit vectors via the weight.

// Key tableau of an arbitrary integer vector v: letter sign(v_i)*i fills the
// first |v_i| columns; shape is |v| sorted decreasingly.
Tableau key_of(const WeightVector& v, int n);

bool is_key(const Tableau& t, int n);

// Inverse of key_of on key tableaux (throws input_error otherwise).
WeightVector weight_of_key(const Tableau& t, int n);

// Right and left key maps.  The right key replaces each column of T by the
// right split column of the last column of a frank reshape ending in that
// column length; the left key mirrors this with first columns and left split
// columns.
Tableau right_key(const Tableau& t, int n);
Tableau left_key(const Tableau& t, int n);

}  // namespace knc
