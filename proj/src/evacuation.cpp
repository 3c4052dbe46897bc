#include "knc/evacuation.hpp"

#include "knc/kn_tableaux.hpp"
#include "knc/plactic.hpp"

namespace knc {

Word star(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (Letter& x : out) x = -x;
    return out;
}

Tableau evacuate(const Tableau& t, int n) {
    if (!t.shape.straight()) throw input_error("evacuation expects a straight tableau");
    auto check = check_kn(t, n);
    if (!check) throw input_error("not a KN tableau: " + check.detail);
    Tableau out = insert(star(reading_word(t)), n);
    if (out.shape.outer != t.shape.outer) throw invariant_error("evacuation changed the shape");
    return out;
}

}  // namespace knc
