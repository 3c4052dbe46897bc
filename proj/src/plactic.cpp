#include "knc/plactic.hpp"

#include "knc/keys.hpp"
#include "knc/kn_tableaux.hpp"
#include "knc/tableau_crystal.hpp"

namespace knc {

Tableau insert(const Word& w, int n) {
    check_word(w, n);
    auto lift = highest_lift(w, n);
    WeightVector lambda = word_weight(lift.highest, n);
    if (!is_partition(lambda))
        throw invariant_error("highest-weight word does not have partition weight");
    Tableau t = key_of(lambda, n);
    for (auto it = lift.log.rbegin(); it != lift.log.rend(); ++it) {
        auto next = f_tab(t, n, it->index);
        if (!next) throw invariant_error("lowering replay left the crystal");
        t = std::move(*next);
    }
    return t;
}

RSPair rs(const Word& w, int n) {
    RSPair out;
    out.q.reserve(w.size());
    for (size_t k = 1; k <= w.size(); ++k)
        out.q.push_back(trimmed(insert(Word(w.begin(), w.begin() + static_cast<long>(k)), n).shape.outer));
    out.p = insert(w, n);
    return out;
}

bool knuth_equivalent(const Word& a, const Word& b, int n) { return insert(a, n) == insert(b, n); }

Tableau rectify(const Tableau& skew, int n) {
    auto check = check_kn(skew, n);
    if (!check) throw input_error("not a KN skew tableau: " + check.detail);
    return insert(reading_word(skew), n);
}

}  // namespace knc
