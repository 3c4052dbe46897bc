#include "knc/reshape.hpp"

#include <map>

#include "knc/kn_tableaux.hpp"
#include "knc/plactic.hpp"
#include "knc/word_crystal.hpp"

namespace knc {

std::vector<int> column_factor_lengths(const Word& w) {
    std::vector<int> lengths;
    size_t start = 0;
    for (size_t p = 0; p < w.size(); ++p) {
        if (p + 1 == w.size() || !letter_less(w[p], w[p + 1])) {
            lengths.push_back(static_cast<int>(p + 1 - start));
            start = p + 1;
        }
    }
    return lengths;
}

bool is_frank(const Word& w, int n) {
    std::vector<int> factors = column_factor_lengths(w);
    std::vector<int> cols = insert(w, n).shape.column_lengths();
    std::sort(factors.begin(), factors.end());
    std::sort(cols.begin(), cols.end());
    return factors == cols;
}

SkewShape canonical_skew_shape(const std::vector<int>& lengths) {
    int k = static_cast<int>(lengths.size());
    for (int l : lengths)
        if (l <= 0) throw input_error("column lengths must be positive");
    std::vector<int> top(static_cast<size_t>(k), 0);  // inner' per column
    for (int j = k - 2; j >= 0; --j)
        top[static_cast<size_t>(j)] =
            top[static_cast<size_t>(j + 1)] +
            std::max(0, lengths[static_cast<size_t>(j + 1)] - lengths[static_cast<size_t>(j)]);
    std::vector<int> outer_conj(static_cast<size_t>(k)), inner_conj(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) {
        inner_conj[static_cast<size_t>(j)] = top[static_cast<size_t>(j)];
        outer_conj[static_cast<size_t>(j)] = top[static_cast<size_t>(j)] + lengths[static_cast<size_t>(j)];
    }
    return SkewShape(conjugate(outer_conj), conjugate(inner_conj));
}

namespace {

void check_target(const SkewShape& target, const std::vector<int>& source_lengths) {
    std::vector<int> want = target.column_lengths();
    std::vector<int> have = source_lengths;
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    if (want != have) throw input_error("target shape has a different column-length multiset");
    for (int j = 0; j + 1 < target.column_count(); ++j)
        if (target.col_top(j) >= target.col_top(j + 1) + target.col_len(j + 1))
            throw input_error("consecutive target columns must share a row");
}

// Superstandard filling: column j holds 1..len_j.  Its reading word is the
// highest-weight word of the component of the target-shape tableaux whose
// rectification shape is the sorted column-length sequence.
Tableau superstandard(const SkewShape& shape) {
    std::vector<Column> cols;
    cols.reserve(static_cast<size_t>(shape.column_count()));
    for (int j = 0; j < shape.column_count(); ++j) {
        Column c(static_cast<size_t>(shape.col_len(j)));
        for (size_t r = 0; r < c.size(); ++r) c[r] = static_cast<int>(r) + 1;
        cols.push_back(std::move(c));
    }
    return Tableau(shape, std::move(cols));
}

// Replays the lowering sequence of `log` (reversed raising log) on the
// highest-weight filling of the target shape.  This is the same crystal
// isomorphism that backs insertion, so each step is guaranteed nonzero.
Tableau replay_on_shape(const OperatorLog& log, const SkewShape& target, int n) {
    Tableau s = superstandard(target);
    for (auto it = log.rbegin(); it != log.rend(); ++it) {
        auto next = f_word(reading_word(s), n, it->index);
        if (!next) throw invariant_error("reshape replay left the crystal component");
        s = tableau_from_reading_word(*next, target);
    }
    auto check = check_kn(s, n);
    if (!check) throw invariant_error("reshape produced a non-KN filling: " + check.detail);
    return s;
}

}  // namespace

Tableau reshape(const Tableau& t, const SkewShape& target, int n) {
    if (!t.shape.straight()) throw input_error("reshape expects a straight tableau");
    auto check = check_kn(t, n);
    if (!check) throw input_error("not a KN tableau: " + check.detail);
    check_target(target, t.shape.column_lengths());

    auto lift = highest_lift(reading_word(t), n);
    WeightVector lambda = word_weight(lift.highest, n);
    if (trimmed(lambda) != trimmed(t.shape.outer))
        throw invariant_error("straight KN tableau does not lift to its own shape");
    return replay_on_shape(lift.log, target, n);
}

Tableau reshape_oracle(const Tableau& t, const SkewShape& target, int n) {
    if (!t.shape.straight()) throw input_error("reshape expects a straight tableau");
    check_target(target, t.shape.column_lengths());
    std::vector<Tableau> survivors;
    for (const Tableau& s : enumerate_kn_skew(target, n)) {
        if (!is_frank(reading_word(s), n)) continue;
        if (rectify(s, n) == t) survivors.push_back(s);
    }
    if (survivors.size() != 1)
        throw invariant_error("expected exactly one frank filling, found " +
                              std::to_string(survivors.size()));
    return survivors.front();
}

ColumnExchange column_exchange(const Column& c1, const Column& c2, int offset, int n) {
    if (offset < 0) throw input_error("invalid layout: first column cannot start above the second");
    int l1 = static_cast<int>(c1.size()), l2 = static_cast<int>(c2.size());
    if (l1 == 0 || l2 == 0) throw input_error("columns must be nonempty");

    // Assemble the two-column skew tableau with column tops (offset, 0).
    std::vector<int> outer_conj{offset + l1, l2}, inner_conj{offset, 0};
    if (outer_conj[0] < outer_conj[1])
        throw input_error("invalid layout: first column must not end above the second");
    if (offset >= l2) throw input_error("invalid layout: columns must share a row");
    Tableau s(SkewShape(conjugate(outer_conj), conjugate(inner_conj)), {c1, c2});
    auto check = check_kn(s, n);
    if (!check) throw input_error("not a two-column KN skew tableau: " + check.detail);

    if (l1 == l2) return {c1, c2, offset};

    auto lift = highest_lift(reading_word(s), n);
    std::vector<int> sorted{l1, l2};
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    if (trimmed(word_weight(lift.highest, n)) != trimmed(conjugate(sorted)))
        throw input_error("columns are not exchangeable: reading word is not frank");

    SkewShape target = canonical_skew_shape({l2, l1});
    Tableau out = replay_on_shape(lift.log, target, n);
    return {out.columns[0], out.columns[1], target.col_top(0)};
}

}  // namespace knc
