#include "knc/keys.hpp"

#include <map>
#include <set>

#include "knc/column_ops.hpp"
#include "knc/kn_tableaux.hpp"
#include "knc/reshape.hpp"

namespace knc {

Tableau key_of(const WeightVector& v, int n) {
    if (static_cast<int>(v.size()) > n) throw input_error("weight vector longer than rank");
    int width = 0;
    for (int x : v) width = std::max(width, std::abs(x));
    std::vector<Column> cols(static_cast<size_t>(width));
    for (int c = 0; c < width; ++c) {
        for (size_t i = 0; i < v.size(); ++i) {
            if (std::abs(v[i]) > c)
                cols[static_cast<size_t>(c)].push_back(v[i] > 0 ? static_cast<int>(i) + 1
                                                                : -(static_cast<int>(i) + 1));
        }
        std::sort(cols[static_cast<size_t>(c)].begin(), cols[static_cast<size_t>(c)].end(), letter_less);
    }
    return Tableau::straight(std::move(cols));
}

bool is_key(const Tableau& t, int n) {
    if (!t.shape.straight()) return false;
    if (!is_kn(t, n)) return false;
    std::set<Letter> letters;
    for (const Column& c : t.columns)
        for (Letter x : c) letters.insert(x);
    for (Letter x : letters)
        if (letters.count(-x)) return false;
    for (size_t j = 0; j + 1 < t.columns.size(); ++j) {
        std::set<Letter> a(t.columns[j].begin(), t.columns[j].end());
        for (Letter x : t.columns[j + 1])
            if (!a.count(x)) return false;
    }
    return true;
}

WeightVector weight_of_key(const Tableau& t, int n) {
    if (!is_key(t, n)) throw input_error("not a key tableau");
    return tableau_weight(t, n);
}

namespace {

// Reshape targets whose last (resp. first) column has the requested length;
// the remaining lengths are placed in decreasing order.
std::vector<int> lengths_ending_in(std::vector<int> lengths, int len) {
    auto it = std::find(lengths.begin(), lengths.end(), len);
    lengths.erase(it);
    std::sort(lengths.begin(), lengths.end(), std::greater<int>());
    lengths.push_back(len);
    return lengths;
}

std::vector<int> lengths_starting_with(std::vector<int> lengths, int len) {
    auto it = std::find(lengths.begin(), lengths.end(), len);
    lengths.erase(it);
    std::sort(lengths.begin(), lengths.end(), std::greater<int>());
    lengths.insert(lengths.begin(), len);
    return lengths;
}

Tableau key_from_columns(const Tableau& t, const std::map<int, Column>& column_for_length, int n,
                         const char* side) {
    // The chosen columns must be nested as letter sets.
    std::vector<std::pair<int, Column>> by_len(column_for_length.begin(), column_for_length.end());
    for (size_t a = 0; a + 1 < by_len.size(); ++a) {
        std::set<Letter> big(by_len[a + 1].second.begin(), by_len[a + 1].second.end());
        for (Letter x : by_len[a].second)
            if (!big.count(x))
                throw invariant_error(std::string(side) + " key columns are not nested");
    }
    std::vector<Column> cols;
    cols.reserve(t.columns.size());
    for (const Column& c : t.columns) cols.push_back(column_for_length.at(static_cast<int>(c.size())));
    Tableau key = Tableau::straight(std::move(cols));
    if (!is_key(key, n)) throw invariant_error(std::string(side) + " key map did not produce a key tableau");
    return key;
}

}  // namespace

Tableau right_key(const Tableau& t, int n) {
    if (!t.shape.straight()) throw input_error("key maps expect a straight tableau");
    if (t.empty()) return t;
    std::vector<int> lengths = t.shape.column_lengths();
    std::map<int, Column> right_for_length;
    for (int len : lengths) {
        if (right_for_length.count(len)) continue;
        SkewShape target = canonical_skew_shape(lengths_ending_in(lengths, len));
        Tableau s = reshape(t, target, n);
        right_for_length[len] = split(s.columns.back(), n).right;
    }
    return key_from_columns(t, right_for_length, n, "right");
}

Tableau left_key(const Tableau& t, int n) {
    if (!t.shape.straight()) throw input_error("key maps expect a straight tableau");
    if (t.empty()) return t;
    std::vector<int> lengths = t.shape.column_lengths();
    std::map<int, Column> left_for_length;
    for (int len : lengths) {
        if (left_for_length.count(len)) continue;
        SkewShape target = canonical_skew_shape(lengths_starting_with(lengths, len));
        Tableau s = reshape(t, target, n);
        left_for_length[len] = split(s.columns.front(), n).left;
    }
    return key_from_columns(t, left_for_length, n, "left");
}

}  // namespace knc
