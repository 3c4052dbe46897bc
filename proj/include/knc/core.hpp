#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

// Core value types for type-C (symplectic) tableau combinatorics on the
// signed alphabet [+-n] = 1 < 2 < ... < n < -n < ... < -1, where the barred
// letter i-bar is encoded as the negative integer -i.

namespace knc {

// Invalid user-supplied data (malformed tableau, wrong orbit, bad shape...).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violation of an internal invariant; never expected on valid inputs.
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

// A letter is a nonzero integer k with 1 <= |k| <= n.
using Letter = int;

// Word over [+-n]; rank is carried separately by the operations.
using Word = std::vector<Letter>;

// Integer vector of length n.
using WeightVector = std::vector<int>;

// Weakly decreasing nonnegative vector (trailing zeros allowed).
using Partition = std::vector<int>;

// Symplectic order: positives ascend, every barred letter exceeds every
// unbarred one, barred letters descend by absolute value.  On same-sign
// letters this coincides with the numeric order, so only mixed signs need
// special treatment.
constexpr bool letter_less(Letter a, Letter b) {
    if ((a > 0) != (b > 0)) return a > 0;
    return a < b;
}

constexpr bool letter_leq(Letter a, Letter b) { return a == b || letter_less(a, b); }

inline void check_letter(Letter x, int n) {
    if (x == 0 || x > n || x < -n)
        throw input_error("letter " + std::to_string(x) + " out of range for rank " +
                          std::to_string(n));
}

inline void check_word(const Word& w, int n) {
    for (Letter x : w) check_letter(x, n);
}

// Lexicographic comparison of words under the symplectic letter order.
inline bool word_less(const Word& a, const Word& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), letter_less);
}

// weight(w)_i = multiplicity of i minus multiplicity of -i.
inline WeightVector word_weight(const Word& w, int n) {
    WeightVector v(static_cast<size_t>(n), 0);
    for (Letter x : w) {
        check_letter(x, n);
        if (x > 0)
            ++v[static_cast<size_t>(x) - 1];
        else
            --v[static_cast<size_t>(-x) - 1];
    }
    return v;
}

inline bool is_partition(const std::vector<int>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) return false;
        if (i + 1 < v.size() && v[i] < v[i + 1]) return false;
    }
    return true;
}

inline void check_partition(const Partition& p) {
    if (!is_partition(p)) throw input_error("not a partition");
}

inline Partition trimmed(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline int partition_size(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

// Conjugate (transpose) of a partition.
inline Partition conjugate(const Partition& p) {
    Partition q = trimmed(p);
    check_partition(q);
    if (q.empty()) return {};
    Partition c(static_cast<size_t>(q[0]), 0);
    for (int part : q)
        for (int j = 0; j < part; ++j) ++c[static_cast<size_t>(j)];
    return c;
}

// Skew shape mu/nu; nu empty or all-zero encodes a straight shape.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape() = default;
    SkewShape(Partition mu, Partition nu) : outer(trimmed(std::move(mu))), inner(trimmed(std::move(nu))) {
        check_partition(outer);
        check_partition(inner);
        if (inner.size() > outer.size()) throw input_error("inner shape sticks out of outer shape");
        for (size_t i = 0; i < inner.size(); ++i)
            if (inner[i] > outer[i]) throw input_error("inner shape sticks out of outer shape");
    }

    bool straight() const { return inner.empty(); }
    int cells() const { return partition_size(outer) - partition_size(inner); }
    int column_count() const { return outer.empty() ? 0 : outer[0]; }

    // Number of inner cells above column j (0-based); the column occupies
    // ambient rows col_top(j)+1 .. col_top(j)+col_len(j), 1-based.
    int col_top(int j) const {
        int t = 0;
        for (int part : inner)
            if (part > j) ++t;
        return t;
    }
    int col_len(int j) const {
        int l = 0;
        for (int part : outer)
            if (part > j) ++l;
        return l - col_top(j);
    }
    std::vector<int> column_lengths() const {
        std::vector<int> ls(static_cast<size_t>(column_count()));
        for (int j = 0; j < column_count(); ++j) ls[static_cast<size_t>(j)] = col_len(j);
        return ls;
    }

    bool operator==(const SkewShape& o) const { return outer == o.outer && inner == o.inner; }
};

// Parsing / printing of the comma-separated integer vector format shared by
// words, weights, partitions and windows.
std::vector<int> parse_int_csv(const std::string& text);
std::string format_int_csv(const std::vector<int>& v);

}  // namespace knc
