#include "knc/kn_tableaux.hpp"

#include "knc/tableau_crystal.hpp"

namespace knc {

Tableau split_form(const Tableau& t, int n) {
    const auto& sh = t.shape;
    std::vector<int> outer2, inner2;
    for (size_t r = 0; r < sh.outer.size(); ++r) outer2.push_back(2 * sh.outer[r]);
    for (size_t r = 0; r < sh.inner.size(); ++r) inner2.push_back(2 * sh.inner[r]);
    std::vector<Column> cols2;
    cols2.reserve(2 * t.columns.size());
    for (size_t j = 0; j < t.columns.size(); ++j) {
        auto adm = admissibility(t.columns[j], n);
        if (!adm)
            throw input_error("column " + std::to_string(j + 1) + " not admissible at " +
                              std::to_string(adm.failure_z));
        auto s = split(t.columns[j], n);
        cols2.push_back(std::move(s.left));
        cols2.push_back(std::move(s.right));
    }
    return Tableau(SkewShape(outer2, inner2), std::move(cols2));
}

KnCheck check_kn(const Tableau& t, int n) {
    KnCheck out;
    for (size_t j = 0; j < t.columns.size(); ++j) {
        check_word(t.columns[j], n);
        if (!column_strictly_increasing(t.columns[j])) {
            out.status = KnStatus::column_not_increasing;
            out.column = static_cast<int>(j) + 1;
            out.detail = "column " + std::to_string(j + 1) + " is not strictly increasing";
            return out;
        }
    }
    std::string why;
    if (!is_semistandard(t, &why)) {
        out.status = KnStatus::row_not_increasing;
        out.detail = why;
        return out;
    }
    for (size_t j = 0; j < t.columns.size(); ++j) {
        auto adm = admissibility(t.columns[j], n);
        if (!adm) {
            out.status = KnStatus::column_not_admissible;
            out.column = static_cast<int>(j) + 1;
            out.failure_z = adm.failure_z;
            out.detail = "column " + std::to_string(j + 1) + " not admissible at " +
                         std::to_string(adm.failure_z);
            return out;
        }
    }
    Tableau spl = split_form(t, n);
    if (!is_semistandard(spl, &why)) {
        out.status = KnStatus::split_not_semistandard;
        out.detail = "split form: " + why;
        return out;
    }
    return out;
}

bool is_kn(const Tableau& t, int n) { return static_cast<bool>(check_kn(t, n)); }

std::vector<Tableau> enumerate_kn(const Partition& shape, int n) {
    check_partition(shape);
    if (static_cast<int>(trimmed(shape).size()) > n)
        throw input_error("shape has more than rank-many parts");
    return build_crystal(shape, n).vertices;
}

namespace {

// All strictly increasing columns of the given length over [+-n].
void columns_of_length(int len, int n, Column& cur, std::vector<Column>& out) {
    if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    std::vector<Letter> alphabet;
    for (int i = 1; i <= n; ++i) alphabet.push_back(i);
    for (int i = n; i >= 1; --i) alphabet.push_back(-i);
    for (Letter x : alphabet) {
        if (!cur.empty() && !letter_less(cur.back(), x)) continue;
        cur.push_back(x);
        columns_of_length(len, n, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Tableau> enumerate_kn_skew(const SkewShape& shape, int n) {
    int k = shape.column_count();
    std::vector<std::vector<Column>> choices(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) {
        Column cur;
        columns_of_length(shape.col_len(j), n, cur, choices[static_cast<size_t>(j)]);
    }
    std::vector<Tableau> out;
    std::vector<Column> picked(static_cast<size_t>(k));

    // Rows must weakly increase across the shared rows of adjacent columns.
    auto compatible = [&](int j) {
        if (j == 0) return true;
        int tl = shape.col_top(j - 1), tr = shape.col_top(j);
        int ll = shape.col_len(j - 1), lr = shape.col_len(j);
        int lo = std::max(tl, tr) + 1, hi = std::min(tl + ll, tr + lr);
        for (int r = lo; r <= hi; ++r) {
            Letter a = picked[static_cast<size_t>(j - 1)][static_cast<size_t>(r - tl - 1)];
            Letter b = picked[static_cast<size_t>(j)][static_cast<size_t>(r - tr - 1)];
            if (letter_less(b, a)) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int j) -> void {
        if (j == k) {
            Tableau t(shape, picked);
            if (is_kn(t, n)) out.push_back(std::move(t));
            return;
        }
        for (const Column& c : choices[static_cast<size_t>(j)]) {
            picked[static_cast<size_t>(j)] = c;
            if (compatible(j)) self(self, j + 1);
        }
    };
    if (k == 0)
        out.push_back(Tableau{});
    else
        rec(rec, 0);
    std::sort(out.begin(), out.end(), tableau_less);
    return out;
}

}  // namespace knc
