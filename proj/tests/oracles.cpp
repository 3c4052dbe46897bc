#include "oracles.hpp"

#include <map>
#include <numeric>

#include "knc/kn_tableaux.hpp"
#include "knc/plactic.hpp"
#include "knc/reshape.hpp"

namespace knc::oracles {

long long weyl_dimension_c(const Partition& lambda, int n) {
    check_partition(lambda);
    std::vector<long long> shifted(static_cast<size_t>(n)), rho(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        rho[static_cast<size_t>(i)] = n - i;
        long long li = i < static_cast<int>(lambda.size()) ? lambda[static_cast<size_t>(i)] : 0;
        shifted[static_cast<size_t>(i)] = li + rho[static_cast<size_t>(i)];
    }
    long long num = 1, den = 1;
    auto mul = [&](long long a, long long b) {
        num *= a;
        den *= b;
        long long g = std::gcd(num, den);
        num /= g;
        den /= g;
    };
    for (int i = 0; i < n; ++i) {
        mul(shifted[static_cast<size_t>(i)], rho[static_cast<size_t>(i)]);  // 2 e_i (halved)
        for (int j = i + 1; j < n; ++j) {
            mul(shifted[static_cast<size_t>(i)] - shifted[static_cast<size_t>(j)],
                rho[static_cast<size_t>(i)] - rho[static_cast<size_t>(j)]);
            mul(shifted[static_cast<size_t>(i)] + shifted[static_cast<size_t>(j)],
                rho[static_cast<size_t>(i)] + rho[static_cast<size_t>(j)]);
        }
    }
    if (den != 1) throw invariant_error("Weyl dimension is not an integer");
    return num;
}

namespace {

// Grid view of a skew tableau: 0 = absent, otherwise the entry.
struct Grid {
    std::vector<std::vector<int>> cell;  // [row][col], 1-based via offset 0

    static Grid of(const Tableau& t) {
        Grid g;
        size_t rows = t.shape.outer.size();
        size_t cols = t.shape.outer.empty() ? 0 : static_cast<size_t>(t.shape.outer[0]);
        g.cell.assign(rows, std::vector<int>(cols, 0));
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c)
                if (auto x = t.cell(static_cast<int>(r) + 1, static_cast<int>(c) + 1)) g.cell[r][c] = *x;
        return g;
    }

    Tableau to_tableau() const {
        std::vector<int> outer, inner;
        for (const auto& row : cell) {
            int dots = 0;
            while (dots < static_cast<int>(row.size()) && row[static_cast<size_t>(dots)] == 0) ++dots;
            int end = static_cast<int>(row.size());
            while (end > dots && row[static_cast<size_t>(end) - 1] == 0) --end;
            if (end == dots && dots == static_cast<int>(row.size())) {
                outer.push_back(0);
                inner.push_back(0);
                continue;
            }
            inner.push_back(dots);
            outer.push_back(end);
        }
        while (!outer.empty() && outer.back() == 0) {
            outer.pop_back();
            inner.pop_back();
        }
        SkewShape shape(outer, inner);
        std::vector<Column> colsv(static_cast<size_t>(shape.column_count()));
        for (int j = 0; j < shape.column_count(); ++j)
            for (int r = shape.col_top(j); r < shape.col_top(j) + shape.col_len(j); ++r)
                colsv[static_cast<size_t>(j)].push_back(cell[static_cast<size_t>(r)][static_cast<size_t>(j)]);
        return Tableau(shape, std::move(colsv));
    }
};

}  // namespace

Tableau type_a_rectify(const Tableau& skew) {
    for (const Column& c : skew.columns)
        for (Letter x : c)
            if (x < 0) throw input_error("type-A oracle expects positive letters");
    Grid g = Grid::of(skew);
    // Count inner cells to slide away.
    int holes = partition_size(skew.shape.inner);
    for (int step = 0; step < holes; ++step) {
        // Bottom-most, then right-most inner corner: an absent cell whose
        // right and below neighbours are not both absent-inside-the-shape.
        Tableau cur = g.to_tableau();
        const auto& inner = cur.shape.inner;
        int hr = -1, hc = -1;
        for (size_t r = 0; r < inner.size(); ++r) {
            if (inner[r] == 0) continue;
            hr = static_cast<int>(r);
            hc = inner[r] - 1;
        }
        if (hr < 0) break;
        // Slide the hole at (hr, hc) out.
        for (;;) {
            size_t r = static_cast<size_t>(hr), c = static_cast<size_t>(hc);
            int below = (r + 1 < g.cell.size() && g.cell[r + 1][c] != 0) ? g.cell[r + 1][c] : 0;
            int right = (c + 1 < g.cell[r].size() && g.cell[r][c + 1] != 0) ? g.cell[r][c + 1] : 0;
            if (below == 0 && right == 0) break;
            if (right == 0 || (below != 0 && below <= right)) {
                g.cell[r][c] = below;
                g.cell[r + 1][c] = 0;
                ++hr;
            } else {
                g.cell[r][c] = right;
                g.cell[r][c + 1] = 0;
                ++hc;
            }
        }
    }
    return g.to_tableau();
}

namespace {

// All semistandard fillings of a skew shape with letters 1..n.
std::vector<Tableau> type_a_fillings(const SkewShape& shape, int n) {
    int k = shape.column_count();
    std::vector<std::vector<Column>> choices(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) {
        int len = shape.col_len(j);
        Column cur;
        auto rec = [&](auto&& self, int from) -> void {
            if (static_cast<int>(cur.size()) == len) {
                choices[static_cast<size_t>(j)].push_back(cur);
                return;
            }
            for (int x = from; x <= n; ++x) {
                cur.push_back(x);
                self(self, x + 1);
                cur.pop_back();
            }
        };
        rec(rec, 1);
    }
    std::vector<Tableau> out;
    std::vector<Column> picked(static_cast<size_t>(k));
    auto rec = [&](auto&& self, int j) -> void {
        if (j == k) {
            Tableau t(shape, picked);
            std::string why;
            if (is_semistandard(t, &why)) out.push_back(std::move(t));
            return;
        }
        for (const Column& c : choices[static_cast<size_t>(j)]) {
            picked[static_cast<size_t>(j)] = c;
            self(self, j + 1);
        }
    };
    if (k == 0)
        out.push_back(Tableau{});
    else
        rec(rec, 0);
    return out;
}

Tableau unique_type_a_reshape(const Tableau& t, const SkewShape& target, int n) {
    std::vector<Tableau> survivors;
    for (const Tableau& s : type_a_fillings(target, n))
        if (type_a_rectify(s) == t) survivors.push_back(s);
    if (survivors.size() != 1)
        throw invariant_error("type-A oracle: expected a unique reshape, found " +
                              std::to_string(survivors.size()));
    return survivors.front();
}

}  // namespace

Tableau type_a_left_key(const Tableau& t, int n) {
    std::vector<int> lengths = t.shape.column_lengths();
    std::map<int, Column> first_for_length;
    for (int len : lengths) {
        if (first_for_length.count(len)) continue;
        std::vector<int> arranged = lengths;
        arranged.erase(std::find(arranged.begin(), arranged.end(), len));
        std::sort(arranged.begin(), arranged.end(), std::greater<int>());
        arranged.insert(arranged.begin(), len);
        Tableau s = unique_type_a_reshape(t, canonical_skew_shape(arranged), n);
        first_for_length[len] = s.columns.front();
    }
    std::vector<Column> cols;
    for (const Column& c : t.columns) cols.push_back(first_for_length.at(static_cast<int>(c.size())));
    return Tableau::straight(std::move(cols));
}

std::pair<Column, Column> type_a_column_exchange(const Column& c1, const Column& c2, int offset,
                                                 int n) {
    std::vector<int> outer_conj{offset + static_cast<int>(c1.size()), static_cast<int>(c2.size())};
    std::vector<int> inner_conj{offset, 0};
    Tableau s(SkewShape(conjugate(outer_conj), conjugate(inner_conj)), {c1, c2});
    Tableau rect = type_a_rectify(s);
    SkewShape target =
        canonical_skew_shape({static_cast<int>(c2.size()), static_cast<int>(c1.size())});
    Tableau out = unique_type_a_reshape(rect, target, n);
    return {out.columns[0], out.columns[1]};
}

Tableau rotate_complement(const Tableau& t) {
    if (!t.shape.straight()) throw input_error("rotation oracle expects a straight tableau");
    Partition lambda = t.shape.outer;
    if (lambda.empty()) return t;
    int rows = static_cast<int>(lambda.size());
    int width = lambda[0];
    std::vector<int> outer(static_cast<size_t>(rows), width), inner;
    for (int r = rows - 1; r >= 0; --r) inner.push_back(width - lambda[static_cast<size_t>(r)]);
    SkewShape shape(outer, inner);
    std::vector<Column> cols(static_cast<size_t>(width));
    for (int j = 0; j < width; ++j) {
        int top = shape.col_top(j);
        cols[static_cast<size_t>(j)].resize(static_cast<size_t>(shape.col_len(j)));
        for (size_t k = 0; k < cols[static_cast<size_t>(j)].size(); ++k) {
            int rr = top + static_cast<int>(k) + 1;  // rotated cell (rr, j+1)
            int r = rows + 1 - rr, c = width - j;    // source cell
            cols[static_cast<size_t>(j)][k] = -*t.cell(r, c);
        }
    }
    return Tableau(shape, std::move(cols));
}

Tableau evacuate_by_rotation(const Tableau& t, int n) {
    return rectify(rotate_complement(t), n);
}

}  // namespace knc::oracles
