#include <doctest.h>

#include <set>

#include "knc/column_ops.hpp"
#include "test_helpers.hpp"

using namespace knc;

namespace {

// Direct 1CC checker, straight from the definition: for each pair (z, -z),
// row of z from the top plus row of -z from the bottom is at most z.
bool one_cc(const Column& c) {
    for (size_t a = 0; a < c.size(); ++a) {
        if (c[a] <= 0) continue;
        for (size_t b = 0; b < c.size(); ++b) {
            if (c[b] != -c[a]) continue;
            if (static_cast<int>(a + 1) + static_cast<int>(c.size() - b) > c[a]) return false;
        }
    }
    return true;
}

std::vector<Column> all_columns(int n, int len) {
    std::vector<Letter> alphabet;
    for (int i = 1; i <= n; ++i) alphabet.push_back(i);
    for (int i = n; i >= 1; --i) alphabet.push_back(-i);
    std::vector<Column> out;
    Column cur;
    auto rec = [&](auto&& self, size_t from) -> void {
        if (static_cast<int>(cur.size()) == len) {
            out.push_back(cur);
            return;
        }
        for (size_t p = from; p < alphabet.size(); ++p) {
            cur.push_back(alphabet[p]);
            self(self, p + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

TEST_CASE("admissibility examples") {
    CHECK_FALSE(admissibility({1, 2, -1}, 3).admissible);
    CHECK(admissibility({1, 2, -1}, 3).failure_z == 1);
    CHECK(admissibility({1, 2}, 3).admissible);
    CHECK(admissibility({2, -2}, 2).admissible);  // a = b = 1, a + b = 2 <= 2
    CHECK_THROWS_AS(admissibility({2, 1}, 3), input_error);
}

TEST_CASE("split examples") {
    auto s = split({2, 3, -3}, 3);
    CHECK(s.left == Column{1, 2, -3});
    CHECK(s.right == Column{2, 3, -1});
    CHECK(s.pairs == std::vector<std::pair<int, int>>{{3, 1}});

    auto id = split({1, 2}, 3);
    CHECK(id.left == Column{1, 2});
    CHECK(id.right == Column{1, 2});
    CHECK(id.pairs.empty());

    auto two = split({2, -2}, 2);
    CHECK(two.left == Column{1, -2});
    CHECK(two.right == Column{2, -1});

    CHECK_THROWS_AS(split({1, 2, -1}, 3), input_error);
}

TEST_CASE("greedy split choice satisfies the defining conditions, exhaustively") {
    for (int n = 1; n <= 3; ++n) {
        for (int len = 1; len <= n; ++len) {
            for (const Column& c : all_columns(n, len)) {
                if (!admissibility(c, n).admissible) continue;
                auto s = split(c, n);
                std::set<int> present(c.begin(), c.end());
                int prev_t = n + 1;
                for (auto [z, t] : s.pairs) {
                    CHECK(present.count(z));
                    CHECK(present.count(-z));
                    int bound = std::min(prev_t, z);
                    CHECK(t < bound);
                    CHECK_FALSE(present.count(t));
                    CHECK_FALSE(present.count(-t));
                    // t is the greatest admissible candidate below the bound.
                    for (int better = t + 1; better < bound; ++better)
                        CHECK((present.count(better) || present.count(-better)));
                    prev_t = t;
                }
            }
        }
    }
}

TEST_CASE("admissible iff splittable, exhaustively for n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        for (int len = 1; len <= 2 * n; ++len) {
            for (const Column& c : all_columns(n, len)) {
                auto adm = admissibility(c, n);
                CHECK(adm.admissible == one_cc(c));
                if (!adm.admissible) {
                    CHECK_THROWS_AS(split(c, n), input_error);
                    continue;
                }
                CHECK(len <= n);  // admissible columns have at most n letters
                auto s = split(c, n);
                CHECK(s.left.size() == c.size());
                CHECK(s.right.size() == c.size());
                CHECK(column_strictly_increasing(s.left));
                CHECK(column_strictly_increasing(s.right));
                for (size_t k = 0; k < c.size(); ++k) {
                    CHECK(letter_leq(s.left[k], c[k]));
                    CHECK(letter_leq(c[k], s.right[k]));
                }
            }
        }
    }
}

TEST_CASE("five admissible two-letter columns at n = 2") {
    int count = 0;
    for (const Column& c : all_columns(2, 2))
        if (admissibility(c, 2).admissible) ++count;
    CHECK(count == 5);
}
