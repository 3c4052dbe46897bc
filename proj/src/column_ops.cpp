#include "knc/column_ops.hpp"

#include <set>

namespace knc {

Admissibility admissibility(const Column& c, int n) {
    check_word(c, n);
    if (!column_strictly_increasing(c)) throw input_error("column is not strictly increasing");
    std::set<int> present(c.begin(), c.end());
    for (int z = 1; z <= n; ++z) {
        if (!present.count(z) || !present.count(-z)) continue;
        int below = 0;
        for (Letter x : c)
            if (x <= z && x >= -z) ++below;  // |x| <= z
        if (below > z) return {false, z};
    }
    return {true, 0};
}

SplitResult split(const Column& c, int n) {
    auto adm = admissibility(c, n);
    if (!adm)
        throw input_error("column not splittable: not admissible at " + std::to_string(adm.failure_z));
    std::set<int> present(c.begin(), c.end());
    std::vector<int> zs;  // decreasing
    for (int z = n; z >= 1; --z)
        if (present.count(z) && present.count(-z)) zs.push_back(z);

    SplitResult out;
    int bound = n + 1;  // t_i < min(t_{i-1}, z_i)
    for (int z : zs) {
        int limit = std::min(bound, z);
        int t = 0;
        for (int cand = limit - 1; cand >= 1; --cand) {
            if (present.count(cand) || present.count(-cand)) continue;
            t = cand;
            break;
        }
        if (t == 0) throw invariant_error("admissible column has no split candidate");
        out.pairs.emplace_back(z, t);
        bound = t;
    }

    out.left = c;
    out.right = c;
    for (auto [z, t] : out.pairs) {
        for (Letter& x : out.left)
            if (x == z) x = t;
        for (Letter& x : out.right)
            if (x == -z) x = -t;
    }
    std::sort(out.left.begin(), out.left.end(), letter_less);
    std::sort(out.right.begin(), out.right.end(), letter_less);
    return out;
}

}  // namespace knc
