#include "knc/weyl.hpp"

#include <map>
#include <mutex>
#include <queue>
#include <set>

#include "knc/keys.hpp"
#include "knc/tableau.hpp"

namespace knc {

SignedPermutation::SignedPermutation(std::vector<int> w) : window(std::move(w)) {
    std::set<int> seen;
    for (int x : window) {
        if (x == 0 || std::abs(x) > rank() || !seen.insert(std::abs(x)).second)
            throw input_error("not a window: " + format_int_csv(window));
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<size_t>(i) - 1] = i;
    return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::generator(int n, int i) {
    if (i < 1 || i > n) throw input_error("generator index out of range");
    auto s = identity(n);
    if (i < n)
        std::swap(s.window[static_cast<size_t>(i) - 1], s.window[static_cast<size_t>(i)]);
    else
        s.window[static_cast<size_t>(n) - 1] = -n;
    return s;
}

SignedPermutation SignedPermutation::longest(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<size_t>(i) - 1] = -i;
    return SignedPermutation(std::move(w));
}

bool SignedPermutation::is_identity() const {
    for (int i = 1; i <= rank(); ++i)
        if (window[static_cast<size_t>(i) - 1] != i) return false;
    return true;
}

int SignedPermutation::image(int x) const {
    if (x == 0 || std::abs(x) > rank()) throw input_error("letter out of range");
    int a = window[static_cast<size_t>(std::abs(x)) - 1];
    return x > 0 ? a : -a;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& o) const {
    if (rank() != o.rank()) throw input_error("rank mismatch");
    std::vector<int> w(window.size());
    for (size_t i = 0; i < window.size(); ++i) w[i] = o.image(window[i]);
    return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::inverse() const {
    std::vector<int> w(window.size());
    for (size_t i = 0; i < window.size(); ++i) {
        int a = window[i];
        if (a > 0)
            w[static_cast<size_t>(a) - 1] = static_cast<int>(i) + 1;
        else
            w[static_cast<size_t>(-a) - 1] = -(static_cast<int>(i) + 1);
    }
    return SignedPermutation(std::move(w));
}

WeightVector act(const WeightVector& v, int i) {
    int n = static_cast<int>(v.size());
    if (i < 1 || i > n) throw input_error("generator index out of range");
    WeightVector out = v;
    if (i < n)
        std::swap(out[static_cast<size_t>(i) - 1], out[static_cast<size_t>(i)]);
    else
        out[static_cast<size_t>(n) - 1] = -out[static_cast<size_t>(n) - 1];
    return out;
}

WeightVector act(const WeightVector& v, const SignedPermutation& sigma) {
    if (static_cast<int>(v.size()) != sigma.rank()) throw input_error("rank mismatch");
    WeightVector out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        int a = sigma.window[i];
        out[static_cast<size_t>(std::abs(a)) - 1] = a > 0 ? v[i] : -v[i];
    }
    return out;
}

namespace {

// Cayley-graph BFS table for one rank: length, parent, generator to parent.
struct BnTable {
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> windows;
    std::vector<int> len;
    std::vector<int> parent;
    std::vector<int> parent_gen;
};

const BnTable& bn_table(int n) {
    static std::mutex mutex;
    static std::map<int, BnTable> tables;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = tables.find(n);
    if (it != tables.end()) return it->second;

    BnTable t;
    auto id = SignedPermutation::identity(n);
    t.index.emplace(id.window, 0);
    t.windows.push_back(id.window);
    t.len.push_back(0);
    t.parent.push_back(-1);
    t.parent_gen.push_back(0);
    std::queue<int> frontier;
    frontier.push(0);
    while (!frontier.empty()) {
        int x = frontier.front();
        frontier.pop();
        SignedPermutation sigma{std::vector<int>(t.windows[static_cast<size_t>(x)])};
        for (int i = 1; i <= n; ++i) {
            auto next = sigma * SignedPermutation::generator(n, i);
            auto [pos, fresh] = t.index.emplace(next.window, static_cast<int>(t.windows.size()));
            if (fresh) {
                t.windows.push_back(next.window);
                t.len.push_back(t.len[static_cast<size_t>(x)] + 1);
                t.parent.push_back(x);
                t.parent_gen.push_back(i);
                frontier.push(pos->second);
            }
        }
    }
    return tables.emplace(n, std::move(t)).first->second;
}

int table_index(const SignedPermutation& sigma) {
    const auto& t = bn_table(sigma.rank());
    auto it = t.index.find(sigma.window);
    if (it == t.index.end()) throw invariant_error("window missing from group table");
    return it->second;
}

}  // namespace

int length(const SignedPermutation& sigma) {
    return bn_table(sigma.rank()).len[static_cast<size_t>(table_index(sigma))];
}

std::vector<int> reduced_word(const SignedPermutation& sigma) {
    const auto& t = bn_table(sigma.rank());
    std::vector<int> word;
    for (int x = table_index(sigma); t.parent[static_cast<size_t>(x)] >= 0;
         x = t.parent[static_cast<size_t>(x)])
        word.push_back(t.parent_gen[static_cast<size_t>(x)]);
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<std::vector<int>> reduced_words(const SignedPermutation& sigma, int limit) {
    int n = sigma.rank();
    std::vector<std::vector<int>> out;
    std::vector<int> word;
    auto rec = [&](auto&& self, const SignedPermutation& x, int len) -> void {
        if (static_cast<int>(out.size()) >= limit) return;
        if (len == 0) {
            std::vector<int> w(word.rbegin(), word.rend());
            out.push_back(std::move(w));
            return;
        }
        for (int i = 1; i <= n; ++i) {
            auto prev = x * SignedPermutation::generator(n, i);
            if (length(prev) != len - 1) continue;
            word.push_back(i);
            self(self, prev, len - 1);
            word.pop_back();
        }
    };
    rec(rec, sigma, length(sigma));
    return out;
}

std::vector<WeightVector> orbit(const Partition& lambda, int n) {
    check_partition(lambda);
    WeightVector seed(lambda.begin(), lambda.end());
    seed.resize(static_cast<size_t>(n), 0);
    std::set<WeightVector> seen{seed};
    std::queue<WeightVector> frontier;
    frontier.push(seed);
    while (!frontier.empty()) {
        WeightVector v = frontier.front();
        frontier.pop();
        for (int i = 1; i <= n; ++i) {
            WeightVector next = act(v, i);
            if (seen.insert(next).second) frontier.push(next);
        }
    }
    return {seen.begin(), seen.end()};
}

namespace {

Partition sorted_abs(const WeightVector& v) {
    Partition lambda;
    lambda.reserve(v.size());
    for (int x : v) lambda.push_back(std::abs(x));
    std::sort(lambda.begin(), lambda.end(), std::greater<int>());
    return lambda;
}

}  // namespace

SignedPermutation minimal_coset_rep(const WeightVector& v, int n) {
    if (static_cast<int>(v.size()) != n) throw input_error("weight vector must have length rank");
    Tableau key = key_of(v, n);

    // Read the key behind a prepended column 1..n, first occurrence of each
    // absolute value only.
    std::vector<int> window;
    std::set<int> seen;
    auto take = [&](Letter x) {
        if (seen.insert(std::abs(x)).second) window.push_back(x);
    };
    for (const Letter x : reading_word(key)) take(x);
    for (int i = 1; i <= n; ++i) take(i);

    SignedPermutation sigma{std::move(window)};
    Partition lambda = sorted_abs(v);
    if (act(WeightVector(lambda.begin(), lambda.end()), sigma) != v)
        throw invariant_error("coset representative does not map the shape to its weight");
    return sigma;
}

bool bruhat_leq(const WeightVector& v, const WeightVector& u, int n) {
    if (sorted_abs(v) != sorted_abs(u))
        throw input_error("weight vectors lie in different orbits");
    Tableau kv = key_of(v, n), ku = key_of(u, n);
    for (size_t j = 0; j < kv.columns.size(); ++j)
        for (size_t r = 0; r < kv.columns[j].size(); ++r)
            if (letter_less(ku.columns[j][r], kv.columns[j][r])) return false;
    return true;
}

bool bruhat_leq_subword(const SignedPermutation& sigma, const SignedPermutation& rho) {
    if (sigma.rank() != rho.rank()) throw input_error("rank mismatch");
    int n = sigma.rank();
    std::vector<int> word = reduced_word(rho);
    std::set<SignedPermutation> reachable{SignedPermutation::identity(n)};
    for (int i : word) {
        std::set<SignedPermutation> next = reachable;
        for (const auto& x : reachable) {
            auto y = x * SignedPermutation::generator(n, i);
            if (length(y) > length(x)) next.insert(y);
        }
        reachable = std::move(next);
    }
    return reachable.count(sigma) > 0;
}

}  // namespace knc
