#include "knc/word_crystal.hpp"

namespace knc {

std::optional<Letter> f_letter(Letter x, int n, int i) {
    if (i < 1 || i > n) throw input_error("operator index out of range");
    if (i < n) {
        if (x == i) return i + 1;
        if (x == -(i + 1)) return -i;
    } else {
        if (x == n) return -n;
    }
    return std::nullopt;
}

std::optional<Letter> e_letter(Letter x, int n, int i) {
    if (i < 1 || i > n) throw input_error("operator index out of range");
    if (i < n) {
        if (x == i + 1) return i;
        if (x == -i) return -(i + 1);
    } else {
        if (x == -n) return n;
    }
    return std::nullopt;
}

namespace {

// Positions of the surviving '+' (leftmost) and '-' (rightmost) after
// bracket cancellation, or -1.
struct Signature {
    int f_pos = -1;
    int e_pos = -1;
};

Signature signature(const Word& w, int n, int i) {
    Signature sig;
    std::vector<int> plus_stack;
    for (size_t p = 0; p < w.size(); ++p) {
        if (f_letter(w[p], n, i)) {
            plus_stack.push_back(static_cast<int>(p));
        } else if (e_letter(w[p], n, i)) {
            if (!plus_stack.empty())
                plus_stack.pop_back();
            else
                sig.e_pos = static_cast<int>(p);
        }
    }
    if (!plus_stack.empty()) sig.f_pos = plus_stack.front();
    return sig;
}

}  // namespace

std::optional<Word> f_word(const Word& w, int n, int i) {
    check_word(w, n);
    auto sig = signature(w, n, i);
    if (sig.f_pos < 0) return std::nullopt;
    Word out = w;
    out[static_cast<size_t>(sig.f_pos)] = *f_letter(w[static_cast<size_t>(sig.f_pos)], n, i);
    return out;
}

std::optional<Word> e_word(const Word& w, int n, int i) {
    check_word(w, n);
    auto sig = signature(w, n, i);
    if (sig.e_pos < 0) return std::nullopt;
    Word out = w;
    out[static_cast<size_t>(sig.e_pos)] = *e_letter(w[static_cast<size_t>(sig.e_pos)], n, i);
    return out;
}

// -- reference tensor fold ----------------------------------------------------
// b[0..k) is the reversed word; the fold is (((b_0 (x) b_1) (x) b_2) ...).
// f(B (x) c) = f(B) (x) c  when phi(c) <= eps(B),  B (x) f(c) otherwise;
// e(B (x) c) = e(B) (x) c  when phi(c) <  eps(B),  B (x) e(c) otherwise.

namespace {

struct FoldRef {
    int n, i;

    int phi_letter(Letter x) const { return f_letter(x, n, i) ? 1 : 0; }

    int e_pos(const std::vector<Letter>& b, size_t len) const {
        if (len == 0) return -1;
        Letter last = b[len - 1];
        if (phi_letter(last) < eps(b, len - 1)) return e_pos(b, len - 1);
        return e_letter(last, n, i) ? static_cast<int>(len) - 1 : -1;
    }

    int eps(const std::vector<Letter>& b, size_t len) const {
        std::vector<Letter> copy(b.begin(), b.begin() + static_cast<long>(len));
        int count = 0;
        for (;;) {
            int p = e_pos(copy, copy.size());
            if (p < 0) return count;
            copy[static_cast<size_t>(p)] = *e_letter(copy[static_cast<size_t>(p)], n, i);
            ++count;
        }
    }

    int f_pos(const std::vector<Letter>& b, size_t len) const {
        if (len == 0) return -1;
        Letter last = b[len - 1];
        if (phi_letter(last) <= eps(b, len - 1)) return f_pos(b, len - 1);
        return f_letter(last, n, i) ? static_cast<int>(len) - 1 : -1;
    }
};

}  // namespace

std::optional<Word> f_word_ref(const Word& w, int n, int i) {
    std::vector<Letter> b(w.rbegin(), w.rend());
    FoldRef fold{n, i};
    int p = fold.f_pos(b, b.size());
    if (p < 0) return std::nullopt;
    b[static_cast<size_t>(p)] = *f_letter(b[static_cast<size_t>(p)], n, i);
    return Word(b.rbegin(), b.rend());
}

std::optional<Word> e_word_ref(const Word& w, int n, int i) {
    std::vector<Letter> b(w.rbegin(), w.rend());
    FoldRef fold{n, i};
    int p = fold.e_pos(b, b.size());
    if (p < 0) return std::nullopt;
    b[static_cast<size_t>(p)] = *e_letter(b[static_cast<size_t>(p)], n, i);
    return Word(b.rbegin(), b.rend());
}

int epsilon(const Word& w, int n, int i) {
    int count = 0;
    Word cur = w;
    while (auto next = e_word(cur, n, i)) {
        cur = std::move(*next);
        ++count;
    }
    return count;
}

int phi(const Word& w, int n, int i) {
    int count = 0;
    Word cur = w;
    while (auto next = f_word(cur, n, i)) {
        cur = std::move(*next);
        ++count;
    }
    return count;
}

int coroot_pairing(const WeightVector& wt, int i) {
    int n = static_cast<int>(wt.size());
    if (i < 1 || i > n) throw input_error("operator index out of range");
    if (i < n) return wt[static_cast<size_t>(i) - 1] - wt[static_cast<size_t>(i)];
    return wt[static_cast<size_t>(n) - 1];
}

WeightVector simple_root(int n, int i) {
    WeightVector a(static_cast<size_t>(n), 0);
    if (i < 1 || i > n) throw input_error("operator index out of range");
    if (i < n) {
        a[static_cast<size_t>(i) - 1] = 1;
        a[static_cast<size_t>(i)] = -1;
    } else {
        a[static_cast<size_t>(n) - 1] = 2;
    }
    return a;
}

bool is_highest(const Word& w, int n) {
    for (int i = 1; i <= n; ++i)
        if (e_word(w, n, i)) return false;
    return true;
}

HighestLift highest_lift(const Word& w, int n) {
    HighestLift out{w, {}};
    for (;;) {
        bool moved = false;
        for (int i = 1; i <= n && !moved; ++i) {
            if (auto up = e_word(out.highest, n, i)) {
                out.highest = std::move(*up);
                out.log.push_back({i, true});
                moved = true;
            }
        }
        if (!moved) return out;
    }
}

}  // namespace knc
