#pragma once

#include <optional>

#include "knc/core.hpp"

namespace knc {

// Kashiwara operators on the C_n crystal of words.
//
// The standard crystal is the chain
//   1 -1-> 2 -2-> ... -(n-1)-> n -n-> -n -(n-1)-> ... -1-> -1,
// and a word w_1...w_k carries the tensor structure in which the two-factor
// rule lowers the left factor b of (b (x) c) exactly when phi_i(c) <= eps_i(b).
// Under that rule the word w_1...w_k, read with its last letter as the
// leftmost tensor factor, behaves identically to the left-to-right tensor
// w_1 (x) ... (x) w_k under Kashiwara's classical convention, so f_i/e_i act
// at the position selected by the usual signature (bracketing) rule:
// write '+' for every letter f_i moves and '-' for every letter e_i moves,
// cancel adjacent "+-" pairs, then f_i acts on the leftmost surviving '+'
// and e_i on the rightmost surviving '-'.
//
// f_word/e_word use the signature rule; f_word_ref/e_word_ref implement the
// folded tensor product literally and exist to pin the convention in tests.

std::optional<Letter> f_letter(Letter x, int n, int i);
std::optional<Letter> e_letter(Letter x, int n, int i);

std::optional<Word> f_word(const Word& w, int n, int i);
std::optional<Word> e_word(const Word& w, int n, int i);

// Reference implementations (exponential in |w|; tests only).
std::optional<Word> f_word_ref(const Word& w, int n, int i);
std::optional<Word> e_word_ref(const Word& w, int n, int i);

// Maximal numbers of applications, by repeated application of e_word/f_word.
int epsilon(const Word& w, int n, int i);
int phi(const Word& w, int n, int i);

// Pairing with the i-th simple coroot: wt_i - wt_{i+1} for i < n, wt_n for i = n
// (simple roots alpha_i = e_i - e_{i+1}, alpha_n = 2 e_n).
int coroot_pairing(const WeightVector& wt, int i);
WeightVector simple_root(int n, int i);

bool is_highest(const Word& w, int n);

// One raising/lowering step; replaying a log reproduces the recorded endpoint.
struct OperatorStep {
    int index;
    bool raise;
};
using OperatorLog = std::vector<OperatorStep>;

struct HighestLift {
    Word highest;
    OperatorLog log;  // raising steps, in the order they were applied
};

// Applies raising operators (smallest index first) until none applies. The
// endpoint is the unique highest-weight word of the component.
HighestLift highest_lift(const Word& w, int n);

}  // namespace knc
