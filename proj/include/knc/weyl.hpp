#pragma once

#include "knc/core.hpp"

namespace knc {

// The hyperoctahedral group B_n (Weyl group of C_n) as signed permutations in
// window notation [a_1 ... a_n], a_i = image of i, acting on the right.
struct SignedPermutation {
    std::vector<int> window;

    SignedPermutation() = default;
    explicit SignedPermutation(std::vector<int> w);

    static SignedPermutation identity(int n);
    static SignedPermutation generator(int n, int i);  // s_i
    static SignedPermutation longest(int n);           // w_0 = [-1,...,-n]

    int rank() const { return static_cast<int>(window.size()); }
    bool is_identity() const;

    // Image of a letter (odd map: (-x) -> -(x)).
    int image(int x) const;

    // this * o = apply this first, then o.
    SignedPermutation operator*(const SignedPermutation& o) const;
    SignedPermutation inverse() const;
    bool operator==(const SignedPermutation& o) const { return window == o.window; }
    bool operator<(const SignedPermutation& o) const { return window < o.window; }
};

// Right action on weight vectors: v s_i swaps entries i, i+1 (i < n) or
// negates entry n (i = n); general elements compose.
WeightVector act(const WeightVector& v, int i);
WeightVector act(const WeightVector& v, const SignedPermutation& sigma);

// Graph distance from the identity in the Cayley graph on s_1..s_n.
int length(const SignedPermutation& sigma);
std::vector<int> reduced_word(const SignedPermutation& sigma);

// Up to `limit` distinct reduced words (DFS over geodesics).
std::vector<std::vector<int>> reduced_words(const SignedPermutation& sigma, int limit);

// Orbit of a partition under B_n, canonically sorted.
std::vector<WeightVector> orbit(const Partition& lambda, int n);

// Minimal-length representative of the coset {sigma : lambda sigma = v},
// built by reading the key tableau of v behind a prepended column 1..n and
// keeping the first occurrence of each absolute value.
SignedPermutation minimal_coset_rep(const WeightVector& v, int n);

// Tableau criterion for the Bruhat order on orbit vectors: entrywise
// comparison of key tableaux.  Throws input_error when v and u lie in
// different orbits.
bool bruhat_leq(const WeightVector& v, const WeightVector& u, int n);

// Subword criterion on one fixed reduced word of the larger element; oracle
// for the tableau criterion.
bool bruhat_leq_subword(const SignedPermutation& sigma, const SignedPermutation& rho);

}  // namespace knc
