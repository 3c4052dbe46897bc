#pragma once

#include <map>

#include "knc/tableau_crystal.hpp"
#include "knc/weyl.hpp"

namespace knc {

// Canonically sorted set of KN tableaux of one shape.
using TableauSet = std::vector<Tableau>;

TableauSet make_tableau_set(std::vector<Tableau> ts);
bool tableau_set_contains(const TableauSet& s, const Tableau& t);

// Demazure operator: down-closure of X along i-strings inside the ambient
// crystal ({x : e_i^k(x) in X for some k >= 0}).
TableauSet demazure_op(const TableauSet& x, int n, int i);

// B_v = {key(lambda)} D_{i_1} ... D_{i_l} along a reduced word of the minimal
// coset representative of v (independent of the choices).
TableauSet demazure_crystal(const WeightVector& v, int n);
TableauSet demazure_crystal(const Partition& lambda, const SignedPermutation& sigma, int n);

// Demazure atom, two ways: fiber of the right key map over key_of(v), and
// B_v minus the union of all strictly lower Demazure crystals.
TableauSet atom_via_keys(const WeightVector& v, int n);
TableauSet atom_via_difference(const WeightVector& v, int n);

// Laurent polynomials as finitely supported maps exponent -> coefficient.
using LaurentPolynomial = std::map<std::vector<int>, long long>;

LaurentPolynomial weight_generating_function(const TableauSet& s, int n);
LaurentPolynomial key_polynomial(const WeightVector& v, int n);
LaurentPolynomial atom_polynomial(const WeightVector& v, int n);

LaurentPolynomial polynomial_sum(const LaurentPolynomial& a, const LaurentPolynomial& b);
std::string format_polynomial(const LaurentPolynomial& p);

}  // namespace knc
