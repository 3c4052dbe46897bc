#include "knc/demazure.hpp"

#include "knc/keys.hpp"
#include "knc/kn_tableaux.hpp"

namespace knc {

namespace {

Partition sorted_abs(const WeightVector& v) {
    Partition lambda;
    lambda.reserve(v.size());
    for (int x : v) lambda.push_back(std::abs(x));
    std::sort(lambda.begin(), lambda.end(), std::greater<int>());
    return lambda;
}

}  // namespace

TableauSet make_tableau_set(std::vector<Tableau> ts) {
    std::sort(ts.begin(), ts.end(), tableau_less);
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
}

bool tableau_set_contains(const TableauSet& s, const Tableau& t) {
    auto it = std::lower_bound(s.begin(), s.end(), t, tableau_less);
    return it != s.end() && *it == t;
}

TableauSet demazure_op(const TableauSet& x, int n, int i) {
    std::vector<Tableau> out = x;
    for (const Tableau& t : x) {
        Tableau cur = t;
        while (auto next = f_tab(cur, n, i)) {
            cur = std::move(*next);
            out.push_back(cur);
        }
    }
    return make_tableau_set(std::move(out));
}

TableauSet demazure_crystal(const Partition& lambda, const SignedPermutation& sigma, int n) {
    TableauSet x{key_of(WeightVector(lambda.begin(), lambda.end()), n)};
    for (int i : reduced_word(sigma)) x = demazure_op(x, n, i);
    return x;
}

TableauSet demazure_crystal(const WeightVector& v, int n) {
    return demazure_crystal(sorted_abs(v), minimal_coset_rep(v, n), n);
}

TableauSet atom_via_keys(const WeightVector& v, int n) {
    Tableau target = key_of(v, n);
    std::vector<Tableau> out;
    for (const Tableau& t : enumerate_kn(sorted_abs(v), n))
        if (right_key(t, n) == target) out.push_back(t);
    return make_tableau_set(std::move(out));
}

TableauSet atom_via_difference(const WeightVector& v, int n) {
    TableauSet full = demazure_crystal(v, n);
    std::vector<Tableau> lower;
    for (const WeightVector& u : orbit(sorted_abs(v), n)) {
        if (u == v || !bruhat_leq(u, v, n)) continue;
        TableauSet bu = demazure_crystal(u, n);
        lower.insert(lower.end(), bu.begin(), bu.end());
    }
    TableauSet cut = make_tableau_set(std::move(lower));
    std::vector<Tableau> out;
    for (const Tableau& t : full)
        if (!tableau_set_contains(cut, t)) out.push_back(t);
    return make_tableau_set(std::move(out));
}

LaurentPolynomial weight_generating_function(const TableauSet& s, int n) {
    LaurentPolynomial p;
    for (const Tableau& t : s) ++p[tableau_weight(t, n)];
    return p;
}

LaurentPolynomial key_polynomial(const WeightVector& v, int n) {
    return weight_generating_function(demazure_crystal(v, n), n);
}

LaurentPolynomial atom_polynomial(const WeightVector& v, int n) {
    return weight_generating_function(atom_via_keys(v, n), n);
}

LaurentPolynomial polynomial_sum(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial out = a;
    for (const auto& [e, c] : b) out[e] += c;
    return out;
}

std::string format_polynomial(const LaurentPolynomial& p) {
    std::string out;
    for (const auto& [e, c] : p) {
        out += std::to_string(c);
        out += " x^(" + format_int_csv(e) + ")\n";
    }
    return out;
}

}  // namespace knc
