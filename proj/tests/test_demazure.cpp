#include <doctest.h>

#include <set>

#include "knc/demazure.hpp"
#include "knc/keys.hpp"
#include "knc/kn_tableaux.hpp"
#include "test_helpers.hpp"

using namespace knc;
using knc::testing::tab;

TEST_CASE("demazure operator") {
    TableauSet top{key_of({2, 1}, 2)};
    auto string1 = demazure_op(top, 2, 1);
    CHECK(string1 == make_tableau_set({tab("1 1/2"), tab("1 2/2")}));
    auto string2 = demazure_op(top, 2, 2);
    CHECK(string2 == make_tableau_set({tab("1 1/2"), tab("1 1/-2")}));

    // X D_i contains X; the empty set is fixed.
    for (int i = 1; i <= 2; ++i) {
        for (const Tableau& t : string1) CHECK(tableau_set_contains(demazure_op(string1, 2, i), t));
        CHECK(demazure_op({}, 2, i).empty());
    }
}

TEST_CASE("demazure crystal of (1,-2)") {
    auto b = demazure_crystal(WeightVector{1, -2}, 2);
    CHECK(b == make_tableau_set(
                   {tab("1 1/2"), tab("1 2/2"), tab("1 1/-2"), tab("1 -2/2"), tab("1 -2/-2")}));
}

TEST_CASE("demazure crystal endpoints") {
    CHECK(demazure_crystal(WeightVector{2, 1}, 2) == TableauSet{key_of({2, 1}, 2)});
    auto all = demazure_crystal(WeightVector{-2, -1}, 2);
    CHECK(all.size() == 16);
    CHECK(all == enumerate_kn({2, 1}, 2));
}

TEST_CASE("atoms both ways, and the atom of (1,-2)") {
    CHECK(atom_via_keys({1, -2}, 2) == make_tableau_set({tab("1 -2/2"), tab("1 -2/-2")}));
    for (const WeightVector& v : orbit({2, 1}, 2)) {
        CHECK(atom_via_keys(v, 2) == atom_via_difference(v, 2));
    }
    CHECK(atom_via_keys({2, 1}, 2) == TableauSet{key_of({2, 1}, 2)});
}

TEST_CASE("atoms partition the crystal") {
    std::set<Word> seen;
    size_t total = 0;
    for (const WeightVector& v : orbit({2, 1}, 2)) {
        auto atom = atom_via_keys(v, 2);
        total += atom.size();
        for (const Tableau& t : atom) CHECK(seen.insert(reading_word(t)).second);
    }
    CHECK(total == enumerate_kn({2, 1}, 2).size());
}

TEST_CASE("demazure crystals are monotone along Bruhat order") {
    auto vs = orbit({2, 1}, 2);
    for (const WeightVector& u : vs)
        for (const WeightVector& v : vs) {
            if (!bruhat_leq(u, v, 2)) continue;
            auto bu = demazure_crystal(u, 2);
            auto bv = demazure_crystal(v, 2);
            for (const Tableau& t : bu) CHECK(tableau_set_contains(bv, t));
        }
}

TEST_CASE("demazure crystal is independent of the reduced word and the coset representative") {
    for (const WeightVector& v : orbit({2, 1}, 2)) {
        auto sigma = minimal_coset_rep(v, 2);
        auto reference = demazure_crystal(v, 2);
        for (const auto& word : reduced_words(sigma, 3)) {
            TableauSet x{key_of({2, 1}, 2)};
            for (int i : word) x = demazure_op(x, 2, i);
            CHECK(x == reference);
        }
        // Any other representative of the coset gives the same crystal.
        std::vector<SignedPermutation> all{SignedPermutation::identity(2)};
        std::set<std::vector<int>> seen{all[0].window};
        for (size_t k = 0; k < all.size(); ++k)
            for (int i = 1; i <= 2; ++i) {
                auto next = all[k] * SignedPermutation::generator(2, i);
                if (seen.insert(next.window).second) all.push_back(next);
            }
        for (const auto& rho : all) {
            if (act(WeightVector{2, 1}, rho) != v) continue;
            CHECK(demazure_crystal(Partition{2, 1}, rho, 2) == reference);
        }
    }
}

TEST_CASE("key polynomials and atoms") {
    auto kappa_top = key_polynomial(WeightVector{2, 1}, 2);
    CHECK(kappa_top == LaurentPolynomial{{{2, 1}, 1}});

    auto kappa = key_polynomial(WeightVector{1, -2}, 2);
    CHECK(kappa.size() == 5);
    for (const auto& [e, c] : kappa) CHECK(c == 1);
    CHECK(kappa.count({1, -2}));
    CHECK(kappa.count({2, 1}));

    // kappa_v = sum of atom polynomials over u <= v, over the whole orbit.
    auto vs = orbit({2, 1}, 2);
    for (const WeightVector& v : vs) {
        LaurentPolynomial sum;
        for (const WeightVector& u : vs)
            if (bruhat_leq(u, v, 2)) sum = polynomial_sum(sum, atom_polynomial(u, 2));
        CHECK(sum == key_polynomial(v, 2));
    }

    // Atom polynomials at x = 1 add up to the crystal size.
    long long total = 0;
    for (const WeightVector& v : vs)
        for (const auto& [e, c] : atom_polynomial(v, 2)) total += c;
    CHECK(total == 16);
}
