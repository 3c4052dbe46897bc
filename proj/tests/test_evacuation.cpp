#include <doctest.h>

#include "knc/evacuation.hpp"
#include "knc/keys.hpp"
#include "knc/kn_tableaux.hpp"
#include "knc/tableau_crystal.hpp"
#include "knc/word_crystal.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace knc;
using knc::testing::tab;

TEST_CASE("star word") {
    CHECK(star({-2, -1, 1, -3, -2}) == Word{2, 3, -1, 1, 2});
    CHECK(star({}) == Word{});
    for (const Word& w : knc::testing::all_words(2, 4)) CHECK(star(star(w)) == w);
}

TEST_CASE("worked evacuation example") {
    Tableau t = tab("1 -2/-3 -1/-2");
    CHECK(reading_word(t) == Word{-2, -1, 1, -3, -2});
    CHECK(evacuate(t, 3) == tab("2 2/3 3/-3"));
    // The rotation route gives the same and goes through the displayed skew tableau.
    CHECK(oracles::rotate_complement(t) == tab(". 2/1 3/2 -1"));
    CHECK(oracles::evacuate_by_rotation(t, 3) == tab("2 2/3 3/-3"));
}

TEST_CASE("evacuation is an involution that flips the crystal") {
    auto crystal = enumerate_kn({2, 1}, 2);
    for (const Tableau& t : crystal) {
        Tableau ev = evacuate(t, 2);
        CHECK(ev.shape == t.shape);
        // weight negation
        WeightVector wt = tableau_weight(t, 2), evwt = tableau_weight(ev, 2);
        for (size_t i = 0; i < wt.size(); ++i) CHECK(evwt[i] == -wt[i]);
        CHECK(evacuate(ev, 2) == t);
        // rotation oracle agreement
        CHECK(oracles::evacuate_by_rotation(t, 2) == ev);

        // anti-automorphism: (f_i T)^Ev = e_i (T^Ev), statistics swap
        for (int i = 1; i <= 2; ++i) {
            auto down = f_tab(t, 2, i);
            if (down) CHECK(evacuate(*down, 2) == e_tab(ev, 2, i));
            CHECK(epsilon(reading_word(ev), 2, i) == phi(reading_word(t), 2, i));
            CHECK(phi(reading_word(ev), 2, i) == epsilon(reading_word(t), 2, i));
        }
    }
}

TEST_CASE("evacuation of the key is the lowest vertex") {
    Tableau bottom = key_of({2, 1}, 2);
    for (;;) {
        bool moved = false;
        for (int i = 1; i <= 2 && !moved; ++i)
            if (auto down = f_tab(bottom, 2, i)) {
                bottom = *down;
                moved = true;
            }
        if (!moved) break;
    }
    CHECK(evacuate(key_of({2, 1}, 2), 2) == bottom);
}

TEST_CASE("evacuation exchanges right and left keys") {
    for (const Tableau& t : enumerate_kn({2, 1}, 2))
        CHECK(evacuate(right_key(t, 2), 2) == left_key(evacuate(t, 2), 2));
}
