#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "heckeposet/composition.hpp"

using namespace heckeposet;

TEST_CASE("construction validates parts") {
    CHECK_THROWS_AS(Composition({2, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Composition({-1}), std::invalid_argument);
    CHECK(Composition().empty());
    CHECK(Composition().size() == 0);
    Composition a({2, 3, 1});
    CHECK(a.size() == 6);
    CHECK(a.length() == 3);
    CHECK(a.part(2) == 3);
    CHECK(a.to_string() == "(2,3,1)");
    CHECK(Composition().to_string() == "()");
}

TEST_CASE("set_of and comp_of invert each other") {
    Composition a({2, 3, 1});
    CHECK(a.set_of() == std::vector<int>{2, 5});
    CHECK(comp_of({2, 5}, 6) == a);
    CHECK(comp_of({}, 4) == Composition({4}));
    CHECK(comp_of({1, 2, 3}, 4) == Composition({1, 1, 1, 1}));
    for (int n = 0; n <= 7; ++n)
        for (const auto& alpha : compositions_of(n)) CHECK(comp_of(alpha.set_of(), n) == alpha);
}

TEST_CASE("reverse and complement") {
    Composition a({2, 3, 1});
    CHECK(a.reverse() == Composition({1, 3, 2}));
    CHECK(a.complement() == Composition({1, 2, 1, 2}));
    // set(complement) is the complement of set in [n-1]
    for (const auto& alpha : compositions_of(6)) {
        std::vector<int> sv = alpha.set_of();
        std::vector<int> cv = alpha.complement().set_of();
        std::set<int> s(sv.begin(), sv.end());
        std::set<int> c(cv.begin(), cv.end());
        for (int i = 1; i <= 5; ++i) CHECK(s.count(i) + c.count(i) == 1);
        CHECK(alpha.reverse().reverse() == alpha);
        CHECK(alpha.complement().complement() == alpha);
        // the two operations commute
        CHECK(alpha.reverse().complement() == alpha.complement().reverse());
    }
}

TEST_CASE("z and pi statistics") {
    CHECK(z_stat(Composition({2, 3, 1})) == 6);
    CHECK(z_stat(Composition({1, 1, 2})) == 4);
    CHECK(z_stat(Composition({2, 2, 2})) == 48);  // 2^3 * 3!
    CHECK(pi_stat(Composition({2, 3, 1})) == 60);  // 2 * 5 * 6
    CHECK(pi_stat(Composition({2})) == 2);
    CHECK(pi_stat(Composition({3, 1})) == 12);

    // blockwise pi values for the coarsenings of (2,3,1)
    Composition a({2, 3, 1});
    CHECK(pi_pair(a, a) == 6);
    CHECK(pi_pair(a, Composition({5, 1})) == 10);
    CHECK(pi_pair(a, Composition({2, 4})) == 24);
    CHECK(pi_pair(a, Composition({6})) == 60);
    CHECK_THROWS_AS(pi_pair(a, Composition({1, 5})), std::invalid_argument);
}

TEST_CASE("refinement order") {
    CHECK(refines(Composition({1, 1, 2}), Composition({2, 2})));
    CHECK(refines(Composition({1, 1, 2}), Composition({4})));
    CHECK(!refines(Composition({2, 2}), Composition({1, 1, 2})));
    CHECK_THROWS_AS(refines(Composition({2}), Composition({3})), std::invalid_argument);

    for (const auto& alpha : compositions_of(5)) {
        for (const auto& beta : refinements_of(alpha)) CHECK(refines(beta, alpha));
        for (const auto& beta : coarsenings_of(alpha)) CHECK(refines(alpha, beta));
        // counts are 2^(free cut points)
        CHECK(static_cast<int>(refinements_of(alpha).size()) ==
              1 << (4 - static_cast<int>(alpha.set_of().size())));
        CHECK(static_cast<int>(coarsenings_of(alpha).size()) ==
              1 << static_cast<int>(alpha.set_of().size()));
    }
}

TEST_CASE("sort_to_partition") {
    CHECK(sort_to_partition(Composition({1, 3, 2})).parts() == std::vector<int>{3, 2, 1});
    CHECK(sort_to_partition(Composition({4})).parts() == std::vector<int>{4});
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
}

TEST_CASE("compositions_of enumerates in graded lex order") {
    CHECK(compositions_of(0).size() == 1);
    CHECK(compositions_of(1).size() == 1);
    for (int n = 2; n <= 9; ++n) {
        auto all = compositions_of(n);
        CHECK(static_cast<int>(all.size()) == 1 << (n - 1));
        for (size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i] < all[i + 1]);
    }
}

TEST_CASE("string exchange format") {
    CHECK(composition_from_string("2,1,2") == Composition({2, 1, 2}));
    CHECK(composition_from_string("") == Composition());
    CHECK(composition_to_plain_string(Composition({2, 1, 2})) == "2,1,2");
    CHECK_THROWS_AS(composition_from_string("2,x"), std::invalid_argument);
    CHECK_THROWS_AS(composition_from_string("0,1"), std::invalid_argument);
}
