#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "heckeposet/ppart.hpp"

using namespace heckeposet;

namespace {

Poset running() { return Poset(5, {{5, 1}, {1, 3}, {1, 4}, {2, 4}}); }

QsymElement starred_as_monomial(const Poset& p) {
    QsymElement out;
    for (const auto& [beta, c] : kp_in_psi_via_starred(p)) {
        QsymElement term = psi_in_monomial(beta);
        term *= Rational(c, z_stat(beta));
        out += term;
    }
    return out;
}

}  // namespace

TEST_CASE("generating function of chains and antichains") {
    Poset chain(4, {{1, 2}, {2, 3}, {3, 4}});
    QsymElement f4;
    f4.add(Composition({4}), Rational(1));
    CHECK(kp_fundamental(chain) == f4);

    Poset drop(2, {{2, 1}});  // strict relation: larger label below
    QsymElement f11;
    f11.add(Composition({1, 1}), Rational(1));
    CHECK(kp_fundamental(drop) == f11);

    Poset anti(3, {});
    QsymElement sum;
    for (const auto& g : all_permutations(3))
        sum.add(g.descent_composition(), Rational(1));
    CHECK(kp_fundamental(anti) == sum);
}

TEST_CASE("running poset expansion in the fundamental basis") {
    QsymElement k = kp_fundamental(running());
    CHECK(k.terms().size() == 7);
    CHECK(k.coeff(Composition({1, 1, 2, 1})) == 1);
    CHECK(k.coeff(Composition({2, 3})) == 1);
    CHECK(k.coeff(Composition({5})) == 0);
}

TEST_CASE("starred maps carry one star per level") {
    Poset chain(2, {{1, 2}});
    for (const auto& beta : compositions_of(2))
        for (const auto& s : enumerate_starred(chain, beta)) {
            CHECK(s.wt() == beta);
            std::vector<int> amb = s.amb();
            CHECK(static_cast<int>(amb.size()) == beta.length());
            for (int count : amb) CHECK(count == 1);
        }
}

TEST_CASE("signed starred counts match the exact linear solve") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : all_posets_on(n))
            CHECK(starred_as_monomial(p) == fundamental_to_monomial(kp_fundamental(p)));
    CHECK(starred_as_monomial(running()) ==
          fundamental_to_monomial(kp_fundamental(running())));
}

TEST_CASE("monomial truncation against basis specialization") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& p : all_posets_on(n))
            for (int vars = 1; vars <= 3; ++vars)
                CHECK(kp_monomial_truncation(p, vars) ==
                      specialize_monomial_basis(fundamental_to_monomial(kp_fundamental(p)), vars));
    CHECK(kp_monomial_truncation(running(), 3) ==
          specialize_monomial_basis(fundamental_to_monomial(kp_fundamental(running())), 3));
}

TEST_CASE("enumeration respects the size cap") {
    Poset big(10, {});
    CHECK_THROWS_AS(kp_in_psi_via_starred(big), std::length_error);
    CHECK_THROWS_AS(kp_monomial_truncation(big, 2), std::length_error);
    CHECK_THROWS_AS(enumerate_starred(Poset(2, {}), Composition({3})),
                    std::invalid_argument);
}
