#pragma once

#include "heckeposet/poset.hpp"
#include "heckeposet/qsym.hpp"

#include <map>
#include <vector>

namespace heckeposet {

// One value of a starred map: a level in [k] together with a tag saying the
// value is negative, starred (ambiguous in the underlying enriched map), or
// positive.
struct StarredValue {
    int level = 0;
    enum Tag { Neg, Star, Pos } tag = Pos;
    auto operator<=>(const StarredValue&) const = default;
};

struct StarredPPartition {
    std::vector<StarredValue> values;  // indexed by poset element - 1
    Composition wt() const;
    std::vector<int> amb() const;  // starred elements per level
    int sign() const;              // parity of negative values
    auto operator<=>(const StarredPPartition&) const = default;
};

// All starred maps on P of weight beta carrying exactly one star per level.
// Enumerates sign-and-level assignments along a topological order, stars the
// ambiguous elements of each, and deduplicates.
std::vector<StarredPPartition> enumerate_starred(const Poset& p, const Composition& beta,
                                                 int enumeration_cap = 9);

// Signed counts c_beta of starred maps; the generating function of P equals
// the sum of c_beta Psi_beta / z_beta.
std::map<Composition, long long> kp_in_psi_via_starred(const Poset& p, int enumeration_cap = 9);

// Generating function of P in the fundamental basis, from the descent
// compositions of the linear extensions.
QsymElement kp_fundamental(const Poset& p);

using ExponentVector = std::vector<int>;
using Polynomial = std::map<ExponentVector, Int>;

// Truncation of the generating function to finitely many variables: sum of
// monomials over maps f with f(u) <= f(v) along covers u below v, strict
// when the label of u exceeds the label of v.
Polynomial kp_monomial_truncation(const Poset& p, int max_vars, int enumeration_cap = 9);

// The same truncation computed from a monomial-basis element, for
// cross-checking the combinatorial enumeration.
Polynomial specialize_monomial_basis(const QsymElement& monomial, int max_vars);

}  // namespace heckeposet
