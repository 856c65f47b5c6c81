#pragma once

#include "heckeposet/poset.hpp"
#include "heckeposet/qsym.hpp"

#include <utility>
#include <vector>

namespace heckeposet {

// Which family of degenerate Hecke algebra generators an action table speaks:
// PiBar entries square to their own negative, Pi entries are idempotent.
enum class GenFamily { Pi, PiBar };

struct ActionEntry {
    enum Kind { Zero, Self, NegSelf, Move } kind = Zero;
    int target = -1;  // basis index, meaningful only for Move
    bool operator==(const ActionEntry&) const = default;
};

// A module over H_{n}(0) whose basis is a set of permutations and whose
// generators send each basis element to plus or minus a basis element or 0.
// The table act[i-1][b] records the image of basis element b under the
// generator with subscript i (acting on the stored side).
class CombinatorialModule {
public:
    Side side = Side::Right;
    GenFamily family = GenFamily::PiBar;
    std::vector<Permutation> basis;  // sorted
    std::vector<std::vector<ActionEntry>> act;

    int dim() const { return static_cast<int>(basis.size()); }
    int n() const { return basis.empty() ? 0 : basis.front().n(); }
    int generator_count() const { return n() > 1 ? n() - 1 : 0; }
    int index_of(const Permutation& g) const;

    bool operator==(const CombinatorialModule&) const = default;

    // Dense integer matrix of one generator, rows indexed by source basis
    // element. Used by relation and intertwiner checks.
    std::vector<std::vector<long long>> matrix(int i) const;
};

// Right action on the linear extensions of P: gamma maps to its own negative
// when i is a right descent, to gamma s_i when that word still extends P,
// and to zero otherwise.
CombinatorialModule poset_module(const Poset& p);

// Same basis with the idempotent generators: gamma is fixed when i is a
// right descent, otherwise moves to gamma s_i or dies.
CombinatorialModule poset_module_bar(const Poset& p);

// The four weak Bruhat interval modules, chosen by acting side and
// generator family.
CombinatorialModule interval_module(Side side, GenFamily family,
                                    const Permutation& sigma, const Permutation& rho);
CombinatorialModule interval_module(const WeakInterval& iv, GenFamily family);

// Quadratic, braid and far commutation relations as exact identities of the
// generator action maps.
bool check_relations(const CombinatorialModule& m);

// Sum of fundamentals indexed by the length-filtration subquotients.
QsymElement characteristic(const CombinatorialModule& m);
QsymElement characteristic_of_poset_module(const Poset& p);

// Multiset of fundamental indices obtained by recursively splitting P at an
// incomparable pair until only chains remain; sorted with repeats.
std::vector<Composition> composition_series_multiset(const Poset& p);

// Pairs (standardized lower subposet of size m, standardized complement).
std::vector<std::pair<Poset, Poset>> restrict(const Poset& p, int m);

enum class Twist { Phi, Theta, Chi };

// A module isomorphism witnessing one of the three classical twists of a
// poset module: the target module together with the basis bijection
// source index -> (target index, sign).
struct TwistData {
    Twist which;
    CombinatorialModule source;  // always poset_module(p)
    CombinatorialModule target;
    std::vector<int> image;
    std::vector<int> sign;
};

// Phi conjugates by w0 on both sides and lands in the relabeled-reversed
// poset; Theta flips generator signs onto the idempotent family; Chi is the
// duality twist onto the relabeled poset.
TwistData twist(const Poset& p, Twist which);

// Endpoints (w0 rho^{-1}, w0 sigma^{-1}) of the right interval carrying the
// dual of the left interval module of [sigma, rho]_L.
std::pair<Permutation, Permutation> functor_F(const Permutation& sigma, const Permutation& rho);

// The dual of B_L(sigma, rho) as a right PiBar-family table on the dual
// basis, each dual vector labeled by its underlying interval element.
CombinatorialModule functor_F_module(const Permutation& sigma, const Permutation& rho);

}  // namespace heckeposet
