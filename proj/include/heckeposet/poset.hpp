#pragma once

#include "heckeposet/permutation.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace heckeposet {

// A finite poset on the labeled ground set [n], n <= 32. The strict order
// relation is kept transitively closed; construction rejects cycles.
class Poset {
public:
    Poset() = default;
    Poset(int n, const std::vector<std::pair<int, int>>& relations);

    int n() const { return n_; }
    bool less(int u, int v) const;  // u strictly below v
    bool comparable(int u, int v) const;
    std::vector<std::pair<int, int>> relations() const;
    std::vector<std::pair<int, int>> covers() const;

    // Sequences v_1,...,v_n hitting every element once with smaller poset
    // elements first, read as one-line words v_1 v_2 ... v_n.
    std::vector<Permutation> linear_extensions() const;
    std::vector<Permutation> sigma_R() const { return linear_extensions(); }
    std::vector<Permutation> sigma_L() const;

    // The two one-relation refinements splitting an incomparable pair:
    // first adds v below u, second adds u below v. Their extension sets
    // partition the extensions of this poset.
    std::pair<Poset, Poset> split(int u, int v) const;

    std::vector<std::vector<int>> lower_subposets(int m) const;
    // Induced subposet relabeled order-preservingly onto [|subset|].
    Poset standardize(const std::vector<int>& subset) const;

    Poset bar() const;   // relabel i -> n + 1 - i
    Poset star() const;  // reverse all relations

    // No triple u, v, w with v below w, u incomparable to both, and u's label
    // strictly between the labels of v and w.
    bool is_regular() const;

    std::string to_string() const;

    bool operator==(const Poset& o) const = default;
    auto operator<=>(const Poset& o) const = default;

private:
    int n_ = 0;
    std::vector<uint32_t> up_;  // bit v-1 of up_[u-1] set iff u < v

    void close_and_validate();
    friend std::vector<Poset> all_posets_on(int n);
};

Poset disjoint_union(const Poset& p, const Poset& q);

// The unique poset whose extension words form the right weak order
// interval [sigma, rho]_R, reconstructed from the endpoint inversion sets.
Poset poset_from_interval(const Permutation& sigma, const Permutation& rho);

// Every poset on [n] (OEIS A001035: 1, 1, 3, 19, 219, 4231). For n = 5 the
// list is cached on disk under $HECKEPOSET_CACHE when that variable is set.
std::vector<Poset> all_posets_on(int n);

}  // namespace heckeposet
