#pragma once

#include "heckeposet/composition.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace heckeposet {

// A permutation of [n] in one-line notation. Values are 1-based.
// Products compose as functions: (sigma * tau)(i) = sigma(tau(i)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);
    static Permutation identity(int n);
    static Permutation w0(int n);
    // Longest element of the parabolic subgroup generated by the simple
    // reflections indexed by set(alpha); reverses the position blocks
    // delimited by the complement descent set.
    static Permutation w0_of(const Composition& alpha);

    int n() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[static_cast<size_t>(i - 1)]; }
    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const;
    Permutation operator*(const Permutation& o) const;
    Permutation times_s(int i) const;  // swap positions i, i+1
    Permutation s_times(int i) const;  // swap values i, i+1

    int length() const;
    // Value pairs (sigma(i), sigma(j)) with i < j and sigma(i) > sigma(j).
    std::vector<std::pair<int, int>> inversions() const;
    std::vector<std::pair<int, int>> coinversions() const;
    // Inversion set packed into a bitmask; requires n <= 11.
    uint64_t inv_mask() const;

    std::vector<int> des_right() const;
    std::vector<int> des_left() const;
    Composition descent_composition() const;  // comp(Des_R)

    std::strong_ordering operator<=>(const Permutation& o) const = default;
    bool operator==(const Permutation& o) const = default;

    std::string to_string() const;  // "25134" for n <= 9, "8,4,1,..." beyond

private:
    std::vector<int> word_;
};

bool leq_right(const Permutation& sigma, const Permutation& rho);
bool leq_left(const Permutation& sigma, const Permutation& rho);

// The involution gamma -> w0 gamma^{-1}; carries [sigma,rho]_L onto
// [w0 rho^{-1}, w0 sigma^{-1}]_R.
Permutation f_map(const Permutation& gamma);

enum class Side { Left, Right };

struct WeakInterval {
    Side side;
    Permutation bottom, top;
    std::vector<Permutation> elements;  // sorted
};

// All gamma with bottom below gamma below top in the chosen weak order,
// materialized by breadth-first closure over covers.
WeakInterval interval(Side side, const Permutation& bottom, const Permutation& top);

std::vector<Permutation> all_permutations(int n);

Permutation permutation_from_string(const std::string& text);

}  // namespace heckeposet
