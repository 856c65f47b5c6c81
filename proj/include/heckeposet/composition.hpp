#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace heckeposet {

// A composition of n: a finite ordered list of positive integers summing to n.
// The empty composition is the unique composition of size and length 0.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<size_t>(i - 1)]; }  // 1-based
    bool empty() const { return parts_.empty(); }

    // Partial sums a1, a1+a2, ..., excluding the final sum n; a subset of [n-1].
    std::vector<int> set_of() const;

    Composition reverse() const;
    Composition complement() const;

    // Ordered by size, then lexicographically on parts.
    std::strong_ordering operator<=>(const Composition& o) const;
    bool operator==(const Composition& o) const = default;

    std::string to_string() const;  // "(a1,a2,...)"

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// A weakly decreasing composition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int size() const { return comp_.size(); }
    int length() const { return comp_.length(); }
    const std::vector<int>& parts() const { return comp_.parts(); }
    const Composition& as_composition() const { return comp_; }

    std::strong_ordering operator<=>(const Partition& o) const = default;
    bool operator==(const Partition& o) const = default;

private:
    Composition comp_;
};

/// Inverse of Composition::set_of: successive differences of I together with n.
Composition comp_of(const std::vector<int>& subset, int n);

// True iff set_of(coarse) is contained in set_of(fine), i.e. fine refines coarse. Sizes must agree.
bool refines(const Composition& fine, const Composition& coarse);

// prod of i^{m_i} * m_i! over the part multiplicities m_i.
long long z_stat(const Composition& alpha);

// prod of (a1 + ... + aj) over all prefixes.
long long pi_stat(const Composition& alpha);

// prod of pi_stat(alpha^(i)), where alpha^(i) is the consecutive block of alpha
// summing to beta_i. Requires alpha to refine beta.
long long pi_pair(const Composition& alpha, const Composition& beta);

// Parts sorted weakly decreasing.
Partition sort_to_partition(const Composition& alpha);

// All 2^{n-1} compositions of n (the empty one for n = 0), lexicographic on parts.
std::vector<Composition> compositions_of(int n);

// All coarsenings beta with alpha refining beta, in canonical order.
std::vector<Composition> coarsenings_of(const Composition& alpha);

// All refinements beta refining alpha, in canonical order.
std::vector<Composition> refinements_of(const Composition& alpha);

// Textual exchange format "a1,a2,...,ak"; "" is the empty composition.
Composition composition_from_string(const std::string& text);
std::string composition_to_plain_string(const Composition& alpha);

}  // namespace heckeposet
