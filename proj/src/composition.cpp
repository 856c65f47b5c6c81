#include "heckeposet/composition.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace heckeposet {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Composition::set_of() const {
    std::vector<int> out;
    int acc = 0;
    for (size_t i = 0; i + 1 < parts_.size(); ++i) {
        acc += parts_[i];
        out.push_back(acc);
    }
    return out;
}

Composition Composition::reverse() const {
    return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

Composition Composition::complement() const {
    std::vector<int> in_set(static_cast<size_t>(size_) + 1, 0);
    for (int s : set_of()) in_set[static_cast<size_t>(s)] = 1;
    std::vector<int> comp_set;
    for (int i = 1; i < size_; ++i)
        if (!in_set[static_cast<size_t>(i)]) comp_set.push_back(i);
    return comp_of(comp_set, size_);
}

std::strong_ordering Composition::operator<=>(const Composition& o) const {
    if (auto c = size_ <=> o.size_; c != 0) return c;
    return parts_ <=> o.parts_;
}

std::string Composition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

Partition::Partition(std::vector<int> parts) {
    for (size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1]) throw std::invalid_argument("partition parts must weakly decrease");
    comp_ = Composition(std::move(parts));
}

Composition comp_of(const std::vector<int>& subset, int n) {
    std::vector<int> parts;
    int prev = 0;
    for (int s : subset) {
        if (s <= prev || s >= n) throw std::invalid_argument("descent set must be an increasing subset of [n-1]");
        parts.push_back(s - prev);
        prev = s;
    }
    if (n > 0) parts.push_back(n - prev);
    return Composition(std::move(parts));
}

bool refines(const Composition& fine, const Composition& coarse) {
    if (fine.size() != coarse.size()) throw std::invalid_argument("refines: size mismatch");
    auto fs = fine.set_of(), cs = coarse.set_of();
    return std::includes(fs.begin(), fs.end(), cs.begin(), cs.end());
}

long long z_stat(const Composition& alpha) {
    auto parts = alpha.parts();
    std::sort(parts.begin(), parts.end());
    long long z = 1;
    for (size_t i = 0; i < parts.size();) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        long long m = static_cast<long long>(j - i);
        for (long long k = 0; k < m; ++k) z *= parts[i];
        for (long long k = 2; k <= m; ++k) z *= k;
        i = j;
    }
    return z;
}

long long pi_stat(const Composition& alpha) {
    long long acc = 0, prod = 1;
    for (int p : alpha.parts()) {
        acc += p;
        prod *= acc;
    }
    return prod;
}

long long pi_pair(const Composition& alpha, const Composition& beta) {
    if (!refines(alpha, beta)) throw std::invalid_argument("pi_pair: second argument must coarsen the first");
    long long prod = 1;
    size_t i = 0;
    for (int b : beta.parts()) {
        long long acc = 0;
        while (acc < b) {
            acc += alpha.parts()[i++];
            prod *= acc;
        }
    }
    return prod;
}

Partition sort_to_partition(const Composition& alpha) {
    auto parts = alpha.parts();
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw std::invalid_argument("compositions_of: negative size");
    std::vector<Composition> out;
    std::vector<int> parts;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int first = 1; first <= rest; ++first) {
            parts.push_back(first);
            rec(rest - first);
            parts.pop_back();
        }
    };
    rec(n);
    return out;
}

std::vector<Composition> coarsenings_of(const Composition& alpha) {
    std::vector<Composition> out;
    auto s = alpha.set_of();
    size_t m = s.size();
    for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
        std::vector<int> sub;
        for (size_t i = 0; i < m; ++i)
            if (mask >> i & 1) sub.push_back(s[i]);
        out.push_back(comp_of(sub, alpha.size()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Composition> refinements_of(const Composition& alpha) {
    std::vector<Composition> out;
    auto s = alpha.set_of();
    std::vector<int> rest;
    for (int i = 1; i < alpha.size(); ++i)
        if (!std::binary_search(s.begin(), s.end(), i)) rest.push_back(i);
    size_t m = rest.size();
    for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
        std::vector<int> sub = s;
        for (size_t i = 0; i < m; ++i)
            if (mask >> i & 1) sub.push_back(rest[i]);
        std::sort(sub.begin(), sub.end());
        out.push_back(comp_of(sub, alpha.size()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Composition composition_from_string(const std::string& text) {
    std::vector<int> parts;
    std::string body = text;
    if (!body.empty() && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
    std::istringstream in(body);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("bad composition text: " + text);
        parts.push_back(std::stoi(tok));
    }
    return Composition(std::move(parts));
}

std::string composition_to_plain_string(const Composition& alpha) {
    std::ostringstream os;
    for (size_t i = 0; i < alpha.parts().size(); ++i) {
        if (i) os << ',';
        os << alpha.parts()[i];
    }
    return os.str();
}

}  // namespace heckeposet
