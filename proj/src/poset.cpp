#include "heckeposet/poset.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace heckeposet {

Poset::Poset(int n, const std::vector<std::pair<int, int>>& relations)
    : n_(n), up_(static_cast<size_t>(n), 0) {
    if (n < 0 || n > 32) throw std::invalid_argument("ground set must fit in [0, 32]");
    for (auto [u, v] : relations) {
        if (u < 1 || u > n || v < 1 || v > n || u == v)
            throw std::invalid_argument("bad relation");
        up_[static_cast<size_t>(u - 1)] |= uint32_t{1} << (v - 1);
    }
    close_and_validate();
}

void Poset::close_and_validate() {
    for (int k = 0; k < n_; ++k)
        for (int i = 0; i < n_; ++i)
            if (up_[static_cast<size_t>(i)] >> k & 1)
                up_[static_cast<size_t>(i)] |= up_[static_cast<size_t>(k)];
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if ((up_[static_cast<size_t>(i)] >> j & 1) && (i == j || (up_[static_cast<size_t>(j)] >> i & 1)))
                throw std::invalid_argument("relations contain a cycle");
}

bool Poset::less(int u, int v) const {
    return up_[static_cast<size_t>(u - 1)] >> (v - 1) & 1;
}

bool Poset::comparable(int u, int v) const { return less(u, v) || less(v, u); }

std::vector<std::pair<int, int>> Poset::relations() const {
    std::vector<std::pair<int, int>> rel;
    for (int u = 1; u <= n_; ++u)
        for (int v = 1; v <= n_; ++v)
            if (less(u, v)) rel.emplace_back(u, v);
    return rel;
}

std::vector<std::pair<int, int>> Poset::covers() const {
    std::vector<std::pair<int, int>> cov;
    for (int u = 1; u <= n_; ++u)
        for (int v = 1; v <= n_; ++v) {
            if (!less(u, v)) continue;
            bool direct = true;
            for (int w = 1; direct && w <= n_; ++w)
                if (less(u, w) && less(w, v)) direct = false;
            if (direct) cov.emplace_back(u, v);
        }
    return cov;
}

namespace {

void extend(const Poset& p, uint32_t placed, std::vector<int>& prefix,
            std::vector<Permutation>& out) {
    int n = p.n();
    if (static_cast<int>(prefix.size()) == n) {
        out.emplace_back(prefix);
        return;
    }
    for (int v = 1; v <= n; ++v) {
        if (placed >> (v - 1) & 1) continue;
        bool ready = true;
        for (int u = 1; ready && u <= n; ++u)
            if (p.less(u, v) && !(placed >> (u - 1) & 1)) ready = false;
        if (!ready) continue;
        prefix.push_back(v);
        extend(p, placed | uint32_t{1} << (v - 1), prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Permutation> Poset::linear_extensions() const {
    std::vector<Permutation> out;
    std::vector<int> prefix;
    extend(*this, 0, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> Poset::sigma_L() const {
    std::vector<Permutation> out;
    for (const auto& gamma : linear_extensions()) out.push_back(gamma.inverse());
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Poset, Poset> Poset::split(int u, int v) const {
    if (comparable(u, v)) throw std::invalid_argument("split needs an incomparable pair");
    auto rel = relations();
    auto uv = rel, vu = rel;
    uv.emplace_back(u, v);
    vu.emplace_back(v, u);
    return {Poset(n_, vu), Poset(n_, uv)};
}

std::vector<std::vector<int>> Poset::lower_subposets(int m) const {
    std::vector<std::vector<int>> out;
    for (uint32_t mask = 0; mask < uint32_t{1} << n_; ++mask) {
        if (std::popcount(mask) != m) continue;
        bool closed = true;
        for (int v = 1; closed && v <= n_; ++v) {
            if (!(mask >> (v - 1) & 1)) continue;
            for (int u = 1; closed && u <= n_; ++u)
                if (less(u, v) && !(mask >> (u - 1) & 1)) closed = false;
        }
        if (!closed) continue;
        std::vector<int> subset;
        for (int v = 1; v <= n_; ++v)
            if (mask >> (v - 1) & 1) subset.push_back(v);
        out.push_back(std::move(subset));
    }
    return out;
}

Poset Poset::standardize(const std::vector<int>& subset) const {
    std::vector<int> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<int, int>> rel;
    int m = static_cast<int>(sorted.size());
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b)
            if (less(sorted[static_cast<size_t>(a - 1)], sorted[static_cast<size_t>(b - 1)]))
                rel.emplace_back(a, b);
    return Poset(m, rel);
}

Poset Poset::bar() const {
    std::vector<std::pair<int, int>> rel;
    for (auto [u, v] : relations()) rel.emplace_back(n_ + 1 - u, n_ + 1 - v);
    return Poset(n_, rel);
}

Poset Poset::star() const {
    std::vector<std::pair<int, int>> rel;
    for (auto [u, v] : relations()) rel.emplace_back(v, u);
    return Poset(n_, rel);
}

bool Poset::is_regular() const {
    for (int v = 1; v <= n_; ++v)
        for (int w = 1; w <= n_; ++w) {
            if (!less(v, w)) continue;
            int lo = std::min(v, w), hi = std::max(v, w);
            for (int u = lo + 1; u < hi; ++u)
                if (!comparable(u, v) && !comparable(u, w)) return false;
        }
    return true;
}

std::string Poset::to_string() const {
    std::ostringstream out;
    out << "poset on [" << n_ << "], covers {";
    bool first = true;
    for (auto [u, v] : covers()) {
        if (!first) out << ", ";
        first = false;
        out << u << "<" << v;
    }
    out << "}";
    return out.str();
}

Poset disjoint_union(const Poset& p, const Poset& q) {
    std::vector<std::pair<int, int>> rel = p.relations();
    for (auto [u, v] : q.relations()) rel.emplace_back(u + p.n(), v + p.n());
    return Poset(p.n() + q.n(), rel);
}

Poset poset_from_interval(const Permutation& sigma, const Permutation& rho) {
    if (!leq_right(sigma, rho))
        throw std::invalid_argument("sigma must be below rho in right weak order");
    int n = sigma.n();
    uint64_t inv_s = sigma.inv_mask(), inv_r = rho.inv_mask();
    auto has = [](uint64_t mask, int a, int b) {  // pair (a, b) with a > b
        return mask >> ((a - 1) * (a - 2) / 2 + (b - 1)) & 1;
    };
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i < j && !has(inv_r, j, i)) rel.emplace_back(i, j);
            if (i > j && has(inv_s, i, j)) rel.emplace_back(i, j);
        }
    return Poset(n, rel);
}

namespace {

std::string cache_path(int n) {
    const char* dir = std::getenv("HECKEPOSET_CACHE");
    if (!dir || !*dir) return {};
    return std::string(dir) + "/posets" + std::to_string(n) + ".txt";
}

std::vector<Poset> load_cached(const std::string& path, int n) {
    std::ifstream in(path);
    std::vector<Poset> out;
    if (!in) return out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::vector<std::pair<int, int>> rel;
        uint32_t mask;
        for (int u = 1; u <= n && row >> mask; ++u)
            for (int v = 1; v <= n; ++v)
                if (mask >> (v - 1) & 1) rel.emplace_back(u, v);
        out.emplace_back(n, rel);
    }
    return out;
}

}  // namespace

std::vector<Poset> all_posets_on(int n) {
    if (n > 6) throw std::length_error("exhaustive poset enumeration capped at n = 6");
    std::string path = n >= 5 ? cache_path(n) : std::string{};
    if (!path.empty()) {
        auto cached = load_cached(path, n);
        if (!cached.empty()) return cached;
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    std::vector<Poset> out;
    std::vector<int> state(pairs.size(), 0);  // 0 incomparable, 1 i<j, 2 j<i
    while (true) {
        std::vector<uint32_t> up(static_cast<size_t>(n), 0);
        for (size_t k = 0; k < pairs.size(); ++k) {
            auto [i, j] = pairs[k];
            if (state[k] == 1) up[static_cast<size_t>(i - 1)] |= uint32_t{1} << (j - 1);
            if (state[k] == 2) up[static_cast<size_t>(j - 1)] |= uint32_t{1} << (i - 1);
        }
        bool transitive = true;
        for (int i = 0; transitive && i < n; ++i)
            for (int k = 0; transitive && k < n; ++k)
                if ((up[static_cast<size_t>(i)] >> k & 1) && (up[static_cast<size_t>(k)] & ~up[static_cast<size_t>(i)]))
                    transitive = false;
        if (transitive) {
            Poset p;
            p.n_ = n;
            p.up_ = up;
            out.push_back(std::move(p));
        }
        size_t k = 0;
        while (k < state.size() && state[k] == 2) state[k++] = 0;
        if (k == state.size()) break;
        ++state[k];
    }
    std::sort(out.begin(), out.end());
    if (!path.empty()) {
        std::ofstream fout(path);
        if (fout) {
            for (const auto& p : out) {
                for (int u = 1; u <= n; ++u) {
                    uint32_t mask = 0;
                    for (int v = 1; v <= n; ++v)
                        if (p.less(u, v)) mask |= uint32_t{1} << (v - 1);
                    fout << mask << (u == n ? '\n' : ' ');
                }
            }
        }
    }
    return out;
}

}  // namespace heckeposet
