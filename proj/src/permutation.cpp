#include "heckeposet/permutation.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace heckeposet {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size(), false);
    for (int v : word_) {
        if (v < 1 || v > n() || seen[static_cast<size_t>(v - 1)])
            throw std::invalid_argument("not a permutation word");
        seen[static_cast<size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<size_t>(i - 1)] = i;
    return Permutation(std::move(w));
}

Permutation Permutation::w0(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<size_t>(i - 1)] = n + 1 - i;
    return Permutation(std::move(w));
}

Permutation Permutation::w0_of(const Composition& alpha) {
    Composition blocks = alpha.complement();
    std::vector<int> w;
    w.reserve(static_cast<size_t>(alpha.size()));
    int start = 1;
    for (int k = 1; k <= blocks.length(); ++k) {
        int end = start + blocks.part(k) - 1;
        for (int v = end; v >= start; --v) w.push_back(v);
        start = end + 1;
    }
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> w(word_.size());
    for (int i = 1; i <= n(); ++i) w[static_cast<size_t>((*this)(i) - 1)] = i;
    return Permutation(std::move(w));
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (n() != o.n()) throw std::invalid_argument("size mismatch in product");
    std::vector<int> w(word_.size());
    for (int i = 1; i <= n(); ++i) w[static_cast<size_t>(i - 1)] = (*this)(o(i));
    return Permutation(std::move(w));
}

Permutation Permutation::times_s(int i) const {
    if (i < 1 || i >= n()) throw std::out_of_range("simple reflection index");
    std::vector<int> w = word_;
    std::swap(w[static_cast<size_t>(i - 1)], w[static_cast<size_t>(i)]);
    return Permutation(std::move(w));
}

Permutation Permutation::s_times(int i) const {
    if (i < 1 || i >= n()) throw std::out_of_range("simple reflection index");
    std::vector<int> w = word_;
    for (auto& v : w) {
        if (v == i) v = i + 1;
        else if (v == i + 1) v = i;
    }
    return Permutation(std::move(w));
}

int Permutation::length() const {
    int len = 0;
    for (int i = 1; i <= n(); ++i)
        for (int j = i + 1; j <= n(); ++j)
            if ((*this)(i) > (*this)(j)) ++len;
    return len;
}

std::vector<std::pair<int, int>> Permutation::inversions() const {
    std::vector<std::pair<int, int>> inv;
    for (int i = 1; i <= n(); ++i)
        for (int j = i + 1; j <= n(); ++j)
            if ((*this)(i) > (*this)(j)) inv.emplace_back((*this)(i), (*this)(j));
    std::sort(inv.begin(), inv.end());
    return inv;
}

std::vector<std::pair<int, int>> Permutation::coinversions() const {
    std::vector<std::pair<int, int>> coinv;
    for (int i = 1; i <= n(); ++i)
        for (int j = i + 1; j <= n(); ++j)
            if ((*this)(i) < (*this)(j)) coinv.emplace_back((*this)(i), (*this)(j));
    std::sort(coinv.begin(), coinv.end());
    return coinv;
}

uint64_t Permutation::inv_mask() const {
    if (n() > 11) throw std::length_error("inversion bitmask limited to n <= 11");
    uint64_t mask = 0;
    for (int i = 1; i <= n(); ++i)
        for (int j = i + 1; j <= n(); ++j) {
            int a = (*this)(i), b = (*this)(j);
            if (a > b) mask |= uint64_t{1} << ((a - 1) * (a - 2) / 2 + (b - 1));
        }
    return mask;
}

std::vector<int> Permutation::des_right() const {
    std::vector<int> d;
    for (int i = 1; i < n(); ++i)
        if ((*this)(i) > (*this)(i + 1)) d.push_back(i);
    return d;
}

std::vector<int> Permutation::des_left() const { return inverse().des_right(); }

Composition Permutation::descent_composition() const {
    return comp_of(des_right(), n());
}

std::string Permutation::to_string() const {
    std::ostringstream out;
    if (n() <= 9) {
        for (int v : word_) out << v;
    } else {
        for (int i = 0; i < n(); ++i) {
            if (i) out << ',';
            out << word_[static_cast<size_t>(i)];
        }
    }
    return out.str();
}

bool leq_right(const Permutation& sigma, const Permutation& rho) {
    if (sigma.n() != rho.n()) throw std::invalid_argument("size mismatch in weak order");
    uint64_t a = sigma.inv_mask(), b = rho.inv_mask();
    return (a & ~b) == 0;
}

bool leq_left(const Permutation& sigma, const Permutation& rho) {
    return leq_right(sigma.inverse(), rho.inverse());
}

Permutation f_map(const Permutation& gamma) {
    return Permutation::w0(gamma.n()) * gamma.inverse();
}

WeakInterval interval(Side side, const Permutation& bottom, const Permutation& top) {
    bool ok = side == Side::Right ? leq_right(bottom, top) : leq_left(bottom, top);
    if (!ok) throw std::invalid_argument("bottom is not below top in the weak order");
    std::set<Permutation> seen{bottom};
    std::queue<Permutation> work;
    work.push(bottom);
    while (!work.empty()) {
        Permutation gamma = work.front();
        work.pop();
        for (int i = 1; i < gamma.n(); ++i) {
            Permutation next = side == Side::Right ? gamma.times_s(i) : gamma.s_times(i);
            if (next.length() != gamma.length() + 1) continue;
            bool below = side == Side::Right ? leq_right(next, top) : leq_left(next, top);
            if (!below || seen.count(next)) continue;
            seen.insert(next);
            work.push(next);
        }
    }
    WeakInterval iv{side, bottom, top, {seen.begin(), seen.end()}};
    return iv;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<size_t>(i - 1)] = i;
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

Permutation permutation_from_string(const std::string& text) {
    std::vector<int> w;
    if (text.find(',') != std::string::npos) {
        std::istringstream in(text);
        std::string tok;
        while (std::getline(in, tok, ',')) w.push_back(std::stoi(tok));
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad permutation text");
            w.push_back(c - '0');
        }
    }
    return Permutation(std::move(w));
}

}  // namespace heckeposet
