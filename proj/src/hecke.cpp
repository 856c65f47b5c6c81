#include "heckeposet/hecke.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace heckeposet {

int CombinatorialModule::index_of(const Permutation& g) const {
    auto it = std::lower_bound(basis.begin(), basis.end(), g);
    if (it == basis.end() || !(*it == g)) return -1;
    return static_cast<int>(it - basis.begin());
}

std::vector<std::vector<long long>> CombinatorialModule::matrix(int i) const {
    std::vector<std::vector<long long>> m(basis.size(), std::vector<long long>(basis.size(), 0));
    for (int b = 0; b < dim(); ++b) {
        const ActionEntry& e = act[static_cast<size_t>(i - 1)][static_cast<size_t>(b)];
        switch (e.kind) {
            case ActionEntry::Zero: break;
            case ActionEntry::Self: m[static_cast<size_t>(b)][static_cast<size_t>(b)] = 1; break;
            case ActionEntry::NegSelf: m[static_cast<size_t>(b)][static_cast<size_t>(b)] = -1; break;
            case ActionEntry::Move: m[static_cast<size_t>(b)][static_cast<size_t>(e.target)] = 1; break;
        }
    }
    return m;
}

namespace {

CombinatorialModule build_table(Side side, GenFamily family, std::vector<Permutation> basis) {
    std::sort(basis.begin(), basis.end());
    CombinatorialModule m;
    m.side = side;
    m.family = family;
    m.basis = std::move(basis);
    int gens = m.generator_count();
    m.act.assign(static_cast<size_t>(gens), std::vector<ActionEntry>(m.basis.size()));
    for (int i = 1; i <= gens; ++i) {
        for (int b = 0; b < m.dim(); ++b) {
            const Permutation& gamma = m.basis[static_cast<size_t>(b)];
            auto des = side == Side::Right ? gamma.des_right() : gamma.des_left();
            ActionEntry& e = m.act[static_cast<size_t>(i - 1)][static_cast<size_t>(b)];
            if (std::find(des.begin(), des.end(), i) != des.end()) {
                e.kind = family == GenFamily::PiBar ? ActionEntry::NegSelf : ActionEntry::Self;
                continue;
            }
            Permutation moved = side == Side::Right ? gamma.times_s(i) : gamma.s_times(i);
            int t = m.index_of(moved);
            if (t < 0) {
                e.kind = ActionEntry::Zero;
            } else {
                e.kind = ActionEntry::Move;
                e.target = t;
            }
        }
    }
    return m;
}

}  // namespace

CombinatorialModule poset_module(const Poset& p) {
    return build_table(Side::Right, GenFamily::PiBar, p.sigma_R());
}

CombinatorialModule poset_module_bar(const Poset& p) {
    return build_table(Side::Right, GenFamily::Pi, p.sigma_R());
}

CombinatorialModule interval_module(Side side, GenFamily family,
                                    const Permutation& sigma, const Permutation& rho) {
    return interval_module(interval(side, sigma, rho), family);
}

CombinatorialModule interval_module(const WeakInterval& iv, GenFamily family) {
    return build_table(iv.side, family, iv.elements);
}

namespace {

// Each generator image has at most one nonzero entry per basis row; the
// relation checks compose these sparse maps directly.
struct SparseRow {
    int col = -1;  // -1 for the zero row
    long long val = 0;
    bool operator==(const SparseRow&) const = default;
};
using SparseMap = std::vector<SparseRow>;

SparseMap generator_map(const CombinatorialModule& m, int i) {
    SparseMap rows(static_cast<size_t>(m.dim()));
    for (int b = 0; b < m.dim(); ++b) {
        const ActionEntry& e = m.act[static_cast<size_t>(i - 1)][static_cast<size_t>(b)];
        switch (e.kind) {
            case ActionEntry::Zero: break;
            case ActionEntry::Self: rows[static_cast<size_t>(b)] = {b, 1}; break;
            case ActionEntry::NegSelf: rows[static_cast<size_t>(b)] = {b, -1}; break;
            case ActionEntry::Move: rows[static_cast<size_t>(b)] = {e.target, 1}; break;
        }
    }
    return rows;
}

SparseMap compose(const SparseMap& first, const SparseMap& then) {
    SparseMap out(first.size());
    for (size_t b = 0; b < first.size(); ++b) {
        if (first[b].col < 0) continue;
        const SparseRow& next = then[static_cast<size_t>(first[b].col)];
        if (next.col < 0) continue;
        out[b] = {next.col, first[b].val * next.val};
    }
    return out;
}

SparseMap negate(SparseMap m) {
    for (auto& r : m) r.val = -r.val;
    return m;
}

}  // namespace

bool check_relations(const CombinatorialModule& m) {
    int gens = m.generator_count();
    std::vector<SparseMap> a;
    a.reserve(static_cast<size_t>(gens));
    for (int i = 1; i <= gens; ++i) a.push_back(generator_map(m, i));
    for (int i = 0; i < gens; ++i) {
        SparseMap sq = compose(a[static_cast<size_t>(i)], a[static_cast<size_t>(i)]);
        SparseMap want = m.family == GenFamily::PiBar ? negate(a[static_cast<size_t>(i)]) : a[static_cast<size_t>(i)];
        if (sq != want) return false;
    }
    for (int i = 0; i + 1 < gens; ++i) {
        const SparseMap &x = a[static_cast<size_t>(i)], &y = a[static_cast<size_t>(i + 1)];
        if (compose(compose(x, y), x) != compose(compose(y, x), y)) return false;
    }
    for (int i = 0; i < gens; ++i)
        for (int j = i + 2; j < gens; ++j) {
            const SparseMap &x = a[static_cast<size_t>(i)], &y = a[static_cast<size_t>(j)];
            if (compose(x, y) != compose(y, x)) return false;
        }
    return true;
}

QsymElement characteristic(const CombinatorialModule& m) {
    QsymElement out;
    for (int b = 0; b < m.dim(); ++b) {
        std::vector<int> subset;
        for (int i = 1; i <= m.generator_count(); ++i) {
            const ActionEntry& e = m.act[static_cast<size_t>(i - 1)][static_cast<size_t>(b)];
            bool annihilated = m.family == GenFamily::PiBar
                                   ? e.kind == ActionEntry::NegSelf
                                   : e.kind != ActionEntry::Self;
            if (annihilated) subset.push_back(i);
        }
        out.add(comp_of(subset, m.n()), 1);
    }
    return out;
}

QsymElement characteristic_of_poset_module(const Poset& p) {
    return characteristic(poset_module(p));
}

namespace {

void split_to_chains(const Poset& p, std::vector<Composition>& out) {
    for (int u = 1; u <= p.n(); ++u)
        for (int v = u + 1; v <= p.n(); ++v)
            if (!p.comparable(u, v)) {
                auto [uv, vu] = p.split(u, v);
                split_to_chains(uv, out);
                split_to_chains(vu, out);
                return;
            }
    out.push_back(p.linear_extensions().front().descent_composition());
}

}  // namespace

std::vector<Composition> composition_series_multiset(const Poset& p) {
    std::vector<Composition> out;
    split_to_chains(p, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Poset, Poset>> restrict(const Poset& p, int m) {
    if (m < 0 || m > p.n()) throw std::out_of_range("restriction size");
    std::vector<std::pair<Poset, Poset>> out;
    for (const auto& q : p.lower_subposets(m)) {
        std::vector<int> rest;
        auto it = q.begin();
        for (int v = 1; v <= p.n(); ++v) {
            if (it != q.end() && *it == v) {
                ++it;
                continue;
            }
            rest.push_back(v);
        }
        out.emplace_back(p.standardize(q), p.standardize(rest));
    }
    return out;
}

TwistData twist(const Poset& p, Twist which) {
    TwistData t;
    t.which = which;
    t.source = poset_module(p);
    Permutation w0 = Permutation::w0(p.n());
    switch (which) {
        case Twist::Phi:
            t.target = poset_module(p.bar().star());
            for (const auto& gamma : t.source.basis) {
                t.image.push_back(t.target.index_of(w0 * gamma * w0));
                t.sign.push_back(1);
            }
            break;
        case Twist::Theta:
            t.target = poset_module_bar(p);
            for (const auto& gamma : t.source.basis) {
                t.image.push_back(t.target.index_of(gamma));
                t.sign.push_back(gamma.length() % 2 ? -1 : 1);
            }
            break;
        case Twist::Chi:
            t.target = poset_module_bar(p.bar());
            for (const auto& gamma : t.source.basis) {
                t.image.push_back(t.target.index_of(w0 * gamma));
                t.sign.push_back(1);
            }
            break;
    }
    for (int idx : t.image)
        if (idx < 0) throw std::logic_error("twist bijection left the target basis");
    return t;
}

std::pair<Permutation, Permutation> functor_F(const Permutation& sigma, const Permutation& rho) {
    if (!leq_left(sigma, rho))
        throw std::invalid_argument("sigma must be below rho in left weak order");
    Permutation w0 = Permutation::w0(sigma.n());
    return {w0 * rho.inverse(), w0 * sigma.inverse()};
}

CombinatorialModule functor_F_module(const Permutation& sigma, const Permutation& rho) {
    WeakInterval iv = interval(Side::Left, sigma, rho);
    CombinatorialModule m;
    m.side = Side::Right;
    m.family = GenFamily::PiBar;
    m.basis = iv.elements;
    int gens = m.generator_count();
    m.act.assign(static_cast<size_t>(gens), std::vector<ActionEntry>(m.basis.size()));
    for (int i = 1; i <= gens; ++i)
        for (int b = 0; b < m.dim(); ++b) {
            const Permutation& gamma = m.basis[static_cast<size_t>(b)];
            auto des = gamma.des_left();
            ActionEntry& e = m.act[static_cast<size_t>(i - 1)][static_cast<size_t>(b)];
            if (std::find(des.begin(), des.end(), i) == des.end()) {
                e.kind = ActionEntry::NegSelf;
                continue;
            }
            int t = m.index_of(gamma.s_times(i));
            if (t < 0) {
                e.kind = ActionEntry::Zero;
            } else {
                e.kind = ActionEntry::Move;
                e.target = t;
            }
        }
    return m;
}

}  // namespace heckeposet
