#include "heckeposet/ppart.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace heckeposet {

Composition StarredPPartition::wt() const {
    int k = 0;
    for (const auto& v : values) k = std::max(k, v.level);
    std::vector<int> counts(static_cast<size_t>(k), 0);
    for (const auto& v : values) ++counts[static_cast<size_t>(v.level - 1)];
    return Composition(std::move(counts));
}

std::vector<int> StarredPPartition::amb() const {
    int k = 0;
    for (const auto& v : values) k = std::max(k, v.level);
    std::vector<int> counts(static_cast<size_t>(k), 0);
    for (const auto& v : values)
        if (v.tag == StarredValue::Star) ++counts[static_cast<size_t>(v.level - 1)];
    return counts;
}

int StarredPPartition::sign() const {
    int neg = 0;
    for (const auto& v : values)
        if (v.tag == StarredValue::Neg) ++neg;
    return neg % 2 ? -1 : 1;
}

namespace {

struct EnrichedValue {
    int level = 0;
    bool positive = true;
    int key() const { return 2 * level - (positive ? 0 : 1); }  // -1 < 1 < -2 < 2 < ...
};

// One enriched-partition condition along the cover u below v.
bool cover_ok(int u, const EnrichedValue& fu, int v, const EnrichedValue& fv) {
    if (fu.key() > fv.key()) return false;
    if (fu.level == fv.level) {
        if (u < v && !fv.positive) return false;
        if (u > v && fu.positive) return false;
    }
    return true;
}

std::vector<int> topological_order(const Poset& p) {
    std::vector<int> order;
    std::vector<bool> placed(static_cast<size_t>(p.n()) + 1, false);
    while (static_cast<int>(order.size()) < p.n()) {
        for (int v = 1; v <= p.n(); ++v) {
            if (placed[static_cast<size_t>(v)]) continue;
            bool ready = true;
            for (int u = 1; ready && u <= p.n(); ++u)
                if (p.less(u, v) && !placed[static_cast<size_t>(u)]) ready = false;
            if (ready) {
                order.push_back(v);
                placed[static_cast<size_t>(v)] = true;
            }
        }
    }
    return order;
}

struct StarredSearch {
    const Poset& p;
    const Composition& beta;
    std::vector<int> order;
    std::vector<std::vector<int>> nbr_in, nbr_out;  // cover neighbors per element
    std::vector<EnrichedValue> value;
    std::vector<bool> assigned;
    std::vector<int> room;  // remaining capacity per level
    std::set<StarredPPartition> found;

    explicit StarredSearch(const Poset& p_, const Composition& beta_) : p(p_), beta(beta_) {
        order = topological_order(p);
        nbr_in.assign(static_cast<size_t>(p.n()) + 1, {});
        nbr_out.assign(static_cast<size_t>(p.n()) + 1, {});
        for (auto [u, v] : p.covers()) {
            nbr_out[static_cast<size_t>(u)].push_back(v);
            nbr_in[static_cast<size_t>(v)].push_back(u);
        }
        value.assign(static_cast<size_t>(p.n()) + 1, {});
        assigned.assign(static_cast<size_t>(p.n()) + 1, false);
        for (int part : beta.parts()) room.push_back(part);
    }

    bool element_ok(int x) const {
        for (int u : nbr_in[static_cast<size_t>(x)])
            if (assigned[static_cast<size_t>(u)] &&
                !cover_ok(u, value[static_cast<size_t>(u)], x, value[static_cast<size_t>(x)]))
                return false;
        for (int w : nbr_out[static_cast<size_t>(x)])
            if (assigned[static_cast<size_t>(w)] &&
                !cover_ok(x, value[static_cast<size_t>(x)], w, value[static_cast<size_t>(w)]))
                return false;
        return true;
    }

    void record() {
        StarredPPartition f;
        f.values.resize(static_cast<size_t>(p.n()));
        for (int x = 1; x <= p.n(); ++x) {
            EnrichedValue saved = value[static_cast<size_t>(x)];
            value[static_cast<size_t>(x)].positive = !saved.positive;
            bool ambiguous = element_ok(x);
            value[static_cast<size_t>(x)] = saved;
            auto tag = ambiguous ? StarredValue::Star
                                 : (saved.positive ? StarredValue::Pos : StarredValue::Neg);
            f.values[static_cast<size_t>(x - 1)] = {saved.level, tag};
        }
        auto a = f.amb();
        if (std::all_of(a.begin(), a.end(), [](int c) { return c == 1; })) found.insert(f);
    }

    void dfs(size_t pos) {
        if (pos == order.size()) {
            record();
            return;
        }
        int x = order[pos];
        for (int level = 1; level <= beta.length(); ++level) {
            if (room[static_cast<size_t>(level - 1)] == 0) continue;
            for (bool positive : {false, true}) {
                value[static_cast<size_t>(x)] = {level, positive};
                assigned[static_cast<size_t>(x)] = true;
                if (element_ok(x)) {
                    --room[static_cast<size_t>(level - 1)];
                    dfs(pos + 1);
                    ++room[static_cast<size_t>(level - 1)];
                }
                assigned[static_cast<size_t>(x)] = false;
            }
        }
    }
};

}  // namespace

std::vector<StarredPPartition> enumerate_starred(const Poset& p, const Composition& beta,
                                                 int enumeration_cap) {
    if (p.n() > enumeration_cap)
        throw std::length_error("starred enumeration beyond configured bound");
    if (beta.size() != p.n()) throw std::invalid_argument("weight must total the poset size");
    if (beta.length() > p.n()) return {};
    StarredSearch search(p, beta);
    search.dfs(0);
    return {search.found.begin(), search.found.end()};
}

std::map<Composition, long long> kp_in_psi_via_starred(const Poset& p, int enumeration_cap) {
    std::map<Composition, long long> out;
    for (const auto& beta : compositions_of(p.n())) {
        long long c = 0;
        for (const auto& f : enumerate_starred(p, beta, enumeration_cap)) c += f.sign();
        if (c != 0) out[beta] = c;
    }
    return out;
}

QsymElement kp_fundamental(const Poset& p) {
    QsymElement out;
    for (const auto& gamma : p.sigma_R()) out.add(gamma.descent_composition(), 1);
    return out;
}

namespace {

struct TruncationSearch {
    const Poset& p;
    int max_vars;
    std::vector<int> order;
    std::vector<std::vector<std::pair<int, bool>>> constraints;  // (earlier elt, strict)
    std::vector<int> value;
    Polynomial poly;

    TruncationSearch(const Poset& p_, int m) : p(p_), max_vars(m) {
        order = topological_order(p);
        std::vector<size_t> pos(static_cast<size_t>(p.n()) + 1);
        for (size_t i = 0; i < order.size(); ++i) pos[static_cast<size_t>(order[i])] = i;
        constraints.assign(order.size(), {});
        for (auto [u, v] : p.covers())
            constraints[pos[static_cast<size_t>(v)]].emplace_back(u, u > v);
        value.assign(static_cast<size_t>(p.n()) + 1, 0);
    }

    void dfs(size_t i) {
        if (i == order.size()) {
            ExponentVector e(static_cast<size_t>(max_vars), 0);
            for (int x = 1; x <= p.n(); ++x) ++e[static_cast<size_t>(value[static_cast<size_t>(x)] - 1)];
            poly[e] += 1;
            return;
        }
        int x = order[i];
        int lo = 1;
        for (auto [u, strict] : constraints[i])
            lo = std::max(lo, value[static_cast<size_t>(u)] + (strict ? 1 : 0));
        for (int f = lo; f <= max_vars; ++f) {
            value[static_cast<size_t>(x)] = f;
            dfs(i + 1);
        }
    }
};

void add_monomial_terms(const Composition& beta, size_t part, int min_var, int max_vars,
                        ExponentVector& e, const Rational& r,
                        std::map<ExponentVector, Rational>& acc) {
    if (part == beta.parts().size()) {
        acc[e] += r;
        return;
    }
    for (int v = min_var; v <= max_vars; ++v) {
        e[static_cast<size_t>(v - 1)] += beta.parts()[part];
        add_monomial_terms(beta, part + 1, v + 1, max_vars, e, r, acc);
        e[static_cast<size_t>(v - 1)] -= beta.parts()[part];
    }
}

}  // namespace

Polynomial kp_monomial_truncation(const Poset& p, int max_vars, int enumeration_cap) {
    if (max_vars < 1) throw std::invalid_argument("need at least one variable");
    if (p.n() > enumeration_cap)
        throw std::length_error("truncation enumeration beyond configured bound");
    TruncationSearch search(p, max_vars);
    search.dfs(0);
    return std::move(search.poly);
}

Polynomial specialize_monomial_basis(const QsymElement& monomial, int max_vars) {
    if (max_vars < 1) throw std::invalid_argument("need at least one variable");
    std::map<ExponentVector, Rational> acc;
    for (const auto& [beta, r] : monomial.terms()) {
        ExponentVector e(static_cast<size_t>(max_vars), 0);
        add_monomial_terms(beta, 0, 1, max_vars, e, r, acc);
    }
    Polynomial out;
    for (const auto& [e, r] : acc) {
        if (r == 0) continue;
        if (boost::multiprecision::denominator(r) != 1)
            throw std::domain_error("specialization produced a non-integer coefficient");
        out[e] = boost::multiprecision::numerator(r);
    }
    return out;
}

}  // namespace heckeposet
