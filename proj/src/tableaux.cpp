#include "heckeposet/tableaux.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace heckeposet {

CompositionTableau::CompositionTableau(TabKind kind, Composition shape,
                                       std::vector<std::vector<int>> rows)
    : kind_(kind), shape_(std::move(shape)), rows_(std::move(rows)) {
    validate();
}

void CompositionTableau::validate() const {
    const auto& parts = shape_.parts();
    const int l = static_cast<int>(parts.size());
    if (static_cast<int>(rows_.size()) != l)
        throw std::invalid_argument("tableau: row count does not match shape");
    for (int i = 0; i < l; ++i)
        if (static_cast<int>(rows_[i].size()) != parts[i])
            throw std::invalid_argument("tableau: row length does not match shape");
    const int n = shape_.size();
    std::vector<char> seen(n + 1, 0);
    for (const auto& row : rows_)
        for (int v : row) {
            if (v < 1 || v > n || seen[v])
                throw std::invalid_argument("tableau: entries must be a permutation of 1..n");
            seen[v] = 1;
        }

    const bool rows_increase = kind_ != TabKind::SRCT;
    for (const auto& row : rows_)
        for (std::size_t j = 1; j < row.size(); ++j) {
            const bool ok = rows_increase ? row[j - 1] < row[j] : row[j - 1] > row[j];
            if (!ok)
                throw std::invalid_argument(rows_increase
                                                ? "tableau: rows must increase left to right"
                                                : "tableau: rows must decrease left to right");
        }

    if (kind_ == TabKind::SET) {
        const int maxc = l == 0 ? 0 : *std::max_element(parts.begin(), parts.end());
        for (int c = 1; c <= maxc; ++c) {
            int prev = 0;
            for (int i = 0; i < l; ++i) {
                if (parts[i] < c) continue;
                if (prev != 0 && !(prev < rows_[i][c - 1]))
                    throw std::invalid_argument("tableau: columns must increase top to bottom");
                prev = rows_[i][c - 1];
            }
        }
    } else {
        for (int i = 1; i < l; ++i)
            if (!(rows_[i - 1][0] < rows_[i][0]))
                throw std::invalid_argument("tableau: first column must increase top to bottom");
    }

    if (kind_ == TabKind::SRCT) {
        // triple condition: rows i < j and tau(i,k) > tau(j,k+1) force the
        // cell (i,k+1) to exist and dominate tau(j,k+1)
        for (int i = 1; i <= l; ++i)
            for (int j = i + 1; j <= l; ++j)
                for (int k = 1; k <= parts[i - 1]; ++k) {
                    if (parts[j - 1] < k + 1) continue;
                    if (at(i, k) > at(j, k + 1)) {
                        if (parts[i - 1] < k + 1 || !(at(i, k + 1) > at(j, k + 1)))
                            throw std::invalid_argument("tableau: triple condition violated");
                    }
                }
    }
}

std::pair<int, int> CompositionTableau::cell_of(int value) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < rows_[i].size(); ++j)
            if (rows_[i][j] == value)
                return {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
    throw std::out_of_range("tableau: value not present");
}

Permutation CompositionTableau::read() const {
    std::vector<int> word;
    word.reserve(n());
    for (const auto& row : rows_) word.insert(word.end(), row.rbegin(), row.rend());
    return Permutation(word);
}

std::vector<int> CompositionTableau::descents() const {
    std::vector<int> out;
    for (int i = 1; i < n(); ++i) {
        const auto [ri, ci] = cell_of(i);
        const auto [rj, cj] = cell_of(i + 1);
        const bool des = kind_ == TabKind::SRCT ? cj >= ci : rj > ri;
        if (des) out.push_back(i);
    }
    return out;
}

std::string CompositionTableau::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out << '/';
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) out << ',';
            out << rows_[i][j];
        }
    }
    return out.str();
}

CompositionTableau tableau_from_string(TabKind kind, const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::vector<int> parts;
    std::stringstream stream(text);
    std::string row_text;
    while (std::getline(stream, row_text, '/')) {
        for (char& ch : row_text)
            if (ch == ',') ch = ' ';
        std::istringstream row_stream(row_text);
        std::vector<int> row;
        int v = 0;
        while (row_stream >> v) row.push_back(v);
        if (row.empty()) throw std::invalid_argument("tableau: empty row in text form");
        parts.push_back(static_cast<int>(row.size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("tableau: empty text form");
    return CompositionTableau(kind, Composition(parts), std::move(rows));
}

std::pair<CompositionTableau, CompositionTableau> sit_extremes(const Composition& alpha) {
    const auto& parts = alpha.parts();
    const int l = alpha.length();
    std::vector<std::vector<int>> source(l), sink(l);
    int v = 0;
    for (int i = 0; i < l; ++i) {
        source[i].resize(parts[i]);
        for (int j = 0; j < parts[i]; ++j) source[i][j] = ++v;
    }
    for (int i = 0; i < l; ++i) {
        sink[i].assign(parts[i], 0);
        sink[i][0] = i + 1;
    }
    v = l;
    for (int i = l - 1; i >= 0; --i)
        for (int j = 1; j < parts[i]; ++j) sink[i][j] = ++v;
    return {CompositionTableau(TabKind::SIT, alpha, std::move(source)),
            CompositionTableau(TabKind::SIT, alpha, std::move(sink))};
}

std::pair<CompositionTableau, CompositionTableau> set_extremes(const Composition& alpha) {
    const auto& parts = alpha.parts();
    const int l = alpha.length();
    std::vector<std::vector<int>> source(l), sink(l);
    int v = 0;
    for (int i = 0; i < l; ++i) {
        source[i].resize(parts[i]);
        for (int j = 0; j < parts[i]; ++j) source[i][j] = ++v;
    }
    for (int i = 0; i < l; ++i) sink[i].assign(parts[i], 0);
    v = 0;
    const int maxc = *std::max_element(parts.begin(), parts.end());
    for (int c = 1; c <= maxc; ++c)
        for (int i = 0; i < l; ++i)
            if (parts[i] >= c) sink[i][c - 1] = ++v;
    return {CompositionTableau(TabKind::SET, alpha, std::move(source)),
            CompositionTableau(TabKind::SET, alpha, std::move(sink))};
}

bool attacks(const CompositionTableau& t, int i, int j) {
    if (!(1 <= i && i < j && j <= t.n()))
        throw std::invalid_argument("attacks: need 1 <= i < j <= n");
    const auto [ri, ci] = t.cell_of(i);
    const auto [rj, cj] = t.cell_of(j);
    if (ci == cj) return true;
    return cj == ci + 1 && rj > ri;
}

bool is_source_tableau(const CompositionTableau& t) {
    const auto des = t.descents();
    const std::set<int> d(des.begin(), des.end());
    for (int i = 1; i < t.n(); ++i) {
        if (d.count(i)) continue;
        const auto [ri, ci] = t.cell_of(i);
        const auto [rj, cj] = t.cell_of(i + 1);
        if (!(rj == ri && cj == ci - 1)) return false;
    }
    return true;
}

bool is_sink_tableau(const CompositionTableau& t) {
    for (int i : t.descents())
        if (!attacks(t, i, i + 1)) return false;
    return true;
}

std::vector<int> standardized_column_word(const CompositionTableau& t, int col) {
    std::vector<int> word;
    const auto& parts = t.shape().parts();
    for (int i = 1; i <= t.shape().length(); ++i)
        if (parts[i - 1] >= col) word.push_back(t.at(i, col));
    std::vector<int> sorted = word;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> st(word.size());
    for (std::size_t j = 0; j < word.size(); ++j)
        st[j] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), word[j]) -
                                 sorted.begin()) +
                1;
    return st;
}

std::vector<std::vector<int>> column_signature(const CompositionTableau& t) {
    const auto& parts = t.shape().parts();
    const int maxc = *std::max_element(parts.begin(), parts.end());
    std::vector<std::vector<int>> sig;
    sig.reserve(maxc);
    for (int c = 1; c <= maxc; ++c) sig.push_back(standardized_column_word(t, c));
    return sig;
}

namespace {

// Values are placed in decreasing order, so each row fills left to right and
// the validity constraints reduce to prefix-count conditions: a row may open
// its first column only once every lower row has started, and a row may grow
// to length c+1 only if no higher row currently has length exactly c.
struct SrctSearch {
    const Composition& shape;
    const std::vector<int>& parts;
    int l;
    std::vector<std::vector<int>> grid;
    std::vector<int> filled;
    std::vector<CompositionTableau>& out;

    void run(int v) {
        if (v == 0) {
            out.emplace_back(TabKind::SRCT, shape, grid);
            return;
        }
        for (int r = 0; r < l; ++r) {
            if (filled[r] == parts[r]) continue;
            bool ok = true;
            if (filled[r] == 0) {
                for (int rr = r + 1; rr < l && ok; ++rr)
                    if (filled[rr] == 0) ok = false;
            } else {
                for (int rr = 0; rr < r && ok; ++rr)
                    if (filled[rr] == filled[r]) ok = false;
            }
            if (!ok) continue;
            grid[r][filled[r]++] = v;
            run(v - 1);
            grid[r][--filled[r]] = 0;
        }
    }
};

// Increasing fillings work the same way with values placed in increasing
// order: an increasing first column lets a row open only after every higher
// row has started, and fully increasing columns make each column fill from
// the top.
struct StandardSearch {
    TabKind kind;
    const Composition& shape;
    const std::vector<int>& parts;
    int l;
    std::vector<std::vector<int>> grid;
    std::vector<int> filled;
    std::vector<CompositionTableau>& out;

    void run(int v, int n) {
        if (v > n) {
            out.emplace_back(kind, shape, grid);
            return;
        }
        for (int r = 0; r < l; ++r) {
            if (filled[r] == parts[r]) continue;
            const int c = filled[r];
            bool ok = true;
            if (kind == TabKind::SIT) {
                if (c == 0) {
                    for (int rr = 0; rr < r && ok; ++rr)
                        if (filled[rr] == 0) ok = false;
                }
            } else {
                for (int rr = 0; rr < r && ok; ++rr)
                    if (parts[rr] > c && filled[rr] <= c) ok = false;
            }
            if (!ok) continue;
            grid[r][filled[r]++] = v;
            run(v + 1, n);
            grid[r][--filled[r]] = 0;
        }
    }
};

}  // namespace

std::vector<CompositionTableau> srct_enumerate(const Composition& alpha) {
    const auto& parts = alpha.parts();
    const int l = alpha.length();
    std::vector<std::vector<int>> grid(l);
    for (int i = 0; i < l; ++i) grid[i].assign(parts[i], 0);
    std::vector<CompositionTableau> out;
    SrctSearch search{alpha, parts, l, std::move(grid), std::vector<int>(l, 0), out};
    search.run(alpha.size());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CompositionTableau> standard_tableaux(TabKind kind, const Composition& alpha) {
    if (kind == TabKind::SRCT) return srct_enumerate(alpha);
    const auto& parts = alpha.parts();
    const int l = alpha.length();
    std::vector<std::vector<int>> grid(l);
    for (int i = 0; i < l; ++i) grid[i].assign(parts[i], 0);
    std::vector<CompositionTableau> out;
    StandardSearch search{kind, alpha, parts, l, std::move(grid), std::vector<int>(l, 0), out};
    search.run(1, alpha.size());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SrctClass> srct_classes(const Composition& alpha) {
    std::map<std::vector<std::vector<int>>, std::vector<CompositionTableau>> buckets;
    for (auto& t : srct_enumerate(alpha)) {
        auto sig = column_signature(t);
        buckets[std::move(sig)].push_back(std::move(t));
    }
    std::vector<SrctClass> classes;
    for (auto& [sig, members] : buckets) {
        const CompositionTableau* source = nullptr;
        const CompositionTableau* sink = nullptr;
        for (const auto& t : members) {
            if (is_source_tableau(t)) {
                if (source) throw std::logic_error("srct_classes: class with two source tableaux");
                source = &t;
            }
            if (is_sink_tableau(t)) {
                if (sink) throw std::logic_error("srct_classes: class with two sink tableaux");
                sink = &t;
            }
        }
        if (!source || !sink)
            throw std::logic_error("srct_classes: class missing its source or sink tableau");
        classes.push_back(SrctClass{alpha, sig, members, *source, *sink});
    }
    std::sort(classes.begin(), classes.end(),
              [](const SrctClass& a, const SrctClass& b) { return a.source < b.source; });
    return classes;
}

CompositionTableau sink_from(const CompositionTableau& t) {
    if (t.kind() != TabKind::SRCT) throw std::invalid_argument("sink_from: SRCT input required");
    const auto& parts = t.shape().parts();
    const int l = t.shape().length();
    const int n = t.n();
    const int maxc = *std::max_element(parts.begin(), parts.end());
    std::vector<std::vector<char>> starred(l);
    for (int i = 0; i < l; ++i) starred[i].assign(parts[i], 0);
    std::vector<std::pair<int, int>> cell(n + 1);

    cell[n] = {l, 1};
    starred[l - 1][0] = 1;
    for (int m = n - 1; m >= 1; --m) {
        // greatest entry of the leftmost column still holding an entry
        int cur_row = 0, cur_col = 0, cur_val = 0;
        for (int c = 1; c <= maxc && cur_val == 0; ++c)
            for (int r = 1; r <= l; ++r) {
                if (parts[r - 1] < c || starred[r - 1][c - 1]) continue;
                if (t.at(r, c) > cur_val) {
                    cur_val = t.at(r, c);
                    cur_row = r;
                    cur_col = c;
                }
            }
        // step right while the next column holds a larger entry strictly
        // below the current one; land on that column's maximum
        while (cur_col < maxc) {
            const int c = cur_col + 1;
            bool trigger = false;
            int best_val = 0, best_row = 0;
            for (int r = 1; r <= l; ++r) {
                if (parts[r - 1] < c || starred[r - 1][c - 1]) continue;
                const int e = t.at(r, c);
                if (e > cur_val && r > cur_row) trigger = true;
                if (e > best_val) {
                    best_val = e;
                    best_row = r;
                }
            }
            if (!trigger) break;
            cur_val = best_val;
            cur_row = best_row;
            cur_col = c;
        }
        cell[m] = {cur_row, cur_col};
        starred[cur_row - 1][cur_col - 1] = 1;
    }

    std::vector<std::vector<int>> rows(l);
    for (int i = 0; i < l; ++i) rows[i].assign(parts[i], 0);
    for (int m = 1; m <= n; ++m) rows[cell[m].first - 1][cell[m].second - 1] = m;
    return CompositionTableau(TabKind::SRCT, t.shape(), std::move(rows));
}

Permutation read_tau(const CompositionTableau& t) {
    if (t.kind() != TabKind::SRCT) throw std::invalid_argument("read_tau: SRCT input required");
    CompositionTableau source = t;
    if (!is_source_tableau(source)) {
        const auto sig = column_signature(t);
        bool found = false;
        for (const auto& cand : srct_enumerate(t.shape()))
            if (column_signature(cand) == sig && is_source_tableau(cand)) {
                source = cand;
                found = true;
                break;
            }
        if (!found) throw std::logic_error("read_tau: class source not found");
    }
    std::vector<int> des = source.descents();
    des.push_back(t.n());
    std::vector<int> word;
    word.reserve(t.n());
    int lo = 1;
    for (int hi : des) {
        std::vector<std::pair<int, int>> cells;  // (col, row) of the strip
        for (int v = lo; v <= hi; ++v) {
            const auto [r, c] = source.cell_of(v);
            cells.emplace_back(c, r);
        }
        std::sort(cells.begin(), cells.end());
        for (const auto& [c, r] : cells) word.push_back(t.at(r, c));
        lo = hi + 1;
    }
    return Permutation(word);
}

Diagram dual_immaculate_diagram(const Composition& alpha) {
    const auto& parts = alpha.parts();
    const int l = alpha.length();
    std::vector<int> k(l, 0);
    for (int i = l - 2; i >= 0; --i) k[i] = k[i + 1] + parts[i + 1] - 1;
    std::set<Cell> cells;
    for (int i = 1; i <= l; ++i) {
        cells.insert({1, i});
        for (int j = 2; j <= parts[i - 1]; ++j) cells.insert({j + k[i - 1], i});
    }
    return Diagram(std::move(cells));
}

Diagram extended_diagram(const Composition& alpha) {
    const auto& parts = alpha.parts();
    std::set<Cell> cells;
    for (int a = 1; a <= alpha.length(); ++a)
        for (int b = 1; b <= parts[a - 1]; ++b) cells.insert({b, a});
    return Diagram(std::move(cells));
}

Poset poset_dual_immaculate(const Composition& alpha) {
    return canonical_poset(dual_immaculate_diagram(alpha));
}

Poset poset_extended(const Composition& alpha) {
    return canonical_poset(extended_diagram(alpha));
}

Poset poset_quasischur(const SrctClass& e) {
    const int n = e.shape.size();
    const auto des = e.source.descents();
    const std::set<int> d(des.begin(), des.end());
    std::vector<int> rest;
    for (int i = 1; i < n; ++i)
        if (!d.count(i)) rest.push_back(i);
    return canonical_poset(build_d(comp_of(rest, n), read_tau(e.sink)));
}

Poset twisted_poset(TwistedFamily family, const Composition& alpha) {
    switch (family) {
        case TwistedFamily::RDIF: return poset_dual_immaculate(alpha).bar();
        case TwistedFamily::RESF: return poset_extended(alpha).bar();
        default:
            throw std::invalid_argument("twisted_poset: this family is indexed by an SRCT class");
    }
}

Poset twisted_poset(TwistedFamily family, const SrctClass& e) {
    switch (family) {
        case TwistedFamily::YQS: return poset_quasischur(e).bar().star();
        case TwistedFamily::YRQS: return poset_quasischur(e).bar();
        case TwistedFamily::RQS: return poset_quasischur(e).star();
        default: throw std::invalid_argument("twisted_poset: this family takes a composition");
    }
}

}  // namespace heckeposet
