#include "heckeposet/diagram.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace heckeposet {

Diagram::Diagram(std::set<Cell> cells) : cells_(std::move(cells)) {
    std::set<int> rows, cols;
    for (const auto& [x, y] : cells_) {
        if (x < 1 || y < 1) throw std::invalid_argument("diagram: cells must have positive coordinates");
        cols.insert(x);
        rows.insert(y);
    }
    rows_ = static_cast<int>(rows.size());
    cols_ = static_cast<int>(cols.size());
    if (!rows.empty() && *rows.rbegin() != rows_)
        throw std::invalid_argument("diagram: empty row");
    if (!cols.empty() && *cols.rbegin() != cols_)
        throw std::invalid_argument("diagram: empty column");
}

std::string Diagram::to_string() const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& [x, y] : cells_) {
        if (!first) out << ", ";
        first = false;
        out << '(' << x << ',' << y << ')';
    }
    out << '}';
    return out.str();
}

namespace {

// Cells listed row by row from the top row, left to right within a row.
std::vector<Cell> top_row_major(const Diagram& d) {
    std::vector<Cell> order(d.cells().begin(), d.cells().end());
    std::sort(order.begin(), order.end(), [](const Cell& a, const Cell& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return order;
}

}  // namespace

Poset canonical_poset(const Diagram& d) {
    const std::vector<Cell> cell_of = top_row_major(d);
    const int n = d.size();
    std::vector<std::pair<int, int>> relations;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (cell_of[i].first <= cell_of[j].first && cell_of[i].second <= cell_of[j].second)
                relations.emplace_back(i + 1, j + 1);
        }
    return Poset(n, relations);
}

std::pair<DiagramTableau, DiagramTableau> diagram_extremes(const Diagram& d) {
    std::vector<Cell> by_rows(d.cells().begin(), d.cells().end());
    std::sort(by_rows.begin(), by_rows.end(), [](const Cell& a, const Cell& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    });
    std::vector<Cell> by_cols(d.cells().begin(), d.cells().end());
    std::sort(by_cols.begin(), by_cols.end(), [](const Cell& a, const Cell& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    DiagramTableau source{d, {}}, sink{d, {}};
    for (int v = 1; v <= d.size(); ++v) {
        source.entries[by_rows[v - 1]] = v;
        sink.entries[by_cols[v - 1]] = v;
    }
    return {source, sink};
}

Permutation read_word(const DiagramTableau& t) {
    std::vector<Cell> order(t.shape.cells().begin(), t.shape.cells().end());
    std::sort(order.begin(), order.end(), [](const Cell& a, const Cell& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first > b.first;
    });
    std::vector<int> word;
    word.reserve(order.size());
    for (const Cell& c : order) word.push_back(t.entries.at(c));
    return Permutation(word);
}

DiagramTrace build_d_trace(const Composition& alpha, const Permutation& rho) {
    const int n = alpha.size();
    if (rho.n() != n) throw std::invalid_argument("build_d: composition size and permutation degree differ");
    if (!leq_left(Permutation::w0_of(alpha), rho))
        throw std::invalid_argument("build_d: rho must lie above w0_of(alpha) in left weak order");

    std::vector<int> z = alpha.complement().set_of();
    z.push_back(n);
    std::vector<std::vector<int>> row_groups;
    int lo = 1;
    for (int hi : z) {
        std::vector<int> group;
        for (int r = lo; r <= hi; ++r) group.push_back(rho(r));
        std::sort(group.begin(), group.end());
        row_groups.push_back(std::move(group));
        lo = hi + 1;
    }

    std::vector<int> k = rho.des_left();
    k.push_back(n);
    std::vector<std::vector<int>> column_groups;
    lo = 1;
    for (int hi : k) {
        std::vector<int> group;
        for (int c = lo; c <= hi; ++c) group.push_back(c);
        column_groups.push_back(std::move(group));
        lo = hi + 1;
    }

    std::set<Cell> cells;
    for (int j = 0; j < static_cast<int>(row_groups.size()); ++j)
        for (int i = 0; i < static_cast<int>(column_groups.size()); ++i) {
            const auto& r = row_groups[j];
            const auto& c = column_groups[i];
            const bool meet = std::any_of(r.begin(), r.end(), [&](int v) {
                return std::binary_search(c.begin(), c.end(), v);
            });
            if (meet) cells.insert({i + 1, j + 1});
        }
    return DiagramTrace{std::move(row_groups), std::move(column_groups), Diagram(std::move(cells))};
}

Diagram build_d(const Composition& alpha, const Permutation& rho) {
    return build_d_trace(alpha, rho).diagram;
}

}  // namespace heckeposet
