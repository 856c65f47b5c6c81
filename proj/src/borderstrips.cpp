#include "heckeposet/borderstrips.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace heckeposet {
namespace {

// Row spans of the ambient diagram, 0-indexed by row; row r occupies the
// columns first[r] .. last[r].  Composition diagrams have first == 1
// everywhere, skew shapes start a row at mu_r + 1.
struct Ambient {
    std::vector<int> first;
    std::vector<int> last;

    int rows() const { return static_cast<int>(first.size()); }
    bool contains(int r, int c) const {
        return r >= 1 && r <= rows() && c >= first[static_cast<size_t>(r - 1)] &&
               c <= last[static_cast<size_t>(r - 1)];
    }
};

Ambient ambient_of(const Composition& alpha) {
    Ambient a;
    a.first.assign(static_cast<size_t>(alpha.length()), 1);
    for (int r = 1; r <= alpha.length(); ++r) a.last.push_back(alpha.part(r));
    return a;
}

std::map<int, std::vector<int>> columns_by_row(const std::set<StripCell>& cells) {
    std::map<int, std::vector<int>> rows;
    for (const auto& [r, c] : cells) rows[r].push_back(c);
    return rows;
}

bool rows_contiguous(const std::set<StripCell>& cells) {
    for (const auto& [r, cols] : columns_by_row(cells)) {
        auto [lo, hi] = std::minmax_element(cols.begin(), cols.end());
        if (*hi - *lo + 1 != static_cast<int>(cols.size())) return false;
    }
    return true;
}

// Plain 4-adjacency connectivity.
bool plain_connected(const std::set<StripCell>& cells) {
    std::set<StripCell> seen;
    std::deque<StripCell> queue{*cells.begin()};
    seen.insert(*cells.begin());
    while (!queue.empty()) {
        auto [r, c] = queue.front();
        queue.pop_front();
        for (StripCell next : {StripCell{r - 1, c}, StripCell{r + 1, c},
                               StripCell{r, c - 1}, StripCell{r, c + 1}}) {
            if (cells.count(next) && !seen.count(next)) {
                seen.insert(next);
                queue.push_back(next);
            }
        }
    }
    return seen.size() == cells.size();
}

// Connectivity with the relaxed vertical links: two strip cells of one
// column are adjacent when every diagram cell strictly between them also
// belongs to the strip.
bool modified_connected(const Ambient& ambient, const std::set<StripCell>& cells) {
    std::map<int, std::vector<int>> columns;
    for (const auto& [r, c] : cells) columns[c].push_back(r);

    std::map<StripCell, std::vector<StripCell>> adj;
    for (const auto& [r, c] : cells) {
        for (StripCell next : {StripCell{r, c - 1}, StripCell{r, c + 1}}) {
            if (cells.count(next)) adj[{r, c}].push_back(next);
        }
    }
    for (auto& [c, rows] : columns) {
        std::sort(rows.begin(), rows.end());
        for (size_t i = 0; i + 1 < rows.size(); ++i) {
            bool blocked = false;
            for (int r = rows[i] + 1; r < rows[i + 1]; ++r) {
                if (ambient.contains(r, c)) blocked = true;
            }
            if (!blocked) {
                adj[{rows[i], c}].push_back({rows[i + 1], c});
                adj[{rows[i + 1], c}].push_back({rows[i], c});
            }
        }
    }

    std::set<StripCell> seen{*cells.begin()};
    std::deque<StripCell> queue{*cells.begin()};
    while (!queue.empty()) {
        StripCell cur = queue.front();
        queue.pop_front();
        for (const StripCell& next : adj[cur]) {
            if (!seen.count(next)) {
                seen.insert(next);
                queue.push_back(next);
            }
        }
    }
    return seen.size() == cells.size();
}

// Every strip cell with another strip cell below it in the same column must
// have an empty left neighbour.
bool upper_cells_left_free(const std::set<StripCell>& cells) {
    std::map<int, std::vector<int>> columns;
    for (const auto& [r, c] : cells) columns[c].push_back(r);
    for (const auto& [c, rows] : columns) {
        int lowest = *std::max_element(rows.begin(), rows.end());
        for (int r : rows) {
            if (r != lowest && cells.count({r, c - 1})) return false;
        }
    }
    return true;
}

bool has_two_by_two(const std::set<StripCell>& cells) {
    for (const auto& [r, c] : cells) {
        if (cells.count({r, c + 1}) && cells.count({r + 1, c}) &&
            cells.count({r + 1, c + 1}))
            return true;
    }
    return false;
}

// Horizontal runs, each starting in column 1, in consecutive rows; a single
// run may float free.
bool anchored_union_valid(const std::set<StripCell>& cells) {
    if (!rows_contiguous(cells)) return false;
    auto rows = columns_by_row(cells);
    if (rows.size() == 1) return true;
    int prev = 0;
    for (const auto& [r, cols] : rows) {
        if (*std::min_element(cols.begin(), cols.end()) != 1) return false;
        if (prev != 0 && r != prev + 1) return false;
        prev = r;
    }
    return true;
}

bool extended_valid(const Ambient& ambient, const std::set<StripCell>& cells) {
    return modified_connected(ambient, cells) && upper_cells_left_free(cells);
}

bool classical_valid(const std::set<StripCell>& cells) {
    return rows_contiguous(cells) && plain_connected(cells) && !has_two_by_two(cells);
}

void require_inside(const Ambient& ambient, const std::set<StripCell>& cells) {
    if (cells.empty()) throw std::invalid_argument("empty cell set");
    for (const auto& [r, c] : cells) {
        if (!ambient.contains(r, c)) throw std::invalid_argument("cell outside diagram");
    }
}

// Enumeration of strip fillings.  Labels are placed in increasing order, so
// the weak row increase forces each row to fill left to right and the weak
// column increase becomes a prefix condition per column after every strip.
struct BstSearch {
    Ambient ambient;
    bool all_columns = true;  // false checks column 1 only
    std::function<bool(const std::set<StripCell>&)> strip_ok;
    std::vector<int> sizes;

    std::vector<int> filled;
    std::vector<std::pair<StripCell, int>> labels;
    std::vector<std::map<StripCell, int>> results;

    int capacity(int r) const {
        return ambient.last[static_cast<size_t>(r - 1)] -
               ambient.first[static_cast<size_t>(r - 1)] + 1 -
               filled[static_cast<size_t>(r - 1)];
    }
    bool cell_filled(int r, int c) const {
        return c < ambient.first[static_cast<size_t>(r - 1)] +
                        filled[static_cast<size_t>(r - 1)];
    }

    bool columns_ok() const {
        int width = 0;
        for (int v : ambient.last) width = std::max(width, v);
        int to = all_columns ? width : 1;
        for (int c = 1; c <= to; ++c) {
            bool gap = false;
            for (int r = 1; r <= ambient.rows(); ++r) {
                if (!ambient.contains(r, c)) continue;
                if (!cell_filled(r, c)) {
                    gap = true;
                } else if (gap) {
                    return false;
                }
            }
        }
        return true;
    }

    void place(size_t label) {
        if (label > sizes.size()) {
            results.emplace_back(labels.begin(), labels.end());
            return;
        }
        std::vector<int> take(static_cast<size_t>(ambient.rows()), 0);
        choose_rows(label, 1, sizes[label - 1], take);
    }

    void choose_rows(size_t label, int row, int remaining, std::vector<int>& take) {
        if (remaining == 0) {
            apply(label, take);
            return;
        }
        if (row > ambient.rows()) return;
        int cap = std::min(capacity(row), remaining);
        for (int t = 0; t <= cap; ++t) {
            take[static_cast<size_t>(row - 1)] = t;
            choose_rows(label, row + 1, remaining - t, take);
        }
        take[static_cast<size_t>(row - 1)] = 0;
    }

    void apply(size_t label, const std::vector<int>& take) {
        std::set<StripCell> strip;
        size_t before = labels.size();
        for (int r = 1; r <= ambient.rows(); ++r) {
            int start = ambient.first[static_cast<size_t>(r - 1)] +
                        filled[static_cast<size_t>(r - 1)];
            for (int t = 0; t < take[static_cast<size_t>(r - 1)]; ++t) {
                strip.insert({r, start + t});
                labels.emplace_back(StripCell{r, start + t}, static_cast<int>(label));
            }
            filled[static_cast<size_t>(r - 1)] += take[static_cast<size_t>(r - 1)];
        }
        if (columns_ok() && strip_ok(strip)) place(label + 1);
        for (int r = 1; r <= ambient.rows(); ++r)
            filled[static_cast<size_t>(r - 1)] -= take[static_cast<size_t>(r - 1)];
        labels.resize(before);
    }

    std::vector<std::map<StripCell, int>> run() {
        filled.assign(static_cast<size_t>(ambient.rows()), 0);
        place(1);
        return results;
    }
};

std::vector<std::map<StripCell, int>> strip_fillings(
    const Ambient& ambient, const Composition& beta, bool all_columns,
    std::function<bool(const std::set<StripCell>&)> strip_ok) {
    BstSearch search;
    search.ambient = ambient;
    search.all_columns = all_columns;
    search.strip_ok = std::move(strip_ok);
    search.sizes = beta.parts();
    return search.run();
}

}  // namespace

bool is_border_strip(StripFlavor flavor, const Composition& alpha,
                     const std::set<StripCell>& cells) {
    Ambient ambient = ambient_of(alpha);
    require_inside(ambient, cells);
    if (flavor == StripFlavor::DualImmaculate) return anchored_union_valid(cells);
    return extended_valid(ambient, cells);
}

bool strip_connected(StripFlavor flavor, const Composition& alpha,
                     const std::set<StripCell>& cells) {
    Ambient ambient = ambient_of(alpha);
    require_inside(ambient, cells);
    if (flavor == StripFlavor::DualImmaculate) return plain_connected(cells);
    return modified_connected(ambient, cells);
}

int strip_height(const std::set<StripCell>& cells) {
    if (cells.empty()) throw std::invalid_argument("empty cell set");
    std::set<int> rows;
    for (const auto& [r, c] : cells) rows.insert(r);
    return static_cast<int>(rows.size()) - 1;
}

std::set<StripCell> BorderStripTableau::strip(int label) const {
    std::set<StripCell> cells;
    for (const auto& [cell, value] : labels) {
        if (value == label) cells.insert(cell);
    }
    return cells;
}

int BorderStripTableau::total_height() const {
    int total = 0;
    for (int i = 1; i <= type.length(); ++i) total += strip_height(strip(i));
    return total;
}

int BorderStripTableau::sign() const { return total_height() % 2 == 0 ? 1 : -1; }

std::string BorderStripTableau::to_string() const {
    std::ostringstream out;
    for (int r = 1; r <= shape.length(); ++r) {
        if (r > 1) out << '/';
        for (int c = 1; c <= shape.part(r); ++c) {
            if (c > 1) out << ',';
            out << labels.at({r, c});
        }
    }
    return out.str();
}

std::vector<BorderStripTableau> enumerate_bst(StripFlavor flavor,
                                              const Composition& alpha,
                                              const Composition& beta) {
    if (alpha.size() != beta.size()) throw std::invalid_argument("size mismatch");
    Ambient ambient = ambient_of(alpha);
    auto strip_ok = [&](const std::set<StripCell>& cells) {
        return flavor == StripFlavor::DualImmaculate ? anchored_union_valid(cells)
                                                     : extended_valid(ambient, cells);
    };
    bool all_columns = flavor == StripFlavor::Extended;
    std::vector<BorderStripTableau> out;
    for (auto& labels : strip_fillings(ambient, beta, all_columns, strip_ok)) {
        out.push_back({alpha, flavor, beta, std::move(labels)});
    }
    return out;
}

long long d_coefficient(StripFlavor flavor, const Composition& alpha,
                        const Composition& beta) {
    long long total = 0;
    for (const auto& tableau : enumerate_bst(flavor, alpha, beta)) total += tableau.sign();
    return total;
}

std::map<Composition, long long> expand_in_psi(StripFlavor flavor,
                                               const Composition& alpha) {
    std::map<Composition, long long> out;
    for (const auto& beta : compositions_of(alpha.size()))
        out[beta] = d_coefficient(flavor, alpha, beta);
    return out;
}

UniformSignResult uniform_sign_check(StripFlavor flavor, const Composition& alpha,
                                     int s) {
    if (flavor != StripFlavor::DualImmaculate)
        throw std::invalid_argument("uniform sign check needs the dual immaculate flavor");
    if (s < 1 || alpha.size() % s != 0)
        throw std::invalid_argument("size must be a multiple of the strip size");
    Composition beta(std::vector<int>(static_cast<size_t>(alpha.size() / s), s));

    UniformSignResult result;
    int common = -1;
    for (const auto& tableau : enumerate_bst(flavor, alpha, beta)) {
        for (int i = 1; i <= beta.length(); ++i) {
            auto cells = tableau.strip(i);
            bool meets_first = false;
            for (const auto& [r, c] : cells) meets_first |= c == 1;
            if (!meets_first && strip_height(cells) != 0)
                throw std::logic_error("strip off the first column is not horizontal");
        }
        int h = tableau.total_height();
        if (result.count == 0) {
            common = h;
        } else if (h != common) {
            throw std::logic_error("tableau heights are not uniform");
        }
        ++result.count;
    }
    if (result.count > 0) result.epsilon = common % 2 == 0 ? 1 : -1;
    return result;
}

SkewExpansion skew_oracle(const std::vector<int>& lambda, const std::vector<int>& mu) {
    auto decreasing = [](const std::vector<int>& parts) {
        for (size_t i = 0; i + 1 < parts.size(); ++i) {
            if (parts[i] < parts[i + 1]) return false;
        }
        return parts.empty() || parts.back() >= 1;
    };
    if (!decreasing(lambda) || !decreasing(mu) || mu.size() > lambda.size())
        throw std::invalid_argument("shapes must be nested partitions");

    Ambient ambient;
    int n = 0;
    for (size_t r = 0; r < lambda.size(); ++r) {
        int inner = r < mu.size() ? mu[r] : 0;
        if (inner > lambda[r]) throw std::invalid_argument("shapes must be nested partitions");
        ambient.first.push_back(inner + 1);
        ambient.last.push_back(lambda[r]);
        n += lambda[r] - inner;
    }
    if (n == 0) throw std::invalid_argument("empty skew shape");

    // Column reading filling: columns left to right, each bottom to top.
    std::vector<StripCell> cell_of(static_cast<size_t>(n) + 1);
    int value = 0;
    for (int c = 1; c <= (lambda.empty() ? 0 : lambda[0]); ++c) {
        for (int r = ambient.rows(); r >= 1; --r) {
            if (ambient.contains(r, c)) cell_of[static_cast<size_t>(++value)] = {r, c};
        }
    }

    std::vector<std::pair<int, int>> relations;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            auto [ri, ci] = cell_of[static_cast<size_t>(i)];
            auto [rj, cj] = cell_of[static_cast<size_t>(j)];
            if (ri <= rj && ci <= cj) relations.emplace_back(i, j);
        }
    }

    SkewExpansion out{Poset(n, relations), {}};
    for (const auto& beta : compositions_of(n)) {
        long long total = 0;
        for (const auto& labels :
             strip_fillings(ambient, beta, true,
                            [](const std::set<StripCell>& cells) { return classical_valid(cells); })) {
            int height = 0;
            for (int i = 1; i <= beta.length(); ++i) {
                std::set<StripCell> cells;
                for (const auto& [cell, v] : labels) {
                    if (v == i) cells.insert(cell);
                }
                height += strip_height(cells);
            }
            total += height % 2 == 0 ? 1 : -1;
        }
        out.chi[beta] = total;
    }
    return out;
}

}  // namespace heckeposet
