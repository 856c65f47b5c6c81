#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "heckeposet/composition.hpp"
#include "heckeposet/permutation.hpp"
#include "heckeposet/poset.hpp"

namespace heckeposet {

// Cell of a first-quadrant diagram, stored as (column, row) with row 1 at
// the bottom.
using Cell = std::pair<int, int>;

// Finite set of cells with no empty row or column: the occupied rows are
// exactly 1..k and the occupied columns exactly 1..l.
class Diagram {
public:
    explicit Diagram(std::set<Cell> cells);

    const std::set<Cell>& cells() const { return cells_; }
    int size() const { return static_cast<int>(cells_.size()); }
    int row_count() const { return rows_; }
    int column_count() const { return cols_; }
    bool contains(const Cell& c) const { return cells_.count(c) > 0; }

    std::string to_string() const;

    bool operator==(const Diagram&) const = default;

private:
    std::set<Cell> cells_;
    int rows_ = 0;
    int cols_ = 0;
};

// A bijective filling of a diagram with 1..n.
struct DiagramTableau {
    Diagram shape;
    std::map<Cell, int> entries;

    bool operator==(const DiagramTableau&) const = default;
};

// Labels the cells 1..n row by row starting with the top row (left to right
// within a row) and orders labels by componentwise <= on cells.
Poset canonical_poset(const Diagram& d);

// First tableau fills rows left to right starting with the lowermost row;
// second fills columns bottom to top starting with the leftmost column.
std::pair<DiagramTableau, DiagramTableau> diagram_extremes(const Diagram& d);

// Reads rows right to left starting with the lowermost row.
Permutation read_word(const DiagramTableau& t);

// Intersection construction of a diagram from a composition alpha of n and a
// permutation rho of [n] lying above w0_of(alpha) in left weak order.  Rows
// are cut by the descent-free runs of alpha's complement pushed through rho,
// columns by the left descents of rho; a cell appears wherever a row group
// meets a column group.
struct DiagramTrace {
    std::vector<std::vector<int>> row_groups;
    std::vector<std::vector<int>> column_groups;
    Diagram diagram;
};

DiagramTrace build_d_trace(const Composition& alpha, const Permutation& rho);
Diagram build_d(const Composition& alpha, const Permutation& rho);

}  // namespace heckeposet
