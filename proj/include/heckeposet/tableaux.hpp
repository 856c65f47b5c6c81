#pragma once

#include <string>
#include <utility>
#include <vector>

#include "heckeposet/composition.hpp"
#include "heckeposet/diagram.hpp"
#include "heckeposet/permutation.hpp"
#include "heckeposet/poset.hpp"

namespace heckeposet {

// SIT: rows increase left to right, first column increases top to bottom.
// SET: rows increase left to right, every column increases top to bottom.
// SRCT: rows decrease left to right, first column increases top to bottom,
//       and the triple condition holds (see CompositionTableau::validate).
enum class TabKind { SIT, SET, SRCT };

// Bijective filling of the composition diagram of shape alpha with 1..n.
// Cells are (row, column) with row 1 at the top; row i has alpha_i cells.
class CompositionTableau {
public:
    CompositionTableau(TabKind kind, Composition shape, std::vector<std::vector<int>> rows);

    TabKind kind() const { return kind_; }
    const Composition& shape() const { return shape_; }
    int n() const { return shape_.size(); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int at(int row, int col) const { return rows_[row - 1][col - 1]; }
    std::pair<int, int> cell_of(int value) const;  // (row, column)

    // Entries right to left within each row, top row first.
    Permutation read() const;

    // SIT/SET: i such that i+1 sits in a strictly lower row.
    // SRCT: i such that i+1 sits weakly to the right of i.
    std::vector<int> descents() const;

    // Rows '/'-separated, entries comma-separated: "2,1/5,4,3/7,6".
    std::string to_string() const;

    auto operator<=>(const CompositionTableau&) const = default;
    bool operator==(const CompositionTableau&) const = default;

private:
    void validate() const;

    TabKind kind_;
    Composition shape_;
    std::vector<std::vector<int>> rows_;
};

CompositionTableau tableau_from_string(TabKind kind, const std::string& text);

// Row-filling source and the two-stage sink (first column 1..l top to bottom,
// then remaining entries left to right, bottom row to top).
std::pair<CompositionTableau, CompositionTableau> sit_extremes(const Composition& alpha);
// Row-filling source and the column-filling sink.
std::pair<CompositionTableau, CompositionTableau> set_extremes(const Composition& alpha);

// ---- SRCT machinery ----------------------------------------------------

// For values i < j: same column, or adjacent columns with j lower right.
bool attacks(const CompositionTableau& t, int i, int j);
// Source: every nondescent i < n has i+1 immediately to its left.
// Sink: every descent attacks its successor.
bool is_source_tableau(const CompositionTableau& t);
bool is_sink_tableau(const CompositionTableau& t);

// Standardization of the column word read top to bottom.
std::vector<int> standardized_column_word(const CompositionTableau& t, int col);
std::vector<std::vector<int>> column_signature(const CompositionTableau& t);

std::vector<CompositionTableau> srct_enumerate(const Composition& alpha);

// All standard fillings of cd(alpha) of the given kind, sorted.
std::vector<CompositionTableau> standard_tableaux(TabKind kind, const Composition& alpha);

// Equivalence class of SRCT sharing all standardized column words.  Each
// class carries exactly one source and one sink tableau.
struct SrctClass {
    Composition shape;
    std::vector<std::vector<int>> signature;
    std::vector<CompositionTableau> members;
    CompositionTableau source;
    CompositionTableau sink;

    bool operator==(const SrctClass&) const = default;
};

std::vector<SrctClass> srct_classes(const Composition& alpha);

// Star-masking walk that locates the cell of each value m = n..1 by greedily
// chaining column maxima to the right; lands on the sink of t's class.
CompositionTableau sink_from(const CompositionTableau& t);

// Reads t along the horizontal strips cut out by the descents of the class
// source, each strip left to right, strips in increasing entry order.
Permutation read_tau(const CompositionTableau& t);

// ---- module posets -----------------------------------------------------

Diagram dual_immaculate_diagram(const Composition& alpha);
Diagram extended_diagram(const Composition& alpha);

Poset poset_dual_immaculate(const Composition& alpha);
Poset poset_extended(const Composition& alpha);
Poset poset_quasischur(const SrctClass& e);

// Relabel/reversal twists of the base posets.  The class-indexed families
// take a class of shape reverse(alpha) for YQS and RQS, of shape alpha for
// YRQS.
enum class TwistedFamily { RDIF, RESF, YQS, YRQS, RQS };

Poset twisted_poset(TwistedFamily family, const Composition& alpha);
Poset twisted_poset(TwistedFamily family, const SrctClass& e);

}  // namespace heckeposet
