#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "heckeposet/composition.hpp"
#include "heckeposet/poset.hpp"

namespace heckeposet {

// Border strips live inside the composition diagram cd(alpha).  Cells are
// (row, column) pairs, 1-based, with row 1 the top row of the diagram, so
// row r has cells (r, 1) .. (r, alpha_r).
//
// DualImmaculate strips are unions of contiguous horizontal runs, one per
// row, in consecutive rows, each run starting in column 1; a single run may
// sit anywhere.  Extended strips instead use a relaxed connectivity: two
// cells of the strip in the same column count as adjacent when no diagram
// cell outside the strip lies between them, and every non-lowest strip cell
// of a column must have an empty left neighbour.

enum class StripFlavor { DualImmaculate, Extended };

using StripCell = std::pair<int, int>;

bool is_border_strip(StripFlavor flavor, const Composition& alpha,
                     const std::set<StripCell>& cells);

// Connectivity part of the strip test on its own (the figures in our test
// data exercise it separately from the column rules).
bool strip_connected(StripFlavor flavor, const Composition& alpha,
                     const std::set<StripCell>& cells);

// One less than the number of occupied rows.
int strip_height(const std::set<StripCell>& cells);

struct BorderStripTableau {
    Composition shape;
    StripFlavor flavor = StripFlavor::DualImmaculate;
    Composition type;
    std::map<StripCell, int> labels;

    std::set<StripCell> strip(int label) const;
    int total_height() const;
    int sign() const;
    std::string to_string() const;

    bool operator==(const BorderStripTableau&) const = default;
};

// All fillings of cd(alpha) by strips of sizes beta_1, beta_2, ... obeying
// the weak row increase, the column rules of the flavor (first column for
// DualImmaculate, every column for Extended), and strip validity.
std::vector<BorderStripTableau> enumerate_bst(StripFlavor flavor,
                                              const Composition& alpha,
                                              const Composition& beta);

// Signed count of enumerate_bst, each tableau weighing (-1)^[total height].
long long d_coefficient(StripFlavor flavor, const Composition& alpha,
                        const Composition& beta);

// Coefficient vector {d_(alpha,beta)} over all beta of the same size; entry
// beta is the coefficient of Psi_beta / z_beta in the dual immaculate resp.
// extended Schur function indexed by alpha.
std::map<Composition, long long> expand_in_psi(StripFlavor flavor,
                                               const Composition& alpha);

struct UniformSignResult {
    long long count = 0;
    int epsilon = 1;
};

// For type (s, s, ..., s) all tableaux carry one common height, so the
// signed count collapses to epsilon times the plain count.  Checks that
// property on the dual immaculate side and returns the pair.
UniformSignResult uniform_sign_check(StripFlavor flavor,
                                     const Composition& alpha, int s);

struct SkewExpansion {
    Poset poset;
    std::map<Composition, long long> chi;
};

// Classical regression target: the skew shape lambda/mu turned into a
// labelled poset via its column reading word, together with the classical
// border strip coefficients of the skew Schur function.
SkewExpansion skew_oracle(const std::vector<int>& lambda,
                          const std::vector<int>& mu);

}  // namespace heckeposet
