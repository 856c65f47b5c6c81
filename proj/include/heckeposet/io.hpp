#pragma once

#include <string>
#include <utility>
#include <vector>

#include "heckeposet/diagram.hpp"
#include "heckeposet/hecke.hpp"
#include "heckeposet/poset.hpp"

namespace heckeposet {

// {"n": 5, "covers": [[5,1], ...]}; the reader also accepts a "relations"
// key with arbitrary strict relations.
std::string poset_to_json(const Poset& p);
Poset poset_from_json(const std::string& text);

// {"cells": [[column, row], ...]}
std::string diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const std::string& text);

// One generator of an action table:
// {"side": "right", "family": "pibar", "gen": 1, "basis": [...],
//  "rows": [{"from": "25134", "to": "52134", "sign": 1}, ...]}
// Rows cover every basis element with a nonzero image.
std::string action_to_json(const CombinatorialModule& m, int gen);

// An expansion printed as ordered (index, coefficient) rows, with the
// family and basis recorded so the table is self-describing.
struct ExpansionTable {
    std::string family;
    std::string basis;
    std::vector<std::pair<std::string, std::string>> rows;

    bool operator==(const ExpansionTable&) const = default;
};

std::string expansion_to_json(const ExpansionTable& t);
ExpansionTable expansion_from_json(const std::string& text);
std::string expansion_to_tsv(const ExpansionTable& t);

// Hasse diagram in DOT form. Covers whose lower element carries the larger
// label are drawn bold (penwidth 2), the rest thin; nodes sit in ranks by
// longest chain from the bottom so the picture reads like a Hasse diagram.
std::string poset_to_dot(const Poset& p);

std::string read_text_file(const std::string& path);

}  // namespace heckeposet
