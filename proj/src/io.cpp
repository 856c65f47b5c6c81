#include "heckeposet/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace heckeposet {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("missing key: ") + key);
    return j.at(key);
}

}  // namespace

std::string poset_to_json(const Poset& p) {
    json j;
    j["n"] = p.n();
    j["covers"] = json::array();
    for (auto [u, v] : p.covers()) j["covers"].push_back({u, v});
    return j.dump();
}

Poset poset_from_json(const std::string& text) {
    json j = json::parse(text);
    int n = require(j, "n").get<int>();
    std::vector<std::pair<int, int>> relations;
    const char* key = j.contains("covers") ? "covers" : "relations";
    for (const auto& pair : require(j, key)) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("relations must be pairs");
        relations.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    return Poset(n, relations);
}

std::string diagram_to_json(const Diagram& d) {
    json j;
    j["cells"] = json::array();
    for (const auto& [x, y] : d.cells()) j["cells"].push_back({x, y});
    return j.dump();
}

Diagram diagram_from_json(const std::string& text) {
    json j = json::parse(text);
    std::set<Cell> cells;
    for (const auto& pair : require(j, "cells")) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("cells must be pairs");
        cells.insert({pair[0].get<int>(), pair[1].get<int>()});
    }
    return Diagram(cells);
}

std::string action_to_json(const CombinatorialModule& m, int gen) {
    if (gen < 1 || gen > m.generator_count())
        throw std::invalid_argument("generator index out of range");
    json j;
    j["side"] = m.side == Side::Right ? "right" : "left";
    j["family"] = m.family == GenFamily::PiBar ? "pibar" : "pi";
    j["gen"] = gen;
    j["basis"] = json::array();
    for (const auto& g : m.basis) j["basis"].push_back(g.to_string());
    j["rows"] = json::array();
    for (int b = 0; b < m.dim(); ++b) {
        const ActionEntry& e = m.act[static_cast<size_t>(gen - 1)][static_cast<size_t>(b)];
        if (e.kind == ActionEntry::Zero) continue;
        json row;
        row["from"] = m.basis[static_cast<size_t>(b)].to_string();
        int target = e.kind == ActionEntry::Move ? e.target : b;
        row["to"] = m.basis[static_cast<size_t>(target)].to_string();
        row["sign"] = e.kind == ActionEntry::NegSelf ? -1 : 1;
        j["rows"].push_back(row);
    }
    return j.dump();
}

std::string expansion_to_json(const ExpansionTable& t) {
    json j;
    j["family"] = t.family;
    j["basis"] = t.basis;
    j["rows"] = json::array();
    for (const auto& [index, coeff] : t.rows) {
        json row;
        row["index"] = index;
        row["coeff"] = coeff;
        j["rows"].push_back(row);
    }
    return j.dump();
}

ExpansionTable expansion_from_json(const std::string& text) {
    json j = json::parse(text);
    ExpansionTable t;
    t.family = require(j, "family").get<std::string>();
    t.basis = require(j, "basis").get<std::string>();
    for (const auto& row : require(j, "rows"))
        t.rows.emplace_back(row.at("index").get<std::string>(), row.at("coeff").get<std::string>());
    return t;
}

std::string expansion_to_tsv(const ExpansionTable& t) {
    std::ostringstream out;
    for (const auto& [index, coeff] : t.rows) out << index << '\t' << coeff << '\n';
    return out.str();
}

std::string poset_to_dot(const Poset& p) {
    auto covers = p.covers();
    std::sort(covers.begin(), covers.end());

    // Longest chain from the bottom per element, for rank layering.
    std::vector<int> depth(static_cast<size_t>(p.n()) + 1, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [u, v] : covers) {
            if (depth[static_cast<size_t>(v)] < depth[static_cast<size_t>(u)] + 1) {
                depth[static_cast<size_t>(v)] = depth[static_cast<size_t>(u)] + 1;
                changed = true;
            }
        }
    }

    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    std::map<int, std::vector<int>> layers;
    for (int v = 1; v <= p.n(); ++v) layers[depth[static_cast<size_t>(v)]].push_back(v);
    for (const auto& [d, nodes] : layers) {
        out << "  { rank=same;";
        for (int v : nodes) out << ' ' << v << ';';
        out << " }\n";
    }
    for (auto [u, v] : covers)
        out << "  " << u << " -> " << v << " [penwidth=" << (u > v ? 2 : 1) << "];\n";
    out << "}\n";
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace heckeposet
