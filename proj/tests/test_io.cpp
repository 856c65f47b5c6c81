#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "heckeposet/io.hpp"
#include "heckeposet/ppart.hpp"

using namespace heckeposet;

namespace {

Poset running() { return Poset(5, {{5, 1}, {1, 3}, {1, 4}, {2, 4}}); }

}  // namespace

TEST_CASE("poset json round trip") {
    Poset p = running();
    std::string text = poset_to_json(p);
    CHECK(text == R"({"covers":[[1,3],[1,4],[2,4],[5,1]],"n":5})");
    CHECK(poset_from_json(text) == p);
    CHECK(poset_from_json(R"({"n": 5, "covers": [[5,1],[1,3],[1,4],[2,4]]})") == p);
    // arbitrary strict relations are accepted under the alternate key
    CHECK(poset_from_json(R"({"n": 3, "relations": [[1,2],[2,3],[1,3]]})") ==
          Poset(3, {{1, 2}, {2, 3}}));
    CHECK_THROWS_AS(poset_from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(poset_from_json(R"({"n": 2, "covers": [[1,1]]})"), std::invalid_argument);
    CHECK_THROWS_AS(poset_from_json("not json"), std::exception);
}

TEST_CASE("diagram json round trip") {
    Diagram d(std::set<Cell>{{1, 1}, {2, 1}, {1, 2}});
    std::string text = diagram_to_json(d);
    CHECK(text == R"({"cells":[[1,1],[1,2],[2,1]]})");
    CHECK(diagram_from_json(text) == d);
    CHECK(diagram_from_json(R"({"cells": []})") == Diagram(std::set<Cell>{}));
    CHECK_THROWS_AS(diagram_from_json("{}"), std::invalid_argument);
}

TEST_CASE("action tables serialize every nonzero image") {
    CombinatorialModule m = poset_module(running());
    std::string text = action_to_json(m, 1);
    CHECK(text.find(R"("side":"right")") != std::string::npos);
    CHECK(text.find(R"("family":"pibar")") != std::string::npos);
    CHECK(text.find(R"("gen":1)") != std::string::npos);
    CHECK(text.find(R"({"from":"25134","sign":1,"to":"52134"})") != std::string::npos);
    CHECK(text.find(R"({"from":"52134","sign":-1,"to":"52134"})") != std::string::npos);
    // 25314 is not an extension word, so 25134 dies under the third generator
    std::string gen3 = action_to_json(m, 3);
    CHECK(gen3.find(R"("from":"25134")") == std::string::npos);

    CombinatorialModule mb = poset_module_bar(running());
    std::string bar_text = action_to_json(mb, 2);
    CHECK(bar_text.find(R"("family":"pi")") != std::string::npos);
    CHECK(bar_text.find(R"({"from":"25134","sign":1,"to":"25134"})") != std::string::npos);
}

TEST_CASE("expansion tables in json and tsv") {
    ExpansionTable t;
    t.family = "dimm";
    t.basis = "Psi/z";
    t.rows = {{"(4,1)", "2"}, {"(5)", "1"}};
    std::string json = expansion_to_json(t);
    CHECK(expansion_from_json(json) == t);
    CHECK(expansion_to_tsv(t) == "(4,1)\t2\n(5)\t1\n");

    ExpansionTable f;
    f.family = "poset";
    f.basis = "F";
    f.rows = {{"F_(3)", "1"}};
    CHECK(expansion_from_json(expansion_to_json(f)) == f);
}

TEST_CASE("hasse diagrams in dot form") {
    std::string dot = poset_to_dot(running());
    CHECK(dot ==
          "digraph hasse {\n"
          "  rankdir=BT;\n"
          "  node [shape=plaintext];\n"
          "  { rank=same; 2; 5; }\n"
          "  { rank=same; 1; }\n"
          "  { rank=same; 3; 4; }\n"
          "  1 -> 3 [penwidth=1];\n"
          "  1 -> 4 [penwidth=1];\n"
          "  2 -> 4 [penwidth=1];\n"
          "  5 -> 1 [penwidth=2];\n"
          "}\n");
    // a natural chain has no bold edges, a strict chain only bold ones
    CHECK(poset_to_dot(Poset(3, {{1, 2}, {2, 3}})).find("penwidth=2") == std::string::npos);
    CHECK(poset_to_dot(Poset(2, {{2, 1}})).find("penwidth=1") == std::string::npos);
}

TEST_CASE("text files must exist") {
    CHECK_THROWS_AS(read_text_file("/nonexistent/path.json"), std::runtime_error);
}
