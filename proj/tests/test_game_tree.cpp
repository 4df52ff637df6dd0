#include <doctest.h>

#include "ctgames/centipede.hpp"
#include "ctgames/errors.hpp"
#include "ctgames/game_tree.hpp"
#include "support.hpp"

using namespace ctgames;
using ctgtest::R;

namespace {

RawTree minimal_raw() {
  RawTree raw;
  raw.root = "d1";
  raw.nodes["d1"] = RawDecision{1, {{"S", "t1"}}};
  raw.nodes["t1"] = RawTerminal{{R("2"), R("1")}};
  return raw;
}

}  // namespace

TEST_CASE("minimal two-node tree validates") {
  GameTree tree = validate_tree(minimal_raw());
  CHECK(tree.size() == 2);
  CHECK(tree.decision_nodes().size() == 1);
  CHECK(tree.terminal_nodes().size() == 1);
  CHECK(tree.node(tree.root()).id == "d1");
  CHECK(tree.decision(tree.root()).owner == Seat::one);
  CHECK(tree.terminal(tree.index_of("t1")).payoffs[0] == 2);
}

TEST_CASE("structural defects are rejected") {
  SUBCASE("self cycle") {
    RawTree raw = minimal_raw();
    raw.nodes["d1"] = RawDecision{1, {{"S", "d1"}}};
    CHECK_THROWS_AS(validate_tree(raw), ValidationError);
  }
  SUBCASE("two-node cycle") {
    RawTree raw;
    raw.root = "d1";
    raw.nodes["d1"] = RawDecision{1, {{"S", "d2"}}};
    raw.nodes["d2"] = RawDecision{2, {{"S", "d1"}}};
    CHECK_THROWS_AS(validate_tree(raw), ValidationError);
  }
  SUBCASE("unreachable node") {
    RawTree raw = minimal_raw();
    raw.nodes["t9"] = RawTerminal{{R("0"), R("0")}};
    CHECK_THROWS_AS(validate_tree(raw), ValidationError);
  }
  SUBCASE("multiple parents") {
    RawTree raw = minimal_raw();
    raw.nodes["d1"] = RawDecision{1, {{"S", "t1"}, {"C", "t1"}}};
    CHECK_THROWS_AS(validate_tree(raw), ValidationError);
  }
  SUBCASE("decision node with no actions") {
    RawTree raw = minimal_raw();
    raw.nodes["d1"] = RawDecision{1, {}};
    CHECK_THROWS_AS(validate_tree(raw), ValidationError);
  }
  SUBCASE("duplicate action labels") {
    RawTree raw = minimal_raw();
    raw.nodes["t2"] = RawTerminal{{R("0"), R("0")}};
    raw.nodes["d1"] = RawDecision{1, {{"S", "t1"}, {"S", "t2"}}};
    CHECK_THROWS_AS(validate_tree(raw), ValidationError);
  }
  SUBCASE("terminal payoff arity") {
    RawTree raw = minimal_raw();
    raw.nodes["t1"] = RawTerminal{{R("2")}};
    CHECK_THROWS_AS(validate_tree(raw), ValidationError);
  }
  SUBCASE("unknown child id") {
    RawTree raw = minimal_raw();
    raw.nodes["d1"] = RawDecision{1, {{"S", "nope"}}};
    CHECK_THROWS_AS(validate_tree(raw), ValidationError);
  }
  SUBCASE("bad owner seat") {
    RawTree raw = minimal_raw();
    raw.nodes["d1"] = RawDecision{3, {{"S", "t1"}}};
    CHECK_THROWS(validate_tree(raw));
  }
}

TEST_CASE("centipede(4) validates with 4 decisions and 5 terminals") {
  GameTree tree = make_centipede(4);
  CHECK(tree.decision_nodes().size() == 4);
  CHECK(tree.terminal_nodes().size() == 5);
  CHECK(validate_tree(tree.to_raw()).size() == tree.size());
}

TEST_CASE("subgame extraction") {
  GameTree tree = make_centipede(4);

  SUBCASE("subgame at d3 keeps the three tail terminals") {
    GameTree sub = subgame(tree, "d3");
    CHECK(sub.decision_nodes().size() == 2);
    REQUIRE(sub.terminal_nodes().size() == 3);
    CHECK(sub.terminal(sub.index_of("t3")).payoffs ==
          std::array<Rational, 2>{R("4"), R("3")});
    CHECK(sub.terminal(sub.index_of("t4")).payoffs ==
          std::array<Rational, 2>{R("3"), R("6")});
    CHECK(sub.terminal(sub.index_of("t5")).payoffs ==
          std::array<Rational, 2>{R("6"), R("5")});
  }

  SUBCASE("subgame at the root is the identity") {
    GameTree sub = subgame(tree, "d1");
    REQUIRE(sub.size() == tree.size());
    for (int i = 0; i < tree.size(); ++i) {
      CHECK(sub.node(i).id == tree.node(i).id);
      CHECK(sub.node(i).parent == tree.node(i).parent);
    }
  }

  SUBCASE("centipede(10) at d9") {
    GameTree sub = subgame(make_centipede(10), "d9");
    CHECK(sub.decision_nodes().size() == 2);
    CHECK(sub.terminal(sub.index_of("t9")).payoffs ==
          std::array<Rational, 2>{R("10"), R("9")});
    CHECK(sub.terminal(sub.index_of("t10")).payoffs ==
          std::array<Rational, 2>{R("9"), R("12")});
    CHECK(sub.terminal(sub.index_of("t11")).payoffs ==
          std::array<Rational, 2>{R("12"), R("11")});
  }

  SUBCASE("errors") {
    CHECK_THROWS_AS(subgame(tree, "nope"), DomainError);
    CHECK_THROWS_AS(subgame(tree, "t1"), DomainError);
  }
}

TEST_CASE("path_from_root lists (node, action) steps") {
  GameTree tree = make_centipede(4);
  auto path = tree.path_from_root(tree.index_of("t3"));
  REQUIRE(path.size() == 3);  // d1 C, d2 C, d3 S
  CHECK(tree.node(path[0].first).id == "d1");
  CHECK(tree.decision(path[0].first).actions[path[0].second].label == "C");
  CHECK(tree.node(path[2].first).id == "d3");
  CHECK(tree.decision(path[2].first).actions[path[2].second].label == "S");
}
