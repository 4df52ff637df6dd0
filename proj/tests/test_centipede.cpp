#include <doctest.h>

#include "ctgames/centipede.hpp"
#include "ctgames/errors.hpp"
#include "ctgames/solvers.hpp"
#include "support.hpp"

using namespace ctgames;
using ctgtest::R;

namespace {

std::array<Rational, 2> payoffs(const GameTree& tree, const std::string& id) {
  return tree.terminal(tree.index_of(id)).payoffs;
}

}  // namespace

TEST_CASE("payoff table for small sizes") {
  SUBCASE("m = 4") {
    GameTree tree = make_centipede(4);
    CHECK(payoffs(tree, "t1") == std::array<Rational, 2>{R("2"), R("1")});
    CHECK(payoffs(tree, "t2") == std::array<Rational, 2>{R("1"), R("4")});
    CHECK(payoffs(tree, "t3") == std::array<Rational, 2>{R("4"), R("3")});
    CHECK(payoffs(tree, "t4") == std::array<Rational, 2>{R("3"), R("6")});
    CHECK(payoffs(tree, "t5") == std::array<Rational, 2>{R("6"), R("5")});
  }
  SUBCASE("m = 2") {
    GameTree tree = make_centipede(2);
    CHECK(payoffs(tree, "t1") == std::array<Rational, 2>{R("2"), R("1")});
    CHECK(payoffs(tree, "t2") == std::array<Rational, 2>{R("1"), R("4")});
    CHECK(payoffs(tree, "t3") == std::array<Rational, 2>{R("4"), R("3")});
  }
}

TEST_CASE("size precondition") {
  CHECK_THROWS_AS(make_centipede(3), DomainError);
  CHECK_THROWS_AS(make_centipede(0), DomainError);
  CHECK_THROWS_AS(make_centipede(-2), DomainError);
  CHECK_THROWS_AS(make_centipede(1), DomainError);
}

TEST_CASE("structure for even m in [2, 40]") {
  for (int m = 2; m <= 40; m += 2) {
    CAPTURE(m);
    GameTree tree = make_centipede(m);
    auto decisions = tree.decision_nodes();
    REQUIRE(static_cast<int>(decisions.size()) == m);
    CHECK(static_cast<int>(tree.terminal_nodes().size()) == m + 1);
    for (int t = 0; t < m; ++t) {
      const auto& d = tree.decision(decisions[t]);
      CHECK(d.owner == (t % 2 == 0 ? Seat::one : Seat::two));
      REQUIRE(d.actions.size() == 2);
      CHECK(d.actions[0].label == "S");
      CHECK(d.actions[1].label == "C");
    }

    // Pie growth: stop totals 3, 5, 7, ... and the pass terminal tops them.
    Rational previous_total = 0;
    for (int t = 1; t <= m; ++t) {
      auto p = payoffs(tree, "t" + std::to_string(t));
      Rational total = p[0] + p[1];
      CHECK(total == 2 * t + 1);
      CHECK(total > previous_total);
      previous_total = total;
    }
    auto pass = payoffs(tree, "t" + std::to_string(m + 1));
    CHECK(pass[0] + pass[1] > previous_total);

    // Continuation benefit: if the node-t owner continues, the other seat
    // beats its stop payoff at every later terminal.
    for (int t = 1; t <= m; ++t) {
      int opponent = t % 2;  // payoff index of the non-owner at node t
      Rational at_stop = payoffs(tree, "t" + std::to_string(t))[opponent];
      for (int later = t + 1; later <= m + 1; ++later) {
        CHECK(payoffs(tree, "t" + std::to_string(later))[opponent] > at_stop);
      }
    }
  }
}

TEST_CASE("all-stop is the backward induction outcome for m in [2, 20]") {
  for (int m = 2; m <= 20; m += 2) {
    CAPTURE(m);
    auto result = backward_induction(make_centipede(m));
    for (const auto& [node, label] : result.seat1.choices) CHECK(label == "S");
    for (const auto& [node, label] : result.seat2.choices) CHECK(label == "S");
    CHECK(result.root_payoffs == std::pair{R("2"), R("1")});
    CHECK(result.unique);
  }
}

TEST_CASE("long-game threshold") {
  CHECK(is_long(10));
  CHECK(is_long(12));
  CHECK_FALSE(is_long(8));
  CHECK_FALSE(is_long(2));
  CHECK_THROWS_AS(is_long(7), DomainError);
}

TEST_CASE("below-average bound arithmetic") {
  SUBCASE("frozen values") {
    auto r = below_average_bound(10, R("3/4"));
    CHECK(r.bound == R("9/2"));
    CHECK(r.benchmark == R("5"));
    CHECK(r.verdict == BoundVerdict::below);

    r = below_average_bound(8, R("3/4"));
    CHECK(r.bound == R("4"));
    CHECK(r.benchmark == R("4"));
    CHECK(r.verdict == BoundVerdict::equal);

    r = below_average_bound(10, R("1"));
    CHECK(r.bound == R("2"));
    CHECK(r.verdict == BoundVerdict::below);

    r = below_average_bound(12, R("7/8"));
    CHECK(r.bound == R("7/2"));
    CHECK(r.benchmark == R("6"));
    CHECK(r.verdict == BoundVerdict::below);

    r = below_average_bound(4, R("3/4"));
    CHECK(r.bound == R("3"));
    CHECK(r.benchmark == R("2"));
    CHECK(r.verdict == BoundVerdict::above);
  }

  SUBCASE("endpoints and monotonicity") {
    for (int m = 2; m <= 40; m += 2) {
      CAPTURE(m);
      CHECK(below_average_bound(m, R("0")).bound == m + 2);
      CHECK(below_average_bound(m, R("1")).bound == 2);
      Rational previous = below_average_bound(m, R("0")).bound;
      for (int i = 1; i <= 8; ++i) {
        Rational bound = below_average_bound(m, Rational(i, 8)).bound;
        CHECK(bound < previous);
        previous = bound;
      }
    }
  }

  SUBCASE("probability out of range") {
    CHECK_THROWS_AS(below_average_bound(10, R("-1/4")), DomainError);
    CHECK_THROWS_AS(below_average_bound(10, R("5/4")), DomainError);
  }
}
