#include "ctgames/centipede.hpp"

#include "ctgames/errors.hpp"

namespace ctgames {

namespace {

void check_m(int m) {
  if (m < 2) throw DomainError("centipede needs m >= 2, got " + std::to_string(m));
  if (m % 2 != 0) throw DomainError("centipede needs even m, got " + std::to_string(m));
}

}  // namespace

GameTree make_centipede(int m) {
  check_m(m);
  RawTree raw;
  raw.root = "d1";
  for (int t = 1; t <= m; ++t) {
    Rational u1, u2;
    if (t % 2 == 1) {
      int k1 = (t + 1) / 2;  // seat 1's k1-th opportunity to stop
      u1 = 2 * k1;
      u2 = 2 * k1 - 1;
    } else {
      int k2 = t / 2;
      u1 = 2 * k2 - 1;
      u2 = 2 * k2 + 2;
    }
    RawDecision node;
    node.owner = t % 2 == 1 ? 1 : 2;
    node.actions.push_back({"S", "t" + std::to_string(t)});
    node.actions.push_back(
        {"C", t == m ? "t" + std::to_string(m + 1) : "d" + std::to_string(t + 1)});
    raw.nodes.emplace("d" + std::to_string(t), std::move(node));
    raw.nodes.emplace("t" + std::to_string(t), RawTerminal{{u1, u2}});
  }
  // Final continue: seat 2's last index k2 = m/2 gives (2*k2+2, 2*k2+1).
  raw.nodes.emplace("t" + std::to_string(m + 1),
                    RawTerminal{{Rational(m + 2), Rational(m + 1)}});
  return validate_tree(raw);
}

bool is_long(int m) {
  check_m(m);
  return m >= 10;
}

BoundVerdict benchmark_verdict(int m, const Rational& payoff) {
  Rational benchmark = Rational(m) / 2;
  if (payoff < benchmark) return BoundVerdict::below;
  if (payoff == benchmark) return BoundVerdict::equal;
  return BoundVerdict::above;
}

BoundResult below_average_bound(int m, const Rational& p_stop) {
  check_m(m);
  if (p_stop < 0 || p_stop > 1) {
    throw DomainError("root stop probability must lie in [0,1], got " +
                      to_canonical(p_stop));
  }
  BoundResult result;
  result.bound = 2 * p_stop + Rational(m + 2) * (1 - p_stop);
  result.benchmark = Rational(m) / 2;
  result.verdict = benchmark_verdict(m, result.bound);
  return result;
}

}  // namespace ctgames
