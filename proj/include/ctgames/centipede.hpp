#pragma once

#include "ctgames/game_tree.hpp"

namespace ctgames {

/// Increasing-sum centipede with m (even, >= 2) decision nodes. Ownership
/// alternates starting with seat 1; every node offers (S, C) in that order.
/// Seat 1's k1-th stop pays (2*k1, 2*k1-1); seat 2's k2-th stop pays
/// (2*k2-1, 2*k2+2); the final continue pays (m+2, m+1). Node ids are
/// d1..dm, stop terminals t1..tm, pass terminal t(m+1).
GameTree make_centipede(int m);

/// "Long" family threshold: true iff m >= 10.
bool is_long(int m);

enum class BoundVerdict { below, equal, above };

struct BoundResult {
  Rational bound;      // 2*p + (m+2)*(1-p)
  Rational benchmark;  // m/2
  BoundVerdict verdict;
};

/// Best-case expected payoff of a seat-1 strategy that stops at the root
/// with probability p_stop, compared against the m/2 benchmark.
/// Strictly decreasing in p_stop; bound(0) = m+2, bound(1) = 2.
BoundResult below_average_bound(int m, const Rational& p_stop);

/// Three-way comparison of an arbitrary payoff against the m/2 benchmark.
BoundVerdict benchmark_verdict(int m, const Rational& payoff);

}  // namespace ctgames
