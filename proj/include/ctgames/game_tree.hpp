#pragma once

#include <array>
#include <map>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ctgames/rational.hpp"

namespace ctgames {

enum class Seat : int { one = 1, two = 2 };

inline Seat other(Seat s) { return s == Seat::one ? Seat::two : Seat::one; }
inline int seat_index(Seat s) { return s == Seat::one ? 0 : 1; }
Seat seat_from_int(int n);  // throws DomainError unless n is 1 or 2

// Untyped tree description as it arrives from a file or a builder; nothing
// about it is trusted until validate_tree has run.
struct RawAction {
  std::string label;
  std::string child;
};
struct RawDecision {
  int owner = 0;
  std::vector<RawAction> actions;  // order significant
};
struct RawTerminal {
  std::vector<Rational> payoffs;
};
using RawNode = std::variant<RawDecision, RawTerminal>;
struct RawTree {
  std::string root;
  std::map<std::string, RawNode> nodes;
};

/// Validated finite two-player perfect-information tree with exact rational
/// terminal payoffs. Immutable after construction; safe to share.
class GameTree {
 public:
  struct Action {
    std::string label;
    int child = -1;
  };
  struct Decision {
    // No default member initializer: gcc 11 rejects the variant below when
    // the nested class carries one while GameTree is still incomplete.
    Seat owner;
    std::vector<Action> actions;
  };
  struct Terminal {
    std::array<Rational, 2> payoffs;
  };
  struct Node {
    std::string id;
    int parent = -1;  // -1 at the root
    std::variant<Decision, Terminal> data;
  };

  int root() const { return 0; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int index) const { return nodes_[index]; }

  /// Index of a node id, or -1 when unknown.
  int find(const std::string& id) const;
  /// Like find but throws DomainError for unknown ids.
  int index_of(const std::string& id) const;

  bool is_terminal(int index) const {
    return std::holds_alternative<Terminal>(nodes_[index].data);
  }
  const Decision& decision(int index) const {
    return std::get<Decision>(nodes_[index].data);
  }
  const Terminal& terminal(int index) const {
    return std::get<Terminal>(nodes_[index].data);
  }

  /// Decision-node indices owned by a seat, in preorder.
  std::vector<int> decision_nodes(Seat seat) const;
  std::vector<int> decision_nodes() const;
  std::vector<int> terminal_nodes() const;

  /// Root-to-node path as (node index, action index) steps, excluding `index`
  /// itself.
  std::vector<std::pair<int, int>> path_from_root(int index) const;

  RawTree to_raw() const;

  friend GameTree validate_tree(const RawTree& raw);
  friend GameTree subgame(const GameTree& tree, const std::string& node_id);

 private:
  GameTree() = default;
  void reindex();

  // Preorder: root first, children in declared action order.
  std::vector<Node> nodes_;
  std::unordered_map<std::string, int> index_;
};

/// Checks every structural invariant (single parent, acyclic, reachable,
/// non-empty action lists, distinct labels, exactly two payoffs per terminal)
/// and returns the tree in canonical preorder. Throws ValidationError.
GameTree validate_tree(const RawTree& raw);

/// Tree rooted at `node_id` containing exactly its successors, payoffs and
/// ids unchanged. Throws DomainError for unknown or terminal ids.
GameTree subgame(const GameTree& tree, const std::string& node_id);

}  // namespace ctgames
