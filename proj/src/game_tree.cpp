#include "ctgames/game_tree.hpp"

#include <algorithm>
#include <functional>

#include "ctgames/errors.hpp"

namespace ctgames {

Seat seat_from_int(int n) {
  if (n == 1) return Seat::one;
  if (n == 2) return Seat::two;
  throw DomainError("seat must be 1 or 2, got " + std::to_string(n));
}

int GameTree::find(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

int GameTree::index_of(const std::string& id) const {
  int idx = find(id);
  if (idx < 0) throw DomainError("unknown node id: " + id);
  return idx;
}

std::vector<int> GameTree::decision_nodes(Seat seat) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (!is_terminal(i) && decision(i).owner == seat) out.push_back(i);
  }
  return out;
}

std::vector<int> GameTree::decision_nodes() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (!is_terminal(i)) out.push_back(i);
  }
  return out;
}

std::vector<int> GameTree::terminal_nodes() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (is_terminal(i)) out.push_back(i);
  }
  return out;
}

std::vector<std::pair<int, int>> GameTree::path_from_root(int index) const {
  std::vector<std::pair<int, int>> path;
  int cur = index;
  while (nodes_[cur].parent >= 0) {
    int parent = nodes_[cur].parent;
    const auto& actions = decision(parent).actions;
    int action = -1;
    for (std::size_t a = 0; a < actions.size(); ++a) {
      if (actions[a].child == cur) {
        action = static_cast<int>(a);
        break;
      }
    }
    path.emplace_back(parent, action);
    cur = parent;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

RawTree GameTree::to_raw() const {
  RawTree raw;
  raw.root = nodes_[0].id;
  for (const auto& node : nodes_) {
    if (auto* dec = std::get_if<Decision>(&node.data)) {
      RawDecision rd;
      rd.owner = static_cast<int>(dec->owner);
      for (const auto& action : dec->actions) {
        rd.actions.push_back({action.label, nodes_[action.child].id});
      }
      raw.nodes.emplace(node.id, std::move(rd));
    } else {
      const auto& term = std::get<Terminal>(node.data);
      raw.nodes.emplace(node.id,
                        RawTerminal{{term.payoffs[0], term.payoffs[1]}});
    }
  }
  return raw;
}

void GameTree::reindex() {
  index_.clear();
  for (int i = 0; i < size(); ++i) index_.emplace(nodes_[i].id, i);
}

GameTree validate_tree(const RawTree& raw) {
  if (raw.nodes.empty()) throw ValidationError("tree has no nodes");
  if (!raw.nodes.count(raw.root)) {
    throw ValidationError("root id \"" + raw.root + "\" is not a node");
  }

  // Per-node structural checks and parent counting.
  std::map<std::string, int> parent_count;
  for (const auto& [id, node] : raw.nodes) parent_count[id] = 0;
  for (const auto& [id, node] : raw.nodes) {
    if (auto* dec = std::get_if<RawDecision>(&node)) {
      if (dec->owner != 1 && dec->owner != 2) {
        throw ValidationError("node " + id + ": owner must be 1 or 2");
      }
      if (dec->actions.empty()) {
        throw ValidationError("decision node " + id + " has zero actions");
      }
      std::vector<std::string> labels;
      for (const auto& action : dec->actions) {
        if (action.label.empty()) {
          throw ValidationError("node " + id + ": empty action label");
        }
        labels.push_back(action.label);
        if (!raw.nodes.count(action.child)) {
          throw ValidationError("node " + id + ": child \"" + action.child +
                                "\" does not exist");
        }
        parent_count[action.child] += 1;
      }
      std::sort(labels.begin(), labels.end());
      if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
        throw ValidationError("node " + id + ": duplicate action labels");
      }
    } else {
      const auto& term = std::get<RawTerminal>(node);
      if (term.payoffs.size() != 2) {
        throw ValidationError("terminal " + id + " carries " +
                              std::to_string(term.payoffs.size()) +
                              " payoffs, expected 2");
      }
    }
  }

  if (parent_count[raw.root] != 0) {
    throw ValidationError("root \"" + raw.root + "\" has a parent");
  }
  for (const auto& [id, count] : parent_count) {
    if (id != raw.root && count == 0) {
      throw ValidationError("unreachable node: " + id);
    }
    if (count > 1) {
      throw ValidationError("node " + id + " has multiple parents");
    }
  }

  // Iterative preorder from the root; cycle detection via visit marks.
  // Single-parent + full reachability above makes this a tree once acyclic.
  GameTree tree;
  std::map<std::string, bool> visited;
  std::function<void(const std::string&, int)> visit =
      [&](const std::string& id, int parent_index) {
        if (visited[id]) throw ValidationError("cycle detected at node " + id);
        visited[id] = true;
        int my_index = tree.size();
        GameTree::Node node;
        node.id = id;
        node.parent = parent_index;
        const RawNode& rn = raw.nodes.at(id);
        if (auto* dec = std::get_if<RawDecision>(&rn)) {
          GameTree::Decision d;
          d.owner = seat_from_int(dec->owner);
          tree.nodes_.push_back(std::move(node));
          tree.nodes_[my_index].data = std::move(d);
          for (const auto& action : dec->actions) {
            int child_index = tree.size();
            std::get<GameTree::Decision>(tree.nodes_[my_index].data)
                .actions.push_back({action.label, child_index});
            visit(action.child, my_index);
          }
        } else {
          const auto& term = std::get<RawTerminal>(rn);
          node.data = GameTree::Terminal{{term.payoffs[0], term.payoffs[1]}};
          tree.nodes_.push_back(std::move(node));
        }
      };
  visit(raw.root, -1);

  if (tree.size() != static_cast<int>(raw.nodes.size())) {
    // Reachability was already checked, so a shortfall means some edge
    // re-entered the visited set.
    throw ValidationError("cycle detected");
  }
  tree.reindex();
  return tree;
}

GameTree subgame(const GameTree& tree, const std::string& node_id) {
  int start = tree.index_of(node_id);
  if (tree.is_terminal(start)) {
    throw DomainError("cannot take a subgame at terminal node " + node_id);
  }
  GameTree sub;
  std::function<int(int, int)> copy = [&](int index, int parent) -> int {
    int my_index = sub.size();
    GameTree::Node node;
    node.id = tree.node(index).id;
    node.parent = parent;
    if (tree.is_terminal(index)) {
      node.data = tree.terminal(index);
      sub.nodes_.push_back(std::move(node));
    } else {
      GameTree::Decision d;
      d.owner = tree.decision(index).owner;
      sub.nodes_.push_back(std::move(node));
      sub.nodes_[my_index].data = std::move(d);
      for (const auto& action : tree.decision(index).actions) {
        int child = copy(action.child, my_index);
        std::get<GameTree::Decision>(sub.nodes_[my_index].data)
            .actions.push_back({action.label, child});
      }
    }
    return my_index;
  };
  copy(start, -1);
  sub.reindex();
  return sub;
}

}  // namespace ctgames
