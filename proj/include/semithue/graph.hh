/* graph.hh -- layered transition graphs under a one-step relation, bounded
 * language enumeration, and dual-leftmost recognition. */

#ifndef SEMITHUE_GRAPH_HH_
#define SEMITHUE_GRAPH_HH_

#include <cstddef>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semithue/rewrite.hh"

namespace semithue {

/// Exploration limits. All positive. max_string_length prunes successors
/// whose size exceeds it (marking the result incomplete), max_depth caps the
/// layer count, max_nodes the number of distinct nodes.
struct Bounds {
  int max_string_length = 32;
  int max_depth = 64;
  int max_nodes = 200000;

  void check() const {
    if (max_string_length <= 0 || max_depth <= 0 || max_nodes <= 0)
      throw std::invalid_argument("bounds must be positive");
  }
};

/// Layered reachability graph of a one-step relation from a generating set.
/// A node lives in the earliest layer it is reached (lay_i = nodes at
/// distance i from the generating set); edges into already-discovered nodes
/// are kept as cross-edges. Edge labels are production indices, -1 when the
/// step has no production attached.
template <typename Node, typename Hash = std::hash<Node>>
struct TransitionGraph {
  struct Edge {
    int from;
    int to;
    int label;

    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
  };

  std::vector<Node> nodes;                    // discovery order
  std::unordered_map<Node, int, Hash> index;  // node -> position in `nodes`
  std::vector<int> depth;                     // per node
  std::vector<std::vector<int>> layers;       // node ids per layer
  std::vector<char> layer_complete;           // whole frontier expanded un-pruned
  std::vector<Edge> edges;
  bool complete = true;

  bool contains(const Node& n) const { return index.find(n) != index.end(); }
  int id_of(const Node& n) const { return index.at(n); }
  std::size_t size() const { return nodes.size(); }
  bool has_edge(int from, int to, int label) const {
    for (const Edge& e : edges)
      if (e.from == from && e.to == to && e.label == label) return true;
    return false;
  }
};

/// Breadth-first exploration with canonical-node deduplication.
/// `successors(node)` returns (successor, label) pairs; `size_of(node)` is
/// compared against bounds.max_string_length. Results are independent of
/// successor order up to edge ordering.
template <typename Node, typename Hash = std::hash<Node>, typename Succs,
          typename SizeFn>
TransitionGraph<Node, Hash> explore(const std::vector<Node>& initial,
                                    Succs&& successors, SizeFn&& size_of,
                                    const Bounds& bounds) {
  bounds.check();
  TransitionGraph<Node, Hash> graph;
  std::deque<int> frontier;

  auto add_node = [&](const Node& n, int d) -> int {
    if (static_cast<int>(graph.nodes.size()) >= bounds.max_nodes) return -1;
    int id = static_cast<int>(graph.nodes.size());
    graph.nodes.push_back(n);
    graph.index.emplace(n, id);
    graph.depth.push_back(d);
    while (static_cast<int>(graph.layers.size()) <= d) {
      graph.layers.emplace_back();
      graph.layer_complete.push_back(1);
    }
    graph.layers[d].push_back(id);
    return id;
  };

  for (const Node& n : initial) {
    if (graph.contains(n)) continue;
    if (static_cast<int>(size_of(n)) > bounds.max_string_length) {
      graph.complete = false;
      continue;
    }
    int id = add_node(n, 0);
    if (id < 0) {
      graph.complete = false;
      break;
    }
    frontier.push_back(id);
  }

  auto mark_truncated = [&](int layer) {
    graph.complete = false;
    if (layer >= 0 && layer < static_cast<int>(graph.layer_complete.size()))
      graph.layer_complete[layer] = 0;
  };

  while (!frontier.empty()) {
    int id = frontier.front();
    frontier.pop_front();
    int d = graph.depth[id];
    Node node = graph.nodes[id];  // copy: `nodes` may reallocate below
    auto succs = successors(node);
    if (d >= bounds.max_depth) {
      // depth cap: anything this node would still contribute is dropped
      if (!succs.empty()) mark_truncated(d);
      continue;
    }
    for (auto& [succ, label] : succs) {
      auto it = graph.index.find(succ);
      if (it != graph.index.end()) {
        graph.edges.push_back({id, it->second, label});
        continue;
      }
      if (static_cast<int>(size_of(succ)) > bounds.max_string_length) {
        mark_truncated(d + 1);
        continue;
      }
      int sid = add_node(succ, d + 1);
      if (sid < 0) {
        mark_truncated(d + 1);
        continue;
      }
      graph.edges.push_back({id, sid, label});
      frontier.push_back(sid);
    }
  }
  return graph;
}

struct VectorHash {
  std::size_t operator()(const SymbolString& s) const {
    std::size_t h = 1469598103934665603ull;
    for (SymbolId id : s) {
      h ^= static_cast<std::size_t>(id) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using StringGraph = TransitionGraph<SymbolString, VectorHash>;

enum class RelationKind { leftmost, full };

/// A one-step relation over strings: leftmost reduction (in the given
/// applicability mode) or unrestricted application.
struct Relation {
  RelationKind kind = RelationKind::leftmost;
  ApplicabilityMode mode = ApplicabilityMode::operational;

  static Relation leftmost(ApplicabilityMode m = ApplicabilityMode::operational) {
    return {RelationKind::leftmost, m};
  }
  static Relation full() { return {RelationKind::full, ApplicabilityMode::operational}; }
};

/// Labelled successors of s under the relation, sorted and deduplicated.
std::vector<std::pair<SymbolString, int>> relation_successors(const Grammar& g,
                                                              const SymbolString& s,
                                                              Relation relation);

/// Layered BFS of the relation from the given initial strings.
StringGraph transition_graph(const Grammar& g, Relation relation,
                             const std::vector<SymbolString>& initial,
                             const Bounds& bounds);

struct EnumerationResult {
  std::set<SymbolString> sentences;
  bool complete = true;
  StringGraph graph;
};

/// Bounded language of g under the relation, starting from the initial
/// symbols as one-symbol strings. sentences holds every graph node that is a
/// sentence; complete is true iff no bound was hit.
EnumerationResult enumerate_language(const Grammar& g, Relation relation,
                                     const Bounds& bounds);

struct RecognitionOracleResult {
  bool recognized = false;
  StringGraph graph;
};

/// Recognition ground truth: explores the leftmost relation of dual(g) from
/// {sentence}; recognized iff some node is a one-symbol string holding an
/// initial symbol of g. Throws std::invalid_argument unless sentence is a
/// sentence of g.
RecognitionOracleResult recognize_oracle(const Grammar& g, const SymbolString& sentence,
                                         ApplicabilityMode mode, const Bounds& bounds);

}  // namespace semithue

#endif  // SEMITHUE_GRAPH_HH_
