#include "semithue/graph.hh"

#include <algorithm>

namespace semithue {

std::vector<std::pair<SymbolString, int>> relation_successors(const Grammar& g,
                                                              const SymbolString& s,
                                                              Relation relation) {
  std::vector<Occurrence> occs = relation.kind == RelationKind::full
                                     ? all_occurrences(g, s)
                                     : leftmost_applicable(g, s, relation.mode);
  std::vector<std::pair<SymbolString, int>> out;
  out.reserve(occs.size());
  for (const Occurrence& o : occs) out.emplace_back(apply_at(g, s, o), o.production);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

StringGraph transition_graph(const Grammar& g, Relation relation,
                             const std::vector<SymbolString>& initial,
                             const Bounds& bounds) {
  if (initial.empty()) throw std::invalid_argument("empty generating set");
  return explore<SymbolString, VectorHash>(
      initial,
      [&](const SymbolString& s) { return relation_successors(g, s, relation); },
      [](const SymbolString& s) { return s.size(); }, bounds);
}

EnumerationResult enumerate_language(const Grammar& g, Relation relation,
                                     const Bounds& bounds) {
  std::vector<SymbolString> initial;
  for (SymbolId id : g.initial_symbols()) initial.push_back({id});
  EnumerationResult result;
  if (initial.empty()) {
    result.complete = true;
    return result;
  }
  result.graph = transition_graph(g, relation, initial, bounds);
  result.complete = result.graph.complete;
  for (const SymbolString& node : result.graph.nodes)
    if (is_sentence(g, node)) result.sentences.insert(node);
  return result;
}

RecognitionOracleResult recognize_oracle(const Grammar& g, const SymbolString& sentence,
                                         ApplicabilityMode mode, const Bounds& bounds) {
  if (!is_sentence(g, sentence))
    throw std::invalid_argument("recognize_oracle expects a sentence of the grammar");
  Grammar d = dual(g);
  RecognitionOracleResult result;
  result.graph = transition_graph(d, Relation::leftmost(mode), {sentence}, bounds);
  for (SymbolId id : g.initial_symbols()) {
    SymbolString target{id};
    if (result.graph.contains(target)) {
      result.recognized = true;
      break;
    }
  }
  return result;
}

}  // namespace semithue
