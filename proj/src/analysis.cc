#include "semithue/analysis.hh"

#include <algorithm>
#include <unordered_map>

namespace semithue {

DeterminacyReport check_determinacy(const Grammar& prepared, const Bounds& bounds) {
  MachineConfig cfg = MachineConfig::generative(prepared);
  DeterminacyReport report;

  AdvanceResult root = advance(cfg, initial_generative(cfg));
  MachineGraph graph = explore<MachineState, MachineStateHash>(
      {root.state},
      [&](const MachineState& s) { return collapse_successors(cfg, s); },
      [](const MachineState& s) { return s.total_symbols(); }, bounds);
  report.complete = graph.complete;
  report.states_checked = static_cast<int>(graph.size());

  auto fail = [&](const std::string& why) {
    if (report.pass) {
      report.pass = false;
      report.counterexample = why;
    }
  };

  for (const MachineState& s : graph.nodes) {
    // nondeterminism may only come from the production choice of move 5
    std::vector<StepOutcome> outcomes = step(cfg, s);
    for (const StepOutcome& o : outcomes)
      if (o.move != 5)
        fail("non-5 outcome at a decision state:\n" + render_state(prepared, s));

    for (const StepOutcome& five : outcomes) {
      if (five.move != 5) continue;
      ++report.collapses_checked;
      const std::string via = prepared.render(prepared.productions()[five.production]);

      MachineState end = collapse(cfg, s, five.production);
      if (!(collapse(cfg, s, five.production) == end))
        fail("collapse not reproducible via " + via);

      AdvanceResult cont = advance(cfg, five.state);
      if (cont.looped) fail("non-terminating continuation via " + via);
      if (!(cont.state == end)) fail("continuation endpoint mismatch via " + via);

      // every intermediate step of the continuation must be forced
      MachineState at = five.state;
      for (const TraceRecord& r : cont.trail) {
        if (move5_enabled(cfg, at))
          fail("continuation passed through a move-5-enabled state via " + via);
        std::vector<StepOutcome> raw = step(cfg, at);
        if (raw.size() != 1 || !(raw.front().state == r.state))
          fail("continuation move not unique via " + via);
        at = r.state;
      }
      if (!cont.looped && !move5_enabled(cfg, cont.state) &&
          !step(cfg, cont.state).empty())
        fail("continuation stopped at a state that still allows a move");
    }
  }
  return report;
}

IsomorphismReport check_isomorphism(const Grammar& prepared, int depth,
                                    const Bounds& bounds) {
  IsomorphismReport report;
  report.depth_checked = depth;

  Bounds capped = bounds;
  capped.max_depth = depth;

  SymbolId start = prepared.initial_symbols().front();
  StringGraph strings = transition_graph(prepared, Relation::leftmost(),
                                         {SymbolString{start}}, capped);

  MachineConfig cfg = MachineConfig::generative(prepared);
  AdvanceResult root = advance(cfg, initial_generative(cfg));
  MachineGraph machine = explore<MachineState, MachineStateHash>(
      {root.state},
      [&](const MachineState& s) { return collapse_successors(cfg, s); },
      [](const MachineState& s) { return s.total_symbols(); }, capped);

  report.complete = strings.complete && machine.complete;

  auto fail = [&](const std::string& why) {
    if (report.counterexample.empty()) report.counterexample = why;
  };

  // encode every string node; injectivity across the whole graph
  std::vector<MachineState> image(strings.size());
  std::unordered_map<MachineState, int, MachineStateHash> preimage;
  bool encoding_ok = true;
  for (std::size_t i = 0; i < strings.size(); ++i) {
    try {
      image[i] = to_machine_state(prepared, strings.nodes[i]);
    } catch (const std::invalid_argument& e) {
      fail("no machine encoding for string '" + prepared.render(strings.nodes[i]) +
           "': " + e.what());
      encoding_ok = false;
      continue;
    }
    auto [it, inserted] = preimage.emplace(image[i], static_cast<int>(i));
    if (!inserted) {
      fail("encoding collision: '" + prepared.render(strings.nodes[it->second]) +
           "' and '" + prepared.render(strings.nodes[i]) + "'");
      encoding_ok = false;
    }
  }

  bool layers_ok = encoding_ok;
  std::size_t layer_count = std::max(strings.layers.size(), machine.layers.size());
  for (std::size_t d = 0; d < layer_count && d <= static_cast<std::size_t>(depth); ++d) {
    IsomorphismReport::LayerResult layer;
    layer.string_nodes =
        d < strings.layers.size() ? static_cast<int>(strings.layers[d].size()) : 0;
    layer.machine_nodes =
        d < machine.layers.size() ? static_cast<int>(machine.layers[d].size()) : 0;
    layer.bijective = encoding_ok && layer.string_nodes == layer.machine_nodes;
    if (layer.bijective && d < strings.layers.size()) {
      for (int id : strings.layers[d]) {
        if (!machine.contains(image[id]) ||
            machine.depth[machine.id_of(image[id])] != static_cast<int>(d)) {
          layer.bijective = false;
          fail("string '" + prepared.render(strings.nodes[id]) +
               "' has no machine node in layer " + std::to_string(d));
          break;
        }
      }
    } else if (!layer.bijective && encoding_ok) {
      fail("layer " + std::to_string(d) + " sizes differ: " +
           std::to_string(layer.string_nodes) + " strings vs " +
           std::to_string(layer.machine_nodes) + " machine states");
    }
    layers_ok = layers_ok && layer.bijective;
    report.layers.push_back(layer);
  }

  // edge correspondence, both directions, same production label
  bool edges_ok = true;
  if (encoding_ok) {
    for (const auto& e : strings.edges) {
      if (machine.contains(image[e.from]) && machine.contains(image[e.to]) &&
          machine.has_edge(machine.id_of(image[e.from]), machine.id_of(image[e.to]),
                           e.label)) {
        ++report.edges_matched;
      } else {
        ++report.edges_unmatched;
        edges_ok = false;
        fail("string edge '" + prepared.render(strings.nodes[e.from]) + "' -> '" +
             prepared.render(strings.nodes[e.to]) + "' has no machine counterpart");
      }
    }
    for (const auto& e : machine.edges) {
      auto from = preimage.find(machine.nodes[e.from]);
      auto to = preimage.find(machine.nodes[e.to]);
      if (from != preimage.end() && to != preimage.end() &&
          strings.has_edge(from->second, to->second, e.label)) {
        ++report.edges_matched;
      } else {
        ++report.edges_unmatched;
        edges_ok = false;
        fail("machine edge has no string counterpart:\n" +
             render_state(prepared, machine.nodes[e.from]) + "->\n" +
             render_state(prepared, machine.nodes[e.to]));
      }
    }
  }

  report.pass = encoding_ok && layers_ok && edges_ok;
  return report;
}

LanguageComparison compare_languages(const Grammar& g, const Bounds& bounds) {
  LanguageComparison cmp;

  EnumerationResult leftmost = enumerate_language(g, Relation::leftmost(), bounds);
  EnumerationResult full = enumerate_language(g, Relation::full(), bounds);
  cmp.leftmost_complete = leftmost.complete;
  cmp.full_complete = full.complete;
  for (const SymbolString& s : leftmost.sentences) cmp.leftmost.insert(g.render(s));
  for (const SymbolString& s : full.sentences) cmp.full.insert(g.render(s));

  Grammar prepared = prepare(g).grammar;
  MachineRunResult gen =
      run_generative(MachineConfig::generative(prepared), bounds);
  MachineRunResult egen =
      run_generative(MachineConfig::generative(prepared, /*extended=*/true), bounds);
  cmp.generated_complete = gen.complete;
  cmp.extended_generated_complete = egen.complete;
  for (const SymbolString& s : gen.sentences) cmp.generated.insert(prepared.render(s));
  for (const SymbolString& s : egen.sentences)
    cmp.extended_generated.insert(prepared.render(s));

  // transformations only extend the vocabulary, so g's sentences are valid
  // symbol strings of prepare(g)
  cmp.recognized_complete = full.complete;
  cmp.extended_recognized_complete = full.complete;
  for (const SymbolString& s : full.sentences) {
    RecognitionRunResult plain = run_recognitive(prepared, s, bounds, false);
    RecognitionRunResult extended = run_recognitive(prepared, s, bounds, true);
    cmp.recognized_complete = cmp.recognized_complete && plain.complete;
    cmp.extended_recognized_complete =
        cmp.extended_recognized_complete && extended.complete;
    if (plain.recognized) cmp.recognized.insert(g.render(s));
    if (extended.recognized) cmp.extended_recognized.insert(g.render(s));
  }
  return cmp;
}

}  // namespace semithue
