#include "semithue/machine.hh"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace semithue {

void Tape::shift_left() {
  if (scanned != kNoSymbol) {
    left.push_back(scanned);
  } else {
    // an empty square only ever shifts into a blank region
    assert(left.empty());
  }
  if (right.empty()) {
    scanned = kNoSymbol;
  } else {
    scanned = right.front();
    right.erase(right.begin());
  }
}

void Tape::shift_right() {
  if (scanned != kNoSymbol) {
    right.insert(right.begin(), scanned);
  } else {
    assert(right.empty());
  }
  if (left.empty()) {
    scanned = kNoSymbol;
  } else {
    scanned = left.back();
    left.pop_back();
  }
}

std::size_t MachineStateHash::operator()(const MachineState& s) const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  auto tape = [&](const Tape& t) {
    mix(t.left.size());
    for (SymbolId id : t.left) mix(static_cast<std::size_t>(id) + 1);
    mix(static_cast<std::size_t>(t.scanned) + 2);
    mix(t.right.size());
    for (SymbolId id : t.right) mix(static_cast<std::size_t>(id) + 1);
  };
  tape(s.top);
  tape(s.middle);
  tape(s.bottom);
  return h;
}

namespace {

void require_prepared(const Grammar& g) {
  if (g.initial_symbols().size() != 1)
    throw std::invalid_argument("machine requires a unique initial symbol");
  if (!is_normal(g))
    throw std::invalid_argument("machine requires a normal grammar");
}

}  // namespace

MachineConfig MachineConfig::generative(const Grammar& prepared, bool extended,
                                        Strategy strategy) {
  require_prepared(prepared);
  MachineConfig cfg;
  cfg.grammar_ = prepared;
  cfg.order_ = {5, 6, 1, 2, 3, 4};
  cfg.extended_ = extended;
  cfg.strategy_ = strategy;
  cfg.recognitive_ = false;
  cfg.start_ = prepared.initial_symbols().front();
  return cfg;
}

MachineConfig MachineConfig::recognitive(const Grammar& prepared, bool extended) {
  require_prepared(prepared);
  MachineConfig cfg;
  cfg.grammar_ = dual(prepared);
  cfg.order_ = {5, 7, 1, 2, 3, 4};
  cfg.extended_ = extended;
  cfg.strategy_ = Strategy::nondeterministic;
  cfg.recognitive_ = true;
  cfg.start_ = prepared.initial_symbols().front();
  return cfg;
}

MachineState initial_generative(const MachineConfig& cfg) {
  if (cfg.recognitive_mode())
    throw std::invalid_argument("initial_generative needs a generative configuration");
  MachineState s;
  s.top.scanned = cfg.start_symbol();
  return s;
}

MachineState initial_recognitive(const SymbolString& sentence) {
  if (sentence.empty()) throw std::invalid_argument("empty sentence");
  MachineState s;
  s.middle.right = sentence;
  return s;
}

bool is_generative_terminal(const MachineState& s) {
  return s.top.blank() && s.bottom.blank() && s.middle.scanned == kNoSymbol &&
         s.middle.right.empty() && !s.middle.left.empty();
}

bool is_recognitive_terminal(const MachineConfig& cfg, const MachineState& s) {
  return s.top.blank() && s.middle.blank() && s.bottom.left.empty() &&
         s.bottom.right.empty() && s.bottom.scanned == cfg.start_symbol();
}

std::vector<int> move5_matches(const MachineConfig& cfg, const MachineState& s) {
  std::vector<int> out;
  if (s.top.scanned != kNoSymbol || s.middle.scanned == kNoSymbol) return out;
  SymbolString redex;
  if (s.bottom.scanned != kNoSymbol) redex.push_back(s.bottom.scanned);
  redex.push_back(s.middle.scanned);
  const auto& prods = cfg.grammar().productions();
  for (int i = 0; i < static_cast<int>(prods.size()); ++i)
    if (prods[i].lhs == redex) out.push_back(i);
  return out;
}

bool move5_enabled(const MachineConfig& cfg, const MachineState& s) {
  return !move5_matches(cfg, s).empty();
}

namespace {

bool guard(const MachineConfig& cfg, const MachineState& s, int move) {
  const SymbolId t = s.top.scanned;
  const SymbolId m = s.middle.scanned;
  const SymbolId b = s.bottom.scanned;
  switch (move) {
    case 1:
      return t != kNoSymbol && m == kNoSymbol;
    case 2:
      return t == kNoSymbol && m != kNoSymbol && b == kNoSymbol;
    case 3:
      return t != kNoSymbol && m != kNoSymbol;
    case 4:
      return t == kNoSymbol && m != kNoSymbol && b != kNoSymbol;
    case 5:
      return move5_enabled(cfg, s);
    case 6:
      return t == kNoSymbol && m != kNoSymbol && cfg.grammar().is_terminal(m) &&
             b == kNoSymbol;
    case 7:
      return t == kNoSymbol && m == kNoSymbol;
    default:
      return false;
  }
}

MachineState apply_simple(const MachineState& s, int move) {
  MachineState out = s;
  switch (move) {
    case 1:
      out.middle.scanned = out.top.scanned;
      out.top.scanned = kNoSymbol;
      break;
    case 2:
      out.bottom.scanned = out.middle.scanned;
      out.middle.scanned = kNoSymbol;
      out.top.shift_left();
      break;
    case 3:
      out.top.shift_right();
      break;
    case 4:
      out.bottom.shift_left();
      break;
    case 6:
      out.top.shift_left();
      out.middle.shift_left();
      break;
    case 7:
      out.middle.shift_left();
      break;
    default:
      assert(false && "not a deterministic move");
  }
  return out;
}

MachineState apply_production(const MachineConfig& cfg, const MachineState& s,
                              int production) {
  const Production& p = cfg.grammar().productions()[production];
  MachineState out = s;
  out.middle.scanned = p.rhs[0];
  if (p.rhs.size() == 2) {
    assert(out.top.scanned == kNoSymbol);
    out.top.scanned = p.rhs[1];
  }
  if (p.lhs.size() == 2) out.bottom.scanned = kNoSymbol;
  out.bottom.shift_right();
  return out;
}

}  // namespace

std::vector<StepOutcome> step(const MachineConfig& cfg, const MachineState& s) {
  std::vector<StepOutcome> out;
  const auto& order = cfg.move_order();
  for (std::size_t i = 0; i < order.size(); ++i) {
    int move = order[i];
    if (!guard(cfg, s, move)) continue;
    if (move == 5) {
      std::vector<int> matches = move5_matches(cfg, s);
      if (cfg.strategy() == Strategy::markov && matches.size() > 1) matches.resize(1);
      for (int p : matches) out.push_back({5, p, apply_production(cfg, s, p)});
      if (cfg.extended()) {
        for (std::size_t j = i + 1; j < order.size(); ++j) {
          if (guard(cfg, s, order[j])) {
            out.push_back({order[j], -1, apply_simple(s, order[j])});
            break;
          }
        }
      }
    } else {
      out.push_back({move, -1, apply_simple(s, move)});
    }
    break;
  }
  return out;
}

AdvanceResult advance(const MachineConfig& cfg, MachineState s) {
  AdvanceResult result;
  std::vector<MachineState> seen{s};
  for (;;) {
    if (move5_enabled(cfg, s)) {
      result.state = std::move(s);
      result.move5_enabled = true;
      return result;
    }
    int taken = 0;
    for (int move : cfg.move_order()) {
      if (move == 5) continue;
      if (guard(cfg, s, move)) {
        taken = move;
        break;
      }
    }
    if (taken == 0) {
      result.state = std::move(s);
      return result;
    }
    MachineState next = apply_simple(s, taken);
    result.trail.push_back({taken, -1, next});
    if (std::find(seen.begin(), seen.end(), next) != seen.end()) {
      // revisiting a state in a deterministic chain: idling forever
      result.state = std::move(next);
      result.looped = true;
      return result;
    }
    seen.push_back(next);
    s = std::move(next);
  }
}

MachineState collapse(const MachineConfig& cfg, const MachineState& s, int production) {
  std::vector<int> matches = move5_matches(cfg, s);
  if (std::find(matches.begin(), matches.end(), production) == matches.end())
    throw std::invalid_argument("move 5 is not applicable via this production");
  return advance(cfg, apply_production(cfg, s, production)).state;
}

std::vector<std::pair<MachineState, int>> collapse_successors(const MachineConfig& cfg,
                                                              const MachineState& s) {
  std::vector<std::pair<MachineState, int>> out;
  std::vector<int> matches = move5_matches(cfg, s);
  if (matches.empty()) return out;
  if (cfg.strategy() == Strategy::markov && matches.size() > 1) matches.resize(1);
  for (int p : matches)
    out.emplace_back(advance(cfg, apply_production(cfg, s, p)).state, p);
  if (cfg.extended()) {
    for (int move : cfg.move_order()) {
      if (move == 5) continue;
      if (guard(cfg, s, move)) {
        out.emplace_back(advance(cfg, apply_simple(s, move)).state, -1);
        break;
      }
    }
  }
  return out;
}

std::optional<LeftmostDecomposition> decompose_leftmost(const Grammar& prepared,
                                                        const SymbolString& s) {
  std::size_t prefix = 0;
  while (prefix < s.size() && prepared.is_terminal(s[prefix])) ++prefix;
  for (std::size_t i = prefix; i < s.size(); ++i)
    if (prepared.is_terminal(s[i])) return std::nullopt;

  LeftmostDecomposition d;
  d.terminal_prefix.assign(s.begin(), s.begin() + prefix);
  if (prefix == s.size()) return d;

  std::vector<Occurrence> occs =
      leftmost_applicable(prepared, s, ApplicabilityMode::operational);
  if (occs.empty()) return std::nullopt;
  const Occurrence& o = occs.front();  // all share one (start, end)
  if (o.end - o.start == 2) {
    d.p1 = s[o.start];
    d.p2 = s[o.start + 1];
  } else {
    d.p2 = s[o.start];
  }
  d.context.assign(s.begin() + prefix, s.begin() + o.start);
  d.suffix.assign(s.begin() + o.end, s.end());
  return d;
}

MachineState to_machine_state(const Grammar& prepared, const SymbolString& s) {
  std::size_t prefix = 0;
  while (prefix < s.size() && prepared.is_terminal(s[prefix])) ++prefix;
  for (std::size_t i = prefix; i < s.size(); ++i)
    if (prepared.is_terminal(s[i]))
      throw std::invalid_argument(
          "string has a terminal after a nonterminal: no machine encoding");

  MachineState out;
  std::vector<Occurrence> occs =
      leftmost_applicable(prepared, s, ApplicabilityMode::operational);
  if (occs.empty()) {
    // no production applicable: the terminal shape carries the whole string
    out.middle.left = s;
    return out;
  }
  const Occurrence& o = occs.front();
  if (o.start < static_cast<int>(prefix))
    throw std::invalid_argument(
        "redex overlaps the terminal prefix: not a generative grammar");
  out.middle.left.assign(s.begin(), s.begin() + prefix);
  if (o.end - o.start == 2) {
    out.bottom.scanned = s[o.start];
    out.middle.scanned = s[o.start + 1];
  } else {
    out.middle.scanned = s[o.start];
  }
  out.bottom.left.assign(s.begin() + prefix, s.begin() + o.start);
  out.top.right.assign(s.begin() + o.end, s.end());
  return out;
}

MachineRunResult run_generative(const MachineConfig& cfg, const Bounds& bounds) {
  MachineRunResult result;
  AdvanceResult root = advance(cfg, initial_generative(cfg));
  result.graph = explore<MachineState, MachineStateHash>(
      {root.state},
      [&](const MachineState& s) { return collapse_successors(cfg, s); },
      [](const MachineState& s) { return s.total_symbols(); }, bounds);
  result.complete = result.graph.complete;
  for (const MachineState& s : result.graph.nodes)
    if (is_generative_terminal(s)) result.sentences.insert(s.middle.left);
  return result;
}

namespace {

// Raw move records along one collapsed edge: move 5 via `production` (or the
// extended skip move when production < 0), then the deterministic trail.
std::vector<TraceRecord> edge_trail(const MachineConfig& cfg, const MachineState& from,
                                    int production) {
  std::vector<TraceRecord> records;
  MachineState mid;
  if (production >= 0) {
    mid = apply_production(cfg, from, production);
    records.push_back({5, production, mid});
  } else {
    int taken = 0;
    for (int move : cfg.move_order()) {
      if (move == 5) continue;
      if (guard(cfg, from, move)) {
        taken = move;
        break;
      }
    }
    assert(taken != 0);
    mid = apply_simple(from, taken);
    records.push_back({taken, -1, mid});
  }
  AdvanceResult cont = advance(cfg, mid);
  for (TraceRecord& r : cont.trail) records.push_back(std::move(r));
  return records;
}

}  // namespace

RecognitionRunResult run_recognitive(const Grammar& prepared, const SymbolString& sentence,
                                     const Bounds& bounds, bool extended) {
  MachineConfig cfg = MachineConfig::recognitive(prepared, extended);
  RecognitionRunResult result;
  AdvanceResult root = advance(cfg, initial_recognitive(sentence));
  result.graph = explore<MachineState, MachineStateHash>(
      {root.state},
      [&](const MachineState& s) { return collapse_successors(cfg, s); },
      [](const MachineState& s) { return s.total_symbols(); }, bounds);
  result.complete = result.graph.complete;

  int target = -1;
  for (std::size_t i = 0; i < result.graph.nodes.size(); ++i) {
    if (is_recognitive_terminal(cfg, result.graph.nodes[i])) {
      result.recognized = true;
      target = static_cast<int>(i);
      break;
    }
  }
  if (target < 0) return result;

  // shortest accepting run: walk the layered graph back to the root, then
  // expand each collapsed edge into raw moves
  std::vector<std::pair<int, int>> path;  // (node, incoming label)
  int at = target;
  while (result.graph.depth[at] > 0) {
    bool found = false;
    for (const auto& e : result.graph.edges) {
      if (e.to == at && result.graph.depth[e.from] == result.graph.depth[at] - 1) {
        path.emplace_back(at, e.label);
        at = e.from;
        found = true;
        break;
      }
    }
    assert(found);  // breadth-first discovery always records a parent edge
    if (!found) break;
  }
  std::reverse(path.begin(), path.end());

  result.witness.push_back({0, -1, initial_recognitive(sentence)});
  for (TraceRecord& r : root.trail) result.witness.push_back(std::move(r));
  MachineState current = root.state;
  for (auto& [node, label] : path) {
    for (TraceRecord& r : edge_trail(cfg, current, label))
      result.witness.push_back(std::move(r));
    current = result.graph.nodes[node];
    assert(result.witness.back().state == current);
  }
  return result;
}

std::string render_tape(const Grammar& g, const Tape& t) {
  std::ostringstream out;
  for (SymbolId id : t.left) out << g.name(id) << ' ';
  out << '[' << (t.scanned == kNoSymbol ? " " : g.name(t.scanned)) << ']';
  for (SymbolId id : t.right) out << ' ' << g.name(id);
  return out.str();
}

std::string render_state(const Grammar& g, const MachineState& s) {
  std::ostringstream out;
  out << "top:    " << render_tape(g, s.top) << '\n';
  out << "middle: " << render_tape(g, s.middle) << '\n';
  out << "bottom: " << render_tape(g, s.bottom) << '\n';
  return out.str();
}

std::string render_trace(const Grammar& g, const std::vector<TraceRecord>& trace) {
  std::ostringstream out;
  for (const TraceRecord& r : trace) {
    if (r.move == 0) {
      out << "start";
    } else {
      out << "move " << r.move;
      if (r.production >= 0)
        out << " via " << g.render(g.productions()[r.production]);
    }
    out << '\n' << render_state(g, r.state);
  }
  return out.str();
}

}  // namespace semithue
