#include "semithue/transforms.hh"

#include <map>
#include <stdexcept>
#include <utility>

namespace semithue {

namespace {

using ProductionList = std::vector<std::pair<SymbolString, SymbolString>>;

Grammar vocabulary_copy(const Grammar& g) {
  Grammar out;
  for (SymbolId id = 0; id < static_cast<SymbolId>(g.vocabulary_size()); ++id) {
    SymbolId nid = out.intern(g.name(id));
    out.mark_initial(nid, g.is_initial(id));
    out.mark_terminal(nid, g.is_terminal(id));
  }
  out.set_dual(g.is_dual());
  return out;
}

Grammar with_productions(const Grammar& vocab, const ProductionList& prods) {
  Grammar out = vocabulary_copy(vocab);
  for (const auto& [lhs, rhs] : prods) out.add_production(lhs, rhs);
  return out;
}

ProductionList production_list(const Grammar& g) {
  ProductionList out;
  out.reserve(g.productions().size());
  for (const Production& p : g.productions()) out.emplace_back(p.lhs, p.rhs);
  return out;
}

std::string render(const Grammar& g, const SymbolString& lhs, const SymbolString& rhs) {
  return g.render(lhs) + " -> " + g.render(rhs);
}

}  // namespace

SymbolId FreshSymbolSource::fresh(Grammar& g) {
  for (;;) {
    std::string name = prefix_ + std::to_string(counter_++);
    if (g.find(name) == kNoSymbol) return g.intern(name);
  }
}

void TransformTrace::append(TransformTrace other) {
  for (auto& r : other.replaced) replaced.push_back(std::move(r));
  for (auto& s : other.introduced_symbols) introduced_symbols.push_back(std::move(s));
}

TransformResult unique_initial(const Grammar& g, FreshSymbolSource& fresh) {
  std::vector<SymbolId> initial = g.initial_symbols();
  if (initial.size() == 1) return {g, {}};

  Grammar out = vocabulary_copy(g);
  SymbolId start = fresh.fresh(out);
  for (SymbolId id : out.initial_symbols()) out.mark_initial(id, false);
  out.mark_initial(start);
  for (const Production& p : g.productions()) out.add_production(p.lhs, p.rhs);

  TransformTrace trace;
  TransformTrace::Replacement rep;
  rep.original = "initial: " + out.render(initial);
  for (SymbolId id : initial) {
    out.add_production({start}, {id});
    rep.replacements.push_back(render(out, {start}, {id}));
  }
  trace.replaced.push_back(std::move(rep));
  trace.introduced_symbols.push_back(out.name(start));
  return {std::move(out), std::move(trace)};
}

TransformResult normalize(const Grammar& g, FreshSymbolSource& fresh) {
  Grammar vocab = vocabulary_copy(g);
  ProductionList prods = production_list(g);
  TransformTrace trace;
  std::map<std::pair<SymbolId, SymbolId>, SymbolId> shared_prefix;

  for (;;) {
    std::size_t target = prods.size();
    for (std::size_t i = 0; i < prods.size(); ++i) {
      if (prods[i].second.size() > 2 || prods[i].first.size() > 2) {
        target = i;
        break;
      }
    }
    if (target == prods.size()) break;

    auto [lhs, rhs] = prods[target];
    TransformTrace::Replacement rep;
    rep.original = render(vocab, lhs, rhs);

    if (rhs.size() > 2) {
      SymbolId n = fresh.fresh(vocab);
      SymbolString pair{rhs[0], rhs[1]};
      SymbolString shortened{n};
      shortened.insert(shortened.end(), rhs.begin() + 2, rhs.end());
      prods[target] = {lhs, shortened};
      prods.insert(prods.begin() + target + 1, {SymbolString{n}, pair});
      rep.replacements.push_back(render(vocab, lhs, shortened));
      rep.replacements.push_back(render(vocab, {n}, pair));
      trace.introduced_symbols.push_back(vocab.name(n));
    } else {
      std::pair<SymbolId, SymbolId> key{lhs[0], lhs[1]};
      auto it = shared_prefix.find(key);
      bool fresh_n = it == shared_prefix.end();
      SymbolId n = fresh_n ? fresh.fresh(vocab) : it->second;
      if (fresh_n) {
        shared_prefix.emplace(key, n);
        trace.introduced_symbols.push_back(vocab.name(n));
      }
      SymbolString shortened{n};
      shortened.insert(shortened.end(), lhs.begin() + 2, lhs.end());
      prods[target] = {shortened, rhs};
      rep.replacements.push_back(render(vocab, shortened, rhs));
      if (fresh_n) {
        // one A B -> N production total per distinct prefix, kept at the end
        prods.push_back({{lhs[0], lhs[1]}, {n}});
        rep.replacements.push_back(render(vocab, {lhs[0], lhs[1]}, {n}));
      }
    }
    trace.replaced.push_back(std::move(rep));
  }
  return {with_productions(vocab, prods), std::move(trace)};
}

TransformResult isolate_terminals(const Grammar& g, FreshSymbolSource& fresh) {
  if (!is_normal(g))
    throw std::invalid_argument("isolate_terminals requires a normal grammar");

  Grammar vocab = vocabulary_copy(g);
  ProductionList prods = production_list(g);
  TransformTrace trace;

  auto occurs_elsewhere = [&](SymbolId id, std::size_t self) {
    for (std::size_t i = 0; i < prods.size(); ++i) {
      if (i == self) continue;
      for (SymbolId other : prods[i].first)
        if (other == id) return true;
      for (SymbolId other : prods[i].second)
        if (other == id) return true;
    }
    return false;
  };

  for (std::size_t i = 0; i < prods.size(); ++i) {
    auto [lhs, rhs] = prods[i];
    bool has_terminal = false;
    for (SymbolId id : rhs) has_terminal = has_terminal || vocab.is_terminal(id);
    if (!has_terminal) continue;

    TransformTrace::Replacement rep;
    rep.original = render(vocab, lhs, rhs);

    if (rhs.size() == 1) {
      // lone terminal: skip when the left side is already a dedicated
      // preterminal, otherwise interpose a fresh one
      if (lhs.size() == 1 &&
          (vocab.symbol(lhs[0]).synthesized || !occurs_elsewhere(lhs[0], i)))
        continue;
      SymbolId n = fresh.fresh(vocab);
      prods[i] = {lhs, {n}};
      prods.insert(prods.begin() + i + 1, {{n}, rhs});
      rep.replacements.push_back(render(vocab, lhs, {n}));
      rep.replacements.push_back(render(vocab, {n}, rhs));
      trace.introduced_symbols.push_back(vocab.name(n));
    } else {
      bool t0 = vocab.is_terminal(rhs[0]);
      bool t1 = vocab.is_terminal(rhs[1]);
      if (t0 && t1) {
        SymbolId n1 = fresh.fresh(vocab);
        SymbolId n2 = fresh.fresh(vocab);
        prods[i] = {lhs, {n1, n2}};
        prods.insert(prods.begin() + i + 1, {{n1}, {rhs[0]}});
        prods.insert(prods.begin() + i + 2, {{n2}, {rhs[1]}});
        rep.replacements.push_back(render(vocab, lhs, {n1, n2}));
        rep.replacements.push_back(render(vocab, {n1}, {rhs[0]}));
        rep.replacements.push_back(render(vocab, {n2}, {rhs[1]}));
        trace.introduced_symbols.push_back(vocab.name(n1));
        trace.introduced_symbols.push_back(vocab.name(n2));
      } else {
        SymbolId n = fresh.fresh(vocab);
        SymbolString shortened = t0 ? SymbolString{n, rhs[1]} : SymbolString{rhs[0], n};
        SymbolId t = t0 ? rhs[0] : rhs[1];
        prods[i] = {lhs, shortened};
        prods.insert(prods.begin() + i + 1, {{n}, {t}});
        rep.replacements.push_back(render(vocab, lhs, shortened));
        rep.replacements.push_back(render(vocab, {n}, {t}));
        trace.introduced_symbols.push_back(vocab.name(n));
      }
    }
    trace.replaced.push_back(std::move(rep));
  }
  return {with_productions(vocab, prods), std::move(trace)};
}

TransformResult prepare(const Grammar& g) {
  for (const ValidationIssue& issue : validate(g))
    if (issue.severity == Severity::error)
      throw std::invalid_argument("prepare: invalid grammar: " + issue.message);

  FreshSymbolSource fresh;
  TransformResult a = unique_initial(g, fresh);
  TransformResult b = normalize(a.grammar, fresh);
  TransformResult c = isolate_terminals(b.grammar, fresh);
  TransformTrace trace = std::move(a.trace);
  trace.append(std::move(b.trace));
  trace.append(std::move(c.trace));
  return {std::move(c.grammar), std::move(trace)};
}

}  // namespace semithue
