#include "semithue/grammar.hh"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace semithue {

namespace {

int trailing_number(std::string_view name) {
  std::size_t pos = name.size();
  while (pos > 0 && std::isdigit(static_cast<unsigned char>(name[pos - 1]))) --pos;
  if (pos == name.size()) return -1;
  return std::stoi(std::string(name.substr(pos)));
}

}  // namespace

SymbolId Grammar::intern(std::string_view name) {
  auto it = by_name_.find(std::string(name));
  if (it != by_name_.end()) return it->second;
  Symbol sym;
  sym.name = std::string(name);
  sym.synthesized = !name.empty() && name.front() == kSynthesizedPrefix;
  sym.generation = sym.synthesized ? trailing_number(name) : -1;
  SymbolId id = static_cast<SymbolId>(symbols_.size());
  symbols_.push_back(std::move(sym));
  initial_.push_back(0);
  terminal_.push_back(0);
  by_name_.emplace(std::string(name), id);
  return id;
}

SymbolId Grammar::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  return it == by_name_.end() ? kNoSymbol : it->second;
}

void Grammar::mark_initial(SymbolId id, bool value) { initial_[id] = value; }
void Grammar::mark_terminal(SymbolId id, bool value) { terminal_[id] = value; }

std::vector<SymbolId> Grammar::initial_symbols() const {
  std::vector<SymbolId> out;
  for (SymbolId id = 0; id < static_cast<SymbolId>(symbols_.size()); ++id)
    if (initial_[id]) out.push_back(id);
  return out;
}

std::vector<SymbolId> Grammar::terminal_symbols() const {
  std::vector<SymbolId> out;
  for (SymbolId id = 0; id < static_cast<SymbolId>(symbols_.size()); ++id)
    if (terminal_[id]) out.push_back(id);
  return out;
}

void Grammar::add_production(SymbolString lhs, SymbolString rhs) {
  Production p;
  p.lhs = std::move(lhs);
  p.rhs = std::move(rhs);
  p.index = static_cast<int>(productions_.size());
  productions_.push_back(std::move(p));
}

SymbolString Grammar::parse_string(std::string_view text) const {
  SymbolString out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    SymbolId id = find(token);
    if (id == kNoSymbol)
      throw std::invalid_argument("unknown symbol: " + token);
    out.push_back(id);
  }
  return out;
}

std::string Grammar::render(const SymbolString& s) const {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += name(s[i]);
  }
  return out;
}

std::string Grammar::render(const Production& p) const {
  return render(p.lhs) + " -> " + render(p.rhs);
}

std::vector<ValidationIssue> validate(const Grammar& g) {
  std::vector<ValidationIssue> issues;
  for (const Production& p : g.productions()) {
    if (p.lhs.empty())
      issues.push_back({Severity::error,
                        "production " + std::to_string(p.index) + " has an empty left side"});
    if (p.rhs.empty())
      issues.push_back({Severity::error,
                        "production " + std::to_string(p.index) + " has an empty right side"});
    if (!g.is_dual()) {
      for (SymbolId id : p.lhs) {
        if (g.is_terminal(id)) {
          issues.push_back({Severity::error, "terminal symbol " + g.name(id) +
                                                 " on the left side of production " +
                                                 g.render(p)});
          break;
        }
      }
    }
  }
  for (SymbolId id : g.initial_symbols()) {
    bool has_production = false;
    for (const Production& p : g.productions())
      if (std::find(p.lhs.begin(), p.lhs.end(), id) != p.lhs.end()) {
        has_production = true;
        break;
      }
    if (!has_production)
      issues.push_back(
          {Severity::warning, "no production for initial symbol " + g.name(id)});
  }
  return issues;
}

bool is_valid(const Grammar& g) {
  for (const ValidationIssue& issue : validate(g))
    if (issue.severity == Severity::error) return false;
  return true;
}

Grammar dual(const Grammar& g) {
  Grammar d;
  for (SymbolId id = 0; id < static_cast<SymbolId>(g.vocabulary_size()); ++id) {
    SymbolId nid = d.intern(g.name(id));
    d.mark_initial(nid, g.is_terminal(id));
    d.mark_terminal(nid, g.is_initial(id));
  }
  for (const Production& p : g.productions()) d.add_production(p.rhs, p.lhs);
  d.set_dual(!g.is_dual());
  return d;
}

bool is_sentence(const Grammar& g, const SymbolString& s) {
  if (s.empty()) return false;
  for (SymbolId id : s)
    if (!g.is_terminal(id)) return false;
  return true;
}

bool is_normal(const Grammar& g) {
  for (const Production& p : g.productions())
    if (p.lhs.size() > 2 || p.rhs.size() > 2 || p.lhs.empty() || p.rhs.empty())
      return false;
  return true;
}

bool equivalent(const Grammar& a, const Grammar& b) {
  if (a.vocabulary_size() != b.vocabulary_size()) return false;
  if (a.productions().size() != b.productions().size()) return false;
  if (a.is_dual() != b.is_dual()) return false;
  for (SymbolId id = 0; id < static_cast<SymbolId>(a.vocabulary_size()); ++id) {
    SymbolId other = b.find(a.name(id));
    if (other == kNoSymbol) return false;
    if (a.symbol(id).synthesized != b.symbol(other).synthesized) return false;
    if (a.is_initial(id) != b.is_initial(other)) return false;
    if (a.is_terminal(id) != b.is_terminal(other)) return false;
  }
  auto rename = [&](const SymbolString& s) {
    std::vector<SymbolId> out;
    out.reserve(s.size());
    for (SymbolId id : s) out.push_back(b.find(a.name(id)));
    return out;
  };
  for (std::size_t i = 0; i < a.productions().size(); ++i) {
    const Production& pa = a.productions()[i];
    const Production& pb = b.productions()[i];
    if (rename(pa.lhs) != pb.lhs || rename(pa.rhs) != pb.rhs) return false;
  }
  return true;
}

}  // namespace semithue
