#include "semithue/rewrite.hh"

#include <algorithm>
#include <stdexcept>

namespace semithue {

std::vector<Occurrence> occurrences(const Grammar& g, int production,
                                    const SymbolString& s) {
  const SymbolString& lhs = g.productions()[production].lhs;
  std::vector<Occurrence> out;
  if (lhs.empty() || lhs.size() > s.size()) return out;
  for (std::size_t start = 0; start + lhs.size() <= s.size(); ++start) {
    if (std::equal(lhs.begin(), lhs.end(), s.begin() + start))
      out.push_back({production, static_cast<int>(start),
                     static_cast<int>(start + lhs.size())});
  }
  return out;
}

std::vector<Occurrence> all_occurrences(const Grammar& g, const SymbolString& s) {
  std::vector<Occurrence> out;
  for (int p = 0; p < static_cast<int>(g.productions().size()); ++p) {
    auto found = occurrences(g, p, s);
    out.insert(out.end(), found.begin(), found.end());
  }
  std::sort(out.begin(), out.end(), [](const Occurrence& a, const Occurrence& b) {
    return std::tie(a.start, a.end, a.production) < std::tie(b.start, b.end, b.production);
  });
  return out;
}

SymbolString apply_at(const Grammar& g, const SymbolString& s, const Occurrence& o) {
  const Production& p = g.productions()[o.production];
  if (o.start < 0 || o.end != o.start + static_cast<int>(p.lhs.size()) ||
      o.end > static_cast<int>(s.size()) ||
      !std::equal(p.lhs.begin(), p.lhs.end(), s.begin() + o.start))
    throw std::invalid_argument("occurrence does not match the host string");
  SymbolString out;
  out.reserve(s.size() - p.lhs.size() + p.rhs.size());
  out.insert(out.end(), s.begin(), s.begin() + o.start);
  out.insert(out.end(), p.rhs.begin(), p.rhs.end());
  out.insert(out.end(), s.begin() + o.end, s.end());
  return out;
}

std::vector<Occurrence> leftmost_applicable(const Grammar& g, const SymbolString& s,
                                            ApplicabilityMode mode) {
  std::vector<Occurrence> all = all_occurrences(g, s);
  if (all.empty()) return all;

  std::vector<Occurrence> out;
  if (mode == ApplicabilityMode::strict) {
    for (const Occurrence& o : all) {
      bool qualifies = true;
      int len = o.end - o.start;
      for (const Occurrence& other : all) {
        int other_len = other.end - other.start;
        if (len > other_len || o.start > other.start) {
          qualifies = false;
          break;
        }
      }
      if (qualifies) out.push_back(o);
    }
    return out;
  }

  int least_end = all.front().end;
  for (const Occurrence& o : all) least_end = std::min(least_end, o.end);
  int longest = 0;
  for (const Occurrence& o : all)
    if (o.end == least_end) longest = std::max(longest, o.end - o.start);
  for (const Occurrence& o : all)
    if (o.end == least_end && o.end - o.start == longest) out.push_back(o);
  return out;
}

std::set<SymbolString> leftmost_successors(const Grammar& g, const SymbolString& s,
                                           ApplicabilityMode mode) {
  std::set<SymbolString> out;
  for (const Occurrence& o : leftmost_applicable(g, s, mode))
    out.insert(apply_at(g, s, o));
  return out;
}

std::set<SymbolString> full_successors(const Grammar& g, const SymbolString& s) {
  std::set<SymbolString> out;
  for (const Occurrence& o : all_occurrences(g, s)) out.insert(apply_at(g, s, o));
  return out;
}

}  // namespace semithue
