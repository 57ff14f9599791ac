/* rewrite.hh -- ground-truth reduction semantics: occurrences, applications
 * and leftmost applicability. */

#ifndef SEMITHUE_REWRITE_HH_
#define SEMITHUE_REWRITE_HH_

#include <set>
#include <vector>

#include "semithue/grammar.hh"

namespace semithue {

/// A located match of a production's left side inside a host string:
/// host[start, end) equals the lhs, end == start + |lhs|.
struct Occurrence {
  int production;
  int start;
  int end;

  bool operator==(const Occurrence&) const = default;
  auto operator<=>(const Occurrence&) const = default;
};

/// How "leftmost applicable" is decided.
///
/// `strict` is the literal conjunctive definition: an occurrence qualifies
/// only if its lhs is no longer than every other occurrence's lhs AND it
/// starts no later. The two conjuncts can rule each other out, so strict
/// mode may select nothing even when occurrences exist.
///
/// `operational` selects the occurrences with the least end index, and among
/// those the ones with the longest lhs. It is never empty when occurrences
/// exist, reproduces the worked examples, and is the order in which the
/// production machine scans (pair redexes before single-symbol redexes at
/// each position). Operational is the default everywhere.
enum class ApplicabilityMode { operational, strict };

/// All start indices where production `production` of g matches inside s,
/// in increasing order; overlapping matches included.
std::vector<Occurrence> occurrences(const Grammar& g, int production,
                                    const SymbolString& s);

/// Occurrences of every production of g inside s, ordered by
/// (start, end, production index).
std::vector<Occurrence> all_occurrences(const Grammar& g, const SymbolString& s);

/// Replaces the matched lhs by the production's rhs.
/// Throws std::invalid_argument if o does not actually match s.
SymbolString apply_at(const Grammar& g, const SymbolString& s, const Occurrence& o);

std::vector<Occurrence> leftmost_applicable(const Grammar& g, const SymbolString& s,
                                            ApplicabilityMode mode);

std::set<SymbolString> leftmost_successors(const Grammar& g, const SymbolString& s,
                                           ApplicabilityMode mode);

/// One application of every occurrence of every production.
std::set<SymbolString> full_successors(const Grammar& g, const SymbolString& s);

}  // namespace semithue

#endif  // SEMITHUE_REWRITE_HH_
