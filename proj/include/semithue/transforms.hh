/* transforms.hh -- the three leftmost-language-preserving grammar
 * transformations: unique initial symbol, normalization, terminal isolation,
 * and their composition prepare(). */

#ifndef SEMITHUE_TRANSFORMS_HH_
#define SEMITHUE_TRANSFORMS_HH_

#include <string>
#include <vector>

#include "semithue/grammar.hh"

namespace semithue {

/// Emits synthesized symbols guaranteed fresh: absent from the grammar's
/// vocabulary and from everything emitted before.
class FreshSymbolSource {
 public:
  explicit FreshSymbolSource(std::string prefix = std::string(1, kSynthesizedPrefix) + "N")
      : prefix_(std::move(prefix)) {}

  /// Interns the next fresh symbol into g and returns its id.
  SymbolId fresh(Grammar& g);

  int counter() const { return counter_; }

 private:
  std::string prefix_;
  int counter_ = 0;
};

/// Audit trail: which productions were replaced by what, and which symbols
/// were introduced. Rendered as text so it stays readable across the
/// differently-numbered grammars involved.
struct TransformTrace {
  struct Replacement {
    std::string original;
    std::vector<std::string> replacements;
  };
  std::vector<Replacement> replaced;
  std::vector<std::string> introduced_symbols;

  void append(TransformTrace other);
};

struct TransformResult {
  Grammar grammar;
  TransformTrace trace;
};

/// Gives the grammar a single initial symbol: no-op on singleton initial
/// sets, otherwise a fresh S with one production S -> A per initial A.
TransformResult unique_initial(const Grammar& g, FreshSymbolSource& fresh);

/// Rewrites until every production has both sides of length <= 2.
/// A right side A B Δ becomes N Δ plus N -> A B; a left side A B Γ becomes
/// N Γ plus A B -> N, with one shared N (and a single A B -> N production)
/// per distinct two-symbol prefix A B.
TransformResult normalize(const Grammar& g, FreshSymbolSource& fresh);

/// Confines terminal generation to dedicated productions N -> t.
/// Requires a normal grammar (throws std::invalid_argument otherwise).
/// Right sides of length two containing terminals are split per schema
/// (A t / t A / t1 t2); a right side that is a lone terminal gets an
/// indirection Γ -> N, N -> t unless the left side is already a dedicated
/// preterminal (a synthesized symbol, or a symbol occurring in no other
/// production).
TransformResult isolate_terminals(const Grammar& g, FreshSymbolSource& fresh);

/// unique_initial, then normalize, then isolate_terminals, with one shared
/// fresh-symbol source. Requires validate(g) to report no errors.
TransformResult prepare(const Grammar& g);

}  // namespace semithue

#endif  // SEMITHUE_TRANSFORMS_HH_
