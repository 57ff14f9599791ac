/* grammar.hh -- production grammars (semi-Thue systems): symbols, productions,
 * duality and validity checks. */

#ifndef SEMITHUE_GRAMMAR_HH_
#define SEMITHUE_GRAMMAR_HH_

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace semithue {

using SymbolId = std::int32_t;
inline constexpr SymbolId kNoSymbol = -1;

/// Names beginning with this prefix are reserved for synthesized symbols
/// (the fresh symbols introduced by the grammar transformations), so they
/// can never collide with user vocabulary.
inline constexpr char kSynthesizedPrefix = '_';

/// A vocabulary element. Symbols are owned by a Grammar and referred to by
/// SymbolId elsewhere; `generation` is the fresh-symbol counter value for
/// synthesized symbols and -1 for user symbols.
struct Symbol {
  std::string name;
  bool synthesized = false;
  int generation = -1;

  bool operator==(const Symbol&) const = default;
};

/// A string over the vocabulary. Empty strings occur only as intermediate
/// values; production sides and sentences are non-empty.
using SymbolString = std::vector<SymbolId>;

struct Production {
  SymbolString lhs;
  SymbolString rhs;
  int index = 0;  // declaration order; the Markov strategy breaks ties with it
};

enum class Severity { error, warning };

struct ValidationIssue {
  Severity severity;
  std::string message;
};

/// A production grammar: a vocabulary with initial and terminal
/// sub-vocabularies and an ordered, finite production list.
///
/// Grammars are built up (by the parser or the transformations) and then
/// treated as immutable values: all the algorithms in this library take
/// `const Grammar&` and never mutate, so sharing across threads is safe.
class Grammar {
 public:
  /// Adds `name` to the vocabulary, or returns the existing id. Symbols whose
  /// name starts with the reserved prefix are recorded as synthesized.
  SymbolId intern(std::string_view name);

  /// Id of `name`, or kNoSymbol.
  SymbolId find(std::string_view name) const;

  const Symbol& symbol(SymbolId id) const { return symbols_[id]; }
  const std::string& name(SymbolId id) const { return symbols_[id].name; }
  std::size_t vocabulary_size() const { return symbols_.size(); }

  void mark_initial(SymbolId id, bool value = true);
  void mark_terminal(SymbolId id, bool value = true);
  bool is_initial(SymbolId id) const { return initial_[id]; }
  bool is_terminal(SymbolId id) const { return terminal_[id]; }

  /// Initial / terminal symbols in vocabulary order.
  std::vector<SymbolId> initial_symbols() const;
  std::vector<SymbolId> terminal_symbols() const;

  void add_production(SymbolString lhs, SymbolString rhs);
  const std::vector<Production>& productions() const { return productions_; }

  /// Set by dual(): dual grammars legitimately carry terminals on production
  /// left sides and are exempt from that validity check.
  bool is_dual() const { return dual_; }
  void set_dual(bool value) { dual_ = value; }

  /// Splits whitespace-separated symbol names and resolves them.
  /// Throws std::invalid_argument on an unknown symbol.
  SymbolString parse_string(std::string_view text) const;

  /// Renders a string as space-separated symbol names.
  std::string render(const SymbolString& s) const;
  std::string render(const Production& p) const;

 private:
  std::vector<Symbol> symbols_;
  std::unordered_map<std::string, SymbolId> by_name_;
  std::vector<char> initial_;
  std::vector<char> terminal_;
  std::vector<Production> productions_;
  bool dual_ = false;
};

/// Checks the grammar assumptions: subset containment is structural here, so
/// the returned issues cover empty production sides, terminals on a left
/// side (unless the grammar is a dual), and production-less initial symbols
/// (a warning; only well-formed grammars need them).
std::vector<ValidationIssue> validate(const Grammar& g);

/// True when validate() reports no error-severity issue.
bool is_valid(const Grammar& g);

/// The dual grammar: initial and terminal sets swapped, every production
/// reversed, declaration order preserved.
Grammar dual(const Grammar& g);

/// True iff s is non-empty and all of its symbols are terminal.
bool is_sentence(const Grammar& g, const SymbolString& s);

/// True iff every production has both sides of length 1 or 2.
bool is_normal(const Grammar& g);

/// Structural equality up to symbol-id layout: same vocabulary (by name and
/// origin), same initial/terminal marks, same production list.
bool equivalent(const Grammar& a, const Grammar& b);

}  // namespace semithue

#endif  // SEMITHUE_GRAMMAR_HH_
