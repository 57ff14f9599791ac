/* machine.hh -- the three-tape production machine: tapes, the seven moves,
 * generative and recognitive configurations, collapsed transitions, and the
 * string-to-state encoding.
 *
 * The machine has three tapes of squares, each square empty or holding one
 * symbol, with the three scanned squares aligned. The middle tape is the
 * input/output tape and only ever moves left; top and bottom are storage
 * tapes and behave as stacks: the bottom holds the already-processed
 * context (stack top adjacent to the head), the top holds the unprocessed
 * suffix (first symbol adjacent to the head).
 *
 * "Moving left" shifts the tape content one square left past the fixed
 * head, so the head next scans the square that was on its right; "moving
 * right" is the mirror image.
 *
 * The seven moves, written as (top, middle, bottom) scanned squares with
 * "-" for an empty square and (A) for a square that may be empty:
 *
 *   1  (C, -, (A))  ->  scanned C transfers from top to middle
 *   2  (-, B, -)    ->  scanned B transfers from middle to bottom; top left
 *   3  (C, B, (A))  ->  top right  (stashes C onto the top stack)
 *   4  (-, B, A)    ->  bottom left  (buries A one square deeper)
 *   5  (-, B, (A))  ->  middle <- C, top <- (D), bottom right,
 *                       for a production (A)B -> C(D): the left side must
 *                       equal exactly AB when the bottom scanned square
 *                       holds A and B alone when it is empty; when A was
 *                       consumed the bottom scanned square is erased first
 *   6  (-, D, -)    ->  top left, middle left, if D is terminal (emit)
 *   7  (-, -, (A))  ->  middle left (accept the next input symbol)
 *
 * Moves are attempted in a committed order -- 5,6,1,2,3,4 for generation
 * over the prepared grammar, 5,7,1,2,3,4 for recognition over its dual --
 * and the first move whose guard holds is taken. Nondeterminism lives only
 * in the production choice of move 5 (and, in extended mode, in the choice
 * of skipping move 5 for the next applicable move, which extends the
 * machine from the leftmost to the full language).
 */

#ifndef SEMITHUE_MACHINE_HH_
#define SEMITHUE_MACHINE_HH_

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semithue/graph.hh"

namespace semithue {

struct Tape {
  std::vector<SymbolId> left;   // natural order; back() is adjacent to the head
  SymbolId scanned = kNoSymbol;
  std::vector<SymbolId> right;  // natural order; front() is adjacent to the head

  void shift_left();
  void shift_right();
  bool blank() const { return left.empty() && scanned == kNoSymbol && right.empty(); }
  std::size_t symbol_count() const {
    return left.size() + right.size() + (scanned == kNoSymbol ? 0 : 1);
  }

  bool operator==(const Tape&) const = default;
};

/// A machine configuration. Tapes are stored trimmed (no empty squares are
/// ever recorded inside a region), so structural equality is configuration
/// equality.
struct MachineState {
  Tape top;
  Tape middle;
  Tape bottom;

  std::size_t total_symbols() const {
    return top.symbol_count() + middle.symbol_count() + bottom.symbol_count();
  }

  bool operator==(const MachineState&) const = default;
};

struct MachineStateHash {
  std::size_t operator()(const MachineState& s) const;
};

using MachineGraph = TransitionGraph<MachineState, MachineStateHash>;

enum class Strategy { nondeterministic, markov };

/// Machine parameters: the grammar the moves consult (the prepared grammar
/// for generation, its dual for recognition), the committed move order, the
/// extended-mode flag, and the move-5 strategy.
class MachineConfig {
 public:
  /// Generative machine over a prepared grammar (normal, unique initial
  /// symbol). Throws std::invalid_argument otherwise.
  static MachineConfig generative(const Grammar& prepared, bool extended = false,
                                  Strategy strategy = Strategy::nondeterministic);

  /// Recognitive machine: stores dual(prepared) and the recognitive order.
  static MachineConfig recognitive(const Grammar& prepared, bool extended = false);

  const Grammar& grammar() const { return grammar_; }
  const std::array<int, 6>& move_order() const { return order_; }
  bool extended() const { return extended_; }
  Strategy strategy() const { return strategy_; }
  bool recognitive_mode() const { return recognitive_; }

  /// The unique initial symbol S of the prepared grammar (also the dual's
  /// unique terminal in recognitive mode).
  SymbolId start_symbol() const { return start_; }

 private:
  MachineConfig() = default;

  Grammar grammar_;
  std::array<int, 6> order_{};
  bool extended_ = false;
  Strategy strategy_ = Strategy::nondeterministic;
  bool recognitive_ = false;
  SymbolId start_ = kNoSymbol;
};

/// One applied move: the move id (0 for the initial snapshot), the
/// production index for move 5 (-1 otherwise), and the resulting state.
struct TraceRecord {
  int move = 0;
  int production = -1;
  MachineState state;
};

/// S on the top scanned square, everything else blank.
MachineState initial_generative(const MachineConfig& cfg);

/// The sentence on the middle tape right of the (empty) scanned square.
/// Throws std::invalid_argument on an empty sentence.
MachineState initial_recognitive(const SymbolString& sentence);

/// Generative terminal shape: the emitted sentence in the middle-left
/// region, every other square blank.
bool is_generative_terminal(const MachineState& s);

/// Recognitive terminal shape: S on the bottom scanned square, everything
/// else blank.
bool is_recognitive_terminal(const MachineConfig& cfg, const MachineState& s);

/// Production indices whose left side matches the move-5 redex
/// (bottom scanned, if any, followed by middle scanned), declaration order.
std::vector<int> move5_matches(const MachineConfig& cfg, const MachineState& s);

bool move5_enabled(const MachineConfig& cfg, const MachineState& s);

struct StepOutcome {
  int move;
  int production;  // -1 unless move 5
  MachineState state;
};

/// Committed-order step: all outcomes of the first move in the configured
/// order whose guard holds. Move 5 yields one outcome per matching
/// production (only the least-index one under the Markov strategy); in
/// extended mode a move-5-enabled state additionally yields the outcome of
/// the next applicable move. Empty result means the machine has halted.
std::vector<StepOutcome> step(const MachineConfig& cfg, const MachineState& s);

struct AdvanceResult {
  MachineState state;
  bool move5_enabled = false;
  bool looped = false;  // deterministic cycle without reaching move 5: dead
  std::vector<TraceRecord> trail;
};

/// Runs non-5 moves in committed order until the state enables move 5 or
/// halts. Deterministic; a revisited state is reported as looped (the only
/// source is move 7 idling on exhausted input).
AdvanceResult advance(const MachineConfig& cfg, MachineState s);

/// One collapsed transition: move 5 via the given production, then the
/// deterministic non-5 continuation. Throws std::invalid_argument unless
/// move 5 applies via that production.
MachineState collapse(const MachineConfig& cfg, const MachineState& s, int production);

/// Collapsed-transition successors of a decision state: one per matching
/// production (label = production index) plus, in extended mode, the
/// skip branch (label -1).
std::vector<std::pair<MachineState, int>> collapse_successors(const MachineConfig& cfg,
                                                              const MachineState& s);

/// The decomposition of a string at its reduction frontier: terminal prefix,
/// processed nonterminal context, the located left side P1 P2 (or P2 alone)
/// of the operational leftmost occurrence, and the unprocessed suffix.
/// p2 is kNoSymbol only for all-terminal strings.
struct LeftmostDecomposition {
  SymbolString terminal_prefix;
  SymbolString context;
  SymbolId p1 = kNoSymbol;
  SymbolId p2 = kNoSymbol;
  SymbolString suffix;
};

/// nullopt when a terminal follows a nonterminal, or when the string holds
/// nonterminals but no production applies (the type cannot represent it).
std::optional<LeftmostDecomposition> decompose_leftmost(const Grammar& prepared,
                                                        const SymbolString& s);

/// The machine state representing a string mid-derivation: terminal prefix
/// emitted to middle-left, P2 on the middle scanned square, P1 on the bottom
/// scanned square, context on the bottom stack, suffix on the top stack.
/// Strings with no applicable production map to the terminal shape with the
/// whole string in middle-left. Throws std::invalid_argument when a terminal
/// follows a nonterminal.
MachineState to_machine_state(const Grammar& prepared, const SymbolString& s);

struct MachineRunResult {
  std::set<SymbolString> sentences;
  bool complete = true;
  MachineGraph graph;  // decision states under collapsed transitions
};

/// Explores every maximal move sequence (breadth-first over deduplicated
/// decision states) and collects the sentence of every terminal-shaped
/// state reached.
MachineRunResult run_generative(const MachineConfig& cfg, const Bounds& bounds);

struct RecognitionRunResult {
  bool recognized = false;
  bool complete = true;
  std::vector<TraceRecord> witness;  // shortest accepting run when recognized
  MachineGraph graph;
};

/// Runs the recognitive machine for the sentence over dual(prepared),
/// considering all move-5 choices concurrently (breadth-first).
RecognitionRunResult run_recognitive(const Grammar& prepared, const SymbolString& sentence,
                                     const Bounds& bounds, bool extended = false);

/// Renders a tape as "left [scanned] right" and a state as three such lines.
std::string render_tape(const Grammar& g, const Tape& t);
std::string render_state(const Grammar& g, const MachineState& s);
std::string render_trace(const Grammar& g, const std::vector<TraceRecord>& trace);

}  // namespace semithue

#endif  // SEMITHUE_MACHINE_HH_
